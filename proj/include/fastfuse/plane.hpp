#pragma once

#include <cstddef>
#include <iterator>
#include <span>
#include <vector>

namespace fastfuse {

// Single-channel row-major raster of finite doubles. Images live in [0,1];
// detail layers are signed.
class Plane {
 public:
  Plane(int width, int height, double fill = 0.0);
  Plane(int width, int height, std::vector<double> samples);

  // Plane whose sample i is sample(i), written once without a prior fill.
  // sample must return finite values; they are not re-checked.
  template <class F>
  static Plane generate(int width, int height, F sample);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return samples_.size(); }
  bool same_shape(const Plane& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  double operator()(int x, int y) const { return samples_[index(x, y)]; }
  double& operator()(int x, int y) { return samples_[index(x, y)]; }
  double operator[](std::size_t i) const { return samples_[i]; }
  double& operator[](std::size_t i) { return samples_[i]; }

  std::span<const double> samples() const { return samples_; }
  std::span<double> samples() { return samples_; }
  std::span<const double> row(int y) const {
    return std::span<const double>(samples_).subspan(index(0, y), width_);
  }
  std::span<double> row(int y) {
    return std::span<double>(samples_).subspan(index(0, y), width_);
  }

  double min() const;
  double max() const;
  double mean() const;

  friend bool operator==(const Plane&, const Plane&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  struct Unchecked {};
  Plane(int width, int height, std::vector<double> samples, Unchecked);

  int width_;
  int height_;
  std::vector<double> samples_;
};

namespace detail {

// Forward iterator over f(i), so a vector can construct each element in place.
template <class F>
struct GeneratorIterator {
  using iterator_category = std::forward_iterator_tag;
  using value_type = double;
  using difference_type = std::ptrdiff_t;
  using pointer = const double*;
  using reference = double;

  std::size_t i;
  const F* f;

  double operator*() const { return (*f)(i); }
  GeneratorIterator& operator++() {
    ++i;
    return *this;
  }
  GeneratorIterator operator++(int) {
    GeneratorIterator t = *this;
    ++i;
    return t;
  }
  bool operator==(const GeneratorIterator& o) const { return i == o.i; }
};

}  // namespace detail

template <class F>
Plane Plane::generate(int width, int height, F sample) {
  using Iter = detail::GeneratorIterator<F>;
  const std::size_t n = width > 0 && height > 0
                            ? static_cast<std::size_t>(width) * static_cast<std::size_t>(height)
                            : 0;
  return Plane(width, height, std::vector<double>(Iter{0, &sample}, Iter{n, &sample}), Unchecked{});
}

// Each sample replaced by min(hi, max(lo, s)).
Plane clip(const Plane& p, double lo = 0.0, double hi = 1.0);

// Largest per-sample absolute difference; planes must share a shape.
double max_abs_diff(const Plane& a, const Plane& b);

// K >= 2 co-registered planes of identical size.
class SourceSet {
 public:
  explicit SourceSet(std::vector<Plane> planes);

  std::size_t count() const { return planes_.size(); }
  int width() const { return planes_.front().width(); }
  int height() const { return planes_.front().height(); }
  const Plane& operator[](std::size_t k) const { return planes_[k]; }
  const std::vector<Plane>& planes() const { return planes_; }

  auto begin() const { return planes_.begin(); }
  auto end() const { return planes_.end(); }

 private:
  std::vector<Plane> planes_;
};

struct ColorImage {
  Plane r;
  Plane g;
  Plane b;

  ColorImage(Plane red, Plane green, Plane blue);

  int width() const { return r.width(); }
  int height() const { return r.height(); }
};

// Throws ContractError unless every sample lies in [lo, hi].
void require_range(const Plane& p, double lo, double hi, const char* what);

// Throws ContractError unless all planes share one shape.
void require_same_shape(std::span<const Plane> planes, const char* what);

}  // namespace fastfuse
