#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fastfuse/plane.hpp"

namespace fastfuse {

// 8-bit gray levels of a plane, row-major.
struct LevelImage {
  int width;
  int height;
  std::vector<std::uint8_t> levels;
};

struct Histogram256 {
  std::array<std::int64_t, 256> bins{};
  std::int64_t total = 0;
};

// level = round-half-up(s * 255). Samples must lie in [0,1].
LevelImage quantize256(const Plane& p);

Histogram256 histogram(const LevelImage& img);

// Per-level contrast sum_i M(i) * |level - i| for all 256 levels.
std::array<std::int64_t, 256> level_contrast(const Histogram256& hist);

// Histogram-contrast saliency before normalization: for each pixel the sum of
// absolute level differences to every pixel of the image. Exact integers.
std::vector<std::int64_t> raw_saliency(const LevelImage& img);

// raw_saliency min-max normalized to [0,1]. A constant-saliency image yields
// the all-0.5 plane.
Plane saliency_map(const Plane& p);

}  // namespace fastfuse
