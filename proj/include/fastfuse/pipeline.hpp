#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fastfuse/features.hpp"
#include "fastfuse/filters.hpp"
#include "fastfuse/plane.hpp"

namespace fastfuse {

enum class BaseRule { saliency, average };
enum class DetailRule { cnn, max };

BaseRule parse_base_rule(std::string_view name);      // "saliency"/"s", "average"/"avg"
DetailRule parse_detail_rule(std::string_view name);  // "cnn", "max"
std::string to_string(BaseRule rule);
std::string to_string(DetailRule rule);

struct FusionConfig {
  int decomposition_radius = 15;
  GuidedFilterParams base_filter{45, 0.1};
  GuidedFilterParams detail_filter{7, 1e-6};
  std::string model = "resnet50";  // manifest path or name, see resolve_model_manifest
  int depth = 3;
  BaseRule base_rule = BaseRule::saliency;
  DetailRule detail_rule = DetailRule::cnn;

  // Throws ContractError for radii < 1 or non-positive epsilons.
  void validate() const;
  bool needs_model() const { return detail_rule == DetailRule::cnn; }
};

// K per-pixel weight planes. When normalized, every pixel's weights are
// non-negative and sum to one.
struct WeightMaps {
  std::vector<Plane> maps;
  bool normalized = false;
};

// Clamps negatives to zero and divides by the per-pixel sum. Pixels whose
// clamped weights are all zero get 1/K.
WeightMaps normalize_weights(std::vector<Plane> maps);

// Saliency rule: S_k / sum_j S_j (1/K where the sum is zero), guided by the
// source with base_filter, then normalized. Average rule: uniform 1/K.
WeightMaps base_weights(const SourceSet& sources, const FusionConfig& cfg);

// CNN rule: softmax over the l1 activity of each source's features at the
// configured depth, at feature resolution, then upsampled to source size.
std::vector<Plane> cnn_raw_weights(const SourceSet& sources, const FeatureExtractor& backend,
                                   int depth);

// One-hot argmax of per-pixel activity; ties go to the lowest index.
std::vector<Plane> argmax_weights(std::span<const Plane> activity);

// CNN rule: cnn_raw_weights. Max rule: argmax of |detail_k|. Either way the
// maps are then guided by the sources with detail_filter and normalized.
// backend may be null for the max rule.
WeightMaps detail_weights(const SourceSet& sources, std::span<const Plane> details,
                          const FusionConfig& cfg, const FeatureExtractor* backend);

// sum_k w_k * layer_k per pixel.
Plane fuse_base(std::span<const Plane> bases, const WeightMaps& w);
Plane fuse_detail(std::span<const Plane> details, const WeightMaps& w);

// clip(base + detail, 0, 1)
Plane reconstruct(const Plane& base, const Plane& detail);

// Wall-clock seconds per stage of one fusion.
struct StageTimings {
  double decompose = 0.0;
  double saliency = 0.0;       // saliency maps and raw base weights
  double features = 0.0;       // forward pass, l1, softmax, upsampling (or max rule)
  double base_guided = 0.0;    // guided filtering + normalization of base weights
  double detail_guided = 0.0;  // same for detail weights
  double reconstruct = 0.0;    // weighted sums, reconstruction, color conversion
  double total() const {
    return decompose + saliency + features + base_guided + detail_guided + reconstruct;
  }
};

// Intermediate results of a grayscale fusion.
struct FusionTrace {
  std::vector<DecompositionPair> layers;
  WeightMaps base_weights;
  WeightMaps detail_weights;
  Plane fused_base{1, 1};
  Plane fused_detail{1, 1};
};

// Fusion engine bound to one configuration and (for the CNN rule) one loaded
// backbone. fuse() is const and may be called concurrently.
class Fuser {
 public:
  // Loads the configured model when the detail rule needs it.
  explicit Fuser(FusionConfig cfg);
  Fuser(FusionConfig cfg, std::shared_ptr<const FeatureExtractor> backend);

  const FusionConfig& config() const { return cfg_; }
  const FeatureExtractor* backend() const { return backend_.get(); }

  Plane fuse(const SourceSet& sources, StageTimings* timings = nullptr,
             FusionTrace* trace = nullptr) const;

  // Y planes are fused; Cb and Cr are averaged over the sources.
  ColorImage fuse(std::span<const ColorImage> sources, StageTimings* timings = nullptr) const;

 private:
  FusionConfig cfg_;
  std::shared_ptr<const FeatureExtractor> backend_;
};

std::shared_ptr<const FeatureExtractor> load_backbone(const std::string& model_reference);

}  // namespace fastfuse
