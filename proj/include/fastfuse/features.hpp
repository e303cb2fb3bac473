#pragma once

#include <array>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fastfuse/plane.hpp"

namespace fastfuse {

// C x h x w stack of non-negative (post-ReLU) activations, channel-major.
struct FeatureTensor {
  int channels = 0;
  int height = 0;
  int width = 0;
  std::vector<float> values;

  float at(int c, int y, int x) const {
    return values[(static_cast<std::size_t>(c) * static_cast<std::size_t>(height) +
                   static_cast<std::size_t>(y)) *
                      static_cast<std::size_t>(width) +
                  static_cast<std::size_t>(x)];
  }
};

struct DepthInfo {
  int depth = 0;
  std::string output;  // graph value holding the block output
  int stride = 1;
  int channels = 0;
};

// Contents of a model manifest (<name>.json next to <name>.onnx).
struct ModelSpec {
  std::string name;
  std::filesystem::path model_file;
  std::string input_name = "input";
  bool pretrained = false;
  std::string source;
  std::array<double, 3> mean{0.0, 0.0, 0.0};
  std::array<double, 3> stddev{1.0, 1.0, 1.0};
  int minimum_input_size = 1;
  int default_depth = 1;
  std::vector<DepthInfo> depths;

  // Throws ContractError for a depth the manifest does not list.
  const DepthInfo& depth_info(int depth) const;

  // model_file is resolved relative to the manifest's directory.
  static ModelSpec load(const std::filesystem::path& manifest);
};

// Resolves a model reference to a manifest path. A reference naming an
// existing file (or ending in .json) is used as-is; a bare name such as
// "resnet50" is looked up as <dir>/<name>.json in $FUSE_MODEL_DIR, then in
// the default model directory compiled into the library.
std::filesystem::path resolve_model_manifest(const std::string& reference);
std::filesystem::path default_model_dir();

// Pluggable inference backend for a frozen backbone.
class FeatureExtractor {
 public:
  virtual ~FeatureExtractor() = default;

  virtual const ModelSpec& spec() const = 0;

  // One batched forward pass up to the end of block `depth`. Gray planes are
  // replicated to three channels and normalized with the manifest constants.
  // Every output tensor is clamped at zero and has spatial size
  // ceil(source / stride). All images must share one size, at least the
  // manifest minimum.
  virtual std::vector<FeatureTensor> extract(std::span<const Plane> images, int depth) const = 0;
};

// ONNX-backed extractor. Safe for concurrent extract() calls.
std::unique_ptr<FeatureExtractor> open_backbone(const ModelSpec& spec);

FeatureTensor extract_features(const Plane& image, const FeatureExtractor& backend, int depth);

// Per-pixel l1 norm across channels (h x w activity map).
Plane aggregate_l1(const FeatureTensor& t);

// Pixelwise softmax across K activity maps, max-subtracted for stability.
std::vector<Plane> softmax_weights(std::span<const Plane> activity);

// Source pixel floor(dst * src_dim / target_dim) along each axis.
Plane upsample_nearest(const Plane& p, int target_width, int target_height);

}  // namespace fastfuse
