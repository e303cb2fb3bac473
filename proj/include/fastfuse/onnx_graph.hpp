#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace fastfuse::nn {

namespace detail {
struct PreparedConv;
struct BufferCache;
}

// Dense float tensor, row-major (NCHW for image activations).
struct Tensor {
  std::vector<std::int64_t> shape;
  std::vector<float> data;

  Tensor() = default;
  explicit Tensor(std::vector<std::int64_t> dims, float fill = 0.0f);

  std::int64_t dim(std::size_t i) const { return shape.at(i); }
  std::size_t numel() const { return data.size(); }
};

using AttributeValue =
    std::variant<std::int64_t, float, std::string, std::vector<std::int64_t>, std::vector<float>>;

// Inference-only executor for feed-forward CNN graphs stored as ONNX.
//
// Supported operators: Conv (grouped, strided, dilated, explicit or SAME/VALID
// auto padding), Relu, Clip, Add (same-shape), MaxPool (ceil_mode 0),
// BatchNormalization (inference form) and Identity. Anything else raises
// BackendError at load time.
//
// Activations are held channels-last internally; run() takes and returns
// NCHW tensors. Convolution weights are re-laid out once at load time. A Conv
// whose output feeds only an Add and/or Relu/Clip is executed as one fused
// kernel.
//
// run() does not mutate the graph and keeps all activations local to the
// call, so one Graph may serve concurrent callers. Freed activation buffers
// are retained for reuse by later calls.
class Graph {
 public:
  static Graph load(const std::filesystem::path& path);
  static Graph parse(std::string_view bytes);

  // Evaluates only the nodes the requested outputs depend on. Intermediate
  // activations are released as soon as their last consumer has run.
  std::map<std::string, Tensor> run(const std::map<std::string, Tensor>& feeds,
                                    std::span<const std::string> outputs) const;

  const std::vector<std::string>& input_names() const { return inputs_; }
  const std::vector<std::string>& output_names() const { return outputs_; }
  bool produces(const std::string& value) const;
  std::size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    std::string op;
    std::string name;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::map<std::string, AttributeValue> attributes;
  };

  std::vector<Node> nodes_;
  // Parallel to nodes_; set for Conv nodes only.
  std::vector<std::shared_ptr<const detail::PreparedConv>> prepared_;
  // Activation storage kept between runs (mutex-guarded) so repeated
  // inference does not page large buffers in from the OS each time.
  std::shared_ptr<detail::BufferCache> cache_;
  std::unordered_map<std::string, Tensor> initializers_;
  std::vector<std::string> inputs_;
  std::vector<std::string> outputs_;
};

// Stand-alone kernels, exposed for testing against naive references.
struct ConvParams {
  std::vector<std::int64_t> strides{1, 1};
  std::vector<std::int64_t> dilations{1, 1};
  std::vector<std::int64_t> pads{0, 0, 0, 0};  // top, left, bottom, right
  std::string auto_pad = "NOTSET";
  std::int64_t group = 1;
};

Tensor conv2d(const Tensor& x, const Tensor& weight, const Tensor* bias, const ConvParams& p);

struct PoolParams {
  std::vector<std::int64_t> kernel{1, 1};
  std::vector<std::int64_t> strides{1, 1};
  std::vector<std::int64_t> pads{0, 0, 0, 0};
  std::string auto_pad = "NOTSET";
};

Tensor max_pool2d(const Tensor& x, const PoolParams& p);

}  // namespace fastfuse::nn
