#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace waudit {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

enum class Activation { Tanh, Relu, Identity };

const char* activation_name(Activation a);
Activation activation_from_name(const std::string& name);

struct LayerSpec {
  int in_dim = 0;
  int out_dim = 0;
  Activation act = Activation::Identity;

  bool operator==(const LayerSpec&) const = default;
};

// Validates in/out >= 1 and that consecutive layers chain.
void validate_arch(const std::vector<LayerSpec>& arch);

// Total flat parameter count: sum of out*in + out per layer.
std::size_t param_count(const std::vector<LayerSpec>& arch);

struct Layer {
  std::vector<float> weight;  // row-major [out_dim x in_dim]
  std::vector<float> bias;    // [out_dim]
};

// One checkpoint: per-layer dense weights plus the architecture they obey.
// Immutable after construction; the constructor enforces shape consistency
// and rejects non-finite values.
//
// Flat layout (the canonical parameter index used everywhere): layers in
// order, each layer contributing its weight matrix row-major followed by
// its bias vector. Stored as f32; all metric accumulation is f64.
class Network {
 public:
  Network() = default;
  Network(std::string id, std::vector<LayerSpec> arch, std::vector<Layer> layers);

  const std::string& id() const { return id_; }
  const std::vector<LayerSpec>& arch() const { return arch_; }
  const std::vector<Layer>& layers() const { return layers_; }
  const Layer& layer(std::size_t i) const { return layers_[i]; }
  std::size_t layer_count() const { return layers_.size(); }
  std::size_t param_count() const;

  int input_dim() const { return arch_.front().in_dim; }
  int output_dim() const { return arch_.back().out_dim; }

  std::vector<float> flatten() const;
  static Network unflatten(std::string id, const std::vector<LayerSpec>& arch,
                           std::span<const float> flat);

  Network with_id(std::string new_id) const;

 private:
  std::string id_;
  std::vector<LayerSpec> arch_;
  std::vector<Layer> layers_;
};

enum class Role { Training, Generated, Baseline };

const char* role_name(Role r);
Role role_from_name(const std::string& name);

// Ordered collection of same-architecture checkpoints.
struct CheckpointSet {
  std::vector<LayerSpec> arch;
  std::vector<Network> members;
  Role role = Role::Training;
  // Optional generation metadata (kind, sigma/k, seed, source ids);
  // round-tripped through the manifest when present.
  nlohmann::json provenance;

  std::size_t size() const { return members.size(); }
};

// Checks shared arch and id uniqueness; throws Error on violation.
void validate_set(const CheckpointSet& set);

struct LabeledDataset {
  int n = 0;
  int dim = 0;
  int n_classes = 0;
  std::vector<float> features;  // row-major [n x dim]
  std::vector<int> labels;      // each in [0, n_classes)

  const float* row(int i) const { return features.data() + static_cast<std::size_t>(i) * dim; }
};

void validate_dataset(const LabeledDataset& data);

struct PointCloud {
  std::vector<float> pts;  // row-major [m x 3]

  std::size_t size() const { return pts.size() / 3; }
  const float* point(std::size_t i) const { return pts.data() + 3 * i; }
};

}  // namespace waudit
