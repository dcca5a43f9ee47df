#include "waudit/types.hpp"

#include <cmath>
#include <cstdio>
#include <unordered_set>

namespace waudit {

namespace {

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, args...);
  return buf;
}

}  // namespace

const char* activation_name(Activation a) {
  switch (a) {
    case Activation::Tanh: return "tanh";
    case Activation::Relu: return "relu";
    case Activation::Identity: return "identity";
  }
  return "?";
}

Activation activation_from_name(const std::string& name) {
  if (name == "tanh") return Activation::Tanh;
  if (name == "relu") return Activation::Relu;
  if (name == "identity") return Activation::Identity;
  throw Error("unknown activation \"" + name + "\" (expected tanh|relu|identity)");
}

const char* role_name(Role r) {
  switch (r) {
    case Role::Training: return "training";
    case Role::Generated: return "generated";
    case Role::Baseline: return "baseline";
  }
  return "?";
}

Role role_from_name(const std::string& name) {
  if (name == "training") return Role::Training;
  if (name == "generated") return Role::Generated;
  if (name == "baseline") return Role::Baseline;
  throw Error("unknown role \"" + name + "\" (expected training|generated|baseline)");
}

void validate_arch(const std::vector<LayerSpec>& arch) {
  if (arch.empty()) throw Error("architecture has no layers");
  for (std::size_t i = 0; i < arch.size(); ++i) {
    if (arch[i].in_dim < 1 || arch[i].out_dim < 1)
      throw Error(fmt("layer %zu has non-positive dims (%d -> %d)", i, arch[i].in_dim,
                      arch[i].out_dim));
    if (i + 1 < arch.size() && arch[i].out_dim != arch[i + 1].in_dim)
      throw Error(fmt("layer %zu out_dim %d does not chain into layer %zu in_dim %d", i,
                      arch[i].out_dim, i + 1, arch[i + 1].in_dim));
  }
}

std::size_t param_count(const std::vector<LayerSpec>& arch) {
  std::size_t total = 0;
  for (const auto& l : arch)
    total += static_cast<std::size_t>(l.out_dim) * l.in_dim + l.out_dim;
  return total;
}

Network::Network(std::string id, std::vector<LayerSpec> arch, std::vector<Layer> layers)
    : id_(std::move(id)), arch_(std::move(arch)), layers_(std::move(layers)) {
  validate_arch(arch_);
  if (layers_.size() != arch_.size())
    throw Error(fmt("network \"%s\": %zu layers for %zu layer specs", id_.c_str(),
                    layers_.size(), arch_.size()));
  std::size_t flat = 0;
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    const auto want_w = static_cast<std::size_t>(arch_[i].out_dim) * arch_[i].in_dim;
    const auto want_b = static_cast<std::size_t>(arch_[i].out_dim);
    if (layers_[i].weight.size() != want_w || layers_[i].bias.size() != want_b)
      throw Error(fmt("network \"%s\" layer %zu: tensor shapes do not match spec "
                      "(weight %zu vs %zu, bias %zu vs %zu)",
                      id_.c_str(), i, layers_[i].weight.size(), want_w,
                      layers_[i].bias.size(), want_b));
    for (std::size_t j = 0; j < want_w; ++j)
      if (!std::isfinite(layers_[i].weight[j]))
        throw Error(fmt("network \"%s\": non-finite value at flat index %zu", id_.c_str(),
                        flat + j));
    flat += want_w;
    for (std::size_t j = 0; j < want_b; ++j)
      if (!std::isfinite(layers_[i].bias[j]))
        throw Error(fmt("network \"%s\": non-finite value at flat index %zu", id_.c_str(),
                        flat + j));
    flat += want_b;
  }
}

std::size_t Network::param_count() const { return waudit::param_count(arch_); }

std::vector<float> Network::flatten() const {
  std::vector<float> out;
  out.reserve(param_count());
  for (const auto& l : layers_) {
    out.insert(out.end(), l.weight.begin(), l.weight.end());
    out.insert(out.end(), l.bias.begin(), l.bias.end());
  }
  return out;
}

Network Network::unflatten(std::string id, const std::vector<LayerSpec>& arch,
                           std::span<const float> flat) {
  validate_arch(arch);
  if (flat.size() != waudit::param_count(arch))
    throw Error(fmt("unflatten \"%s\": %zu values for %zu parameters", id.c_str(),
                    flat.size(), waudit::param_count(arch)));
  std::vector<Layer> layers;
  layers.reserve(arch.size());
  std::size_t off = 0;
  for (const auto& spec : arch) {
    Layer l;
    const auto nw = static_cast<std::size_t>(spec.out_dim) * spec.in_dim;
    l.weight.assign(flat.begin() + off, flat.begin() + off + nw);
    off += nw;
    l.bias.assign(flat.begin() + off, flat.begin() + off + spec.out_dim);
    off += spec.out_dim;
    layers.push_back(std::move(l));
  }
  return Network(std::move(id), arch, std::move(layers));
}

Network Network::with_id(std::string new_id) const {
  Network n = *this;
  n.id_ = std::move(new_id);
  return n;
}

void validate_set(const CheckpointSet& set) {
  validate_arch(set.arch);
  std::unordered_set<std::string> ids;
  for (const auto& m : set.members) {
    if (m.arch() != set.arch)
      throw Error("member \"" + m.id() + "\" does not share the set architecture");
    if (!ids.insert(m.id()).second)
      throw Error("duplicate member id \"" + m.id() + "\"");
  }
}

void validate_dataset(const LabeledDataset& data) {
  if (data.n < 1) throw Error("dataset has no rows");
  if (data.dim < 1 || data.n_classes < 1) throw Error("dataset has non-positive dims");
  if (data.features.size() != static_cast<std::size_t>(data.n) * data.dim ||
      data.labels.size() != static_cast<std::size_t>(data.n))
    throw Error("dataset buffer sizes do not match header");
  for (int i = 0; i < data.n; ++i) {
    if (data.labels[i] < 0 || data.labels[i] >= data.n_classes)
      throw Error("label " + std::to_string(data.labels[i]) + " out of range at row " +
                  std::to_string(i));
  }
  for (std::size_t i = 0; i < data.features.size(); ++i)
    if (!std::isfinite(data.features[i]))
      throw Error("non-finite feature at flat index " + std::to_string(i));
}

}  // namespace waudit
