#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "waudit/types.hpp"

namespace waudit::symmetry {

// Distance semantics when comparing two checkpoints:
//   None       plain L2 between flat vectors
//   Aligned    upper bound on the orbit minimum via layer-wise assignment
//   Exhaustive exact minimum over the full permutation/sign-flip orbit
enum class Mode { None, Aligned, Exhaustive };

const char* mode_name(Mode m);
Mode mode_from_name(const std::string& name);

// Hidden layers are layers 0..L-2; the output layer is never permuted.
int hidden_layer_count(const std::vector<LayerSpec>& arch);

struct PermutationAction {
  int hidden_layer = 0;       // 0-based over hidden layers
  std::vector<int> perm;      // new neuron i takes old neuron perm[i]
};

struct SignFlipAction {
  int hidden_layer = 0;
  std::vector<std::uint8_t> flips;  // per old neuron index
};

// One hidden layer's composite action: flips applied first (in the original
// neuron indexing), then the permutation gather.
struct LayerAction {
  int hidden_layer = 0;
  std::vector<int> perm;
  std::vector<std::uint8_t> flips;
};

struct CompositeAction {
  std::vector<LayerAction> layers;  // one entry per hidden layer, in order

  static CompositeAction identity(const std::vector<LayerSpec>& arch);
  // [{"layer": l, "perm": [...], "flips": [...]}, ...]
  nlohmann::json to_json() const;
};

// Reorders rows/bias of the hidden layer and columns of the next layer by
// the same permutation; the computed function is unchanged.
Network apply_permutation(const Network& net, const PermutationAction& action);

// Negates incoming row, bias and outgoing column of each flipped neuron.
// Only valid on tanh layers (odd activation).
Network apply_sign_flip(const Network& net, const SignFlipAction& action);

Network apply_action(const Network& net, const CompositeAction& action);

// `count` networks, each from one uniformly random permutation per hidden
// layer (plus a random sign mask per tanh hidden layer when enabled).
// Deterministic given seed; member k uses the stream (seed, k).
std::vector<Network> random_augmentations(const Network& net, int count,
                                          bool include_sign_flips, std::uint64_t seed);

// Orbit size = product over hidden layers of h! * 2^h (tanh) or h! (other),
// saturating at uint64 max.
std::uint64_t orbit_size(const std::vector<LayerSpec>& arch);

struct OrbitResult {
  double distance = 0.0;
  CompositeAction witness;  // action on b minimizing ||flatten(a) - flatten(act(b))||
};

// Mode None: plain L2 and identity witness. Exhaustive: exact orbit minimum
// (requires orbit_size <= budget). Aligned: per-layer sign resolution then
// min-cost assignment on neuron signatures (incoming row, bias, outgoing
// column), input to output; always within [exhaustive, none].
// Ties break to the lexicographically smallest action.
OrbitResult orbit_min_distance(const Network& a, const Network& b, Mode mode,
                               std::uint64_t budget = 1'000'000, int threads = 1);

}  // namespace waudit::symmetry
