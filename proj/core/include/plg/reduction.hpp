#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "plg/degree_model.hpp"
#include "plg/multigraph.hpp"
#include "plg/vc.hpp"

namespace plg {

// Four copies V1..V4 of the input; copy c of node j has id (c - 1) * n + j.
struct PmGadgetGraph {
  MultiGraph graph;
  int base_nodes = 0;
  std::vector<std::pair<int, int>> copy_map;  // id -> (copy, original); index 0 unused
  std::vector<std::pair<int, int>> matching;  // v1j-v3j and v2j-v4j
  int node_id(int copy, int original) const { return (copy - 1) * base_nodes + original; }
};

PmGadgetGraph reduce_pm(const MultiGraph& g, int d);

// Normalisation: both V1 and V2 take the smaller of the two
// projected covers, V3/V4 are filled so every gadget edge stays covered.
Cover transform_cover(const PmGadgetGraph& gadget, const std::vector<int>& c);

struct WheelGroup {
  long long degree = 0;
  std::vector<int> nodes;  // positions 1..n_j in order
};

struct FillWheelResult {
  std::vector<std::tuple<int, int, long long>> edges;  // emission order
  long long emitted = 0;
  long long pool_used = 0;
  long long invariant_violations = 0;
  std::string first_violation;
};

// Residuals are non-decreasing by position and differ by at most 1.
bool invariant_holds(const WheelGroup& group, const std::vector<long long>& residual);

// Completes residual degrees inside the wheel. `residual` is indexed by node
// id and is driven to zero; `pool` holds unattached degree-1 nodes.
FillWheelResult fill_wheel(const std::vector<WheelGroup>& groups, std::vector<long long>& residual,
                           std::vector<int> pool);

enum class Role { gd, wheel, degree_one };

struct NodeRole {
  Role role = Role::gd;
  int index = 0;          // original / gadget index, wheel rim index, or leaf index
  long long degree = 0;   // target degree
  int position = 0;       // position inside the wheel group
};

struct EmbeddedPlg {
  MultiGraph graph;
  PlgParams params;
  EmbeddingPlan plan;
  std::vector<NodeRole> roles;  // index 0 unused
  std::vector<int> gd_nodes;    // G_d nodes (beta > 1) or gadget nodes
  std::vector<WheelGroup> wheel_groups;
  std::vector<int> rim_order;
  std::vector<int> degree_one_nodes;
  std::vector<int> gamma;
  std::vector<int> w1;
  std::optional<PmGadgetGraph> gadget;  // set for the low-beta regimes
  int original_nodes = 0;
  FillWheelResult fill;
  int rotation = 0;               // host group rotation that was used
  long long volumes_tried = 0;
  long long initial_violations = 0;  // residual invariant failures before Fill_Wheel
};

// Alg. 2 with the regime variants for beta = 2 and beta > 2.
EmbeddedPlg reduce_high_beta(const MultiGraph& g, int d, double beta,
                             const std::optional<EmbeddingPlan>& plan = std::nullopt);
// Alg. 3 for constant beta <= 1 and both functional sides.
EmbeddedPlg reduce_low_beta(const MultiGraph& g, int d, const BetaSpec& beta,
                            const std::optional<EmbeddingPlan>& plan = std::nullopt);
// Dispatches on the beta spec.
EmbeddedPlg reduce(const MultiGraph& g, int d, const BetaSpec& beta);

Cover extract_cover(const EmbeddedPlg& e, const std::vector<int>& c);

// Wheel nodes adjacent to a G_d / degree-1 node, recomputed from the graph.
std::vector<int> compute_gamma(const EmbeddedPlg& e);
std::vector<int> compute_w1(const EmbeddedPlg& e);

}  // namespace plg
