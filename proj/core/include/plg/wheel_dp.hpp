#pragma once

#include <string>
#include <vector>

#include "plg/multigraph.hpp"
#include "plg/reduction.hpp"
#include "plg/vc.hpp"

namespace plg {

// Minimum cover of the rim/leaf edges of `g` with `forced` inside. The rim is
// the concatenation of the groups; allowed rim edges are consecutive pairs,
// the closing pair, self-loops and chords joining a group's first and last
// node. Leaves must be pendant on the rim. Edges touching other nodes are
// ignored. Anything else throws structure-violation.
Cover rim_cover_dp(const MultiGraph& g, const std::vector<WheelGroup>& groups,
                   const std::vector<int>& leaves, const std::vector<int>& forced);

Cover wheel_vc_dp(const EmbeddedPlg& e, const std::vector<int>& forced);

// c_d ∪ Γ ∪ wheel_vc_dp(e, Γ).
Cover hat_cover(const EmbeddedPlg& e, const std::vector<int>& c_d);

struct WheelShape {
  long long rim_nodes = 0;
  long long cycle_edges = 0;    // distinct rim-consecutive pairs
  long long chord_edges = 0;    // other distinct wheel-wheel pairs
  long long self_loops = 0;
  long long pendant_leaves = 0;
  long long bad_leaves = 0;     // leaves not pendant on a wheel node
  bool cycle_plus_pendants() const;
};

// Shape of underlying_simple of the subgraph induced by wheel and degree-1 nodes.
WheelShape wheel_shape(const EmbeddedPlg& e);

}  // namespace plg
