#pragma once

#include <string>
#include <vector>

#include "plg/multigraph.hpp"

namespace plg {

struct Cover {
  std::vector<int> nodes;  // sorted, distinct
  long long certified_size = 0;
};

Cover make_cover(std::vector<int> nodes);

struct SolveBudget {
  long long node_limit = 80;  // nodes left after kernelization
  double time_limit = 60.0;   // seconds
};

bool is_cover(const MultiGraph& g, const std::vector<int>& c);

// Minimum cover containing `forced`. Kernel: self-loop and forced nodes,
// then degree-0/degree-1 rules; branch on the max-degree node (lowest id on
// ties) with a greedy matching lower bound.
Cover exact_vc(const MultiGraph& g, const SolveBudget& budget = {},
               const std::vector<int>& forced = {});

// Both endpoints of a greedy maximal matching over edges in (u, v) order.
Cover approx_vc_matching(const MultiGraph& g);

std::string emit_cover(const Cover& c);
Cover parse_cover(const std::string& text);

}  // namespace plg
