#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plg/degree_model.hpp"
#include "plg/reduction.hpp"

namespace plg {

// Sidecar JSON written next to an embedded plgm file.
struct EmbeddingMeta {
  double alpha = 0.0;
  BetaSpec beta;
  std::string regime;
  std::vector<int> gd_nodes;
  std::vector<int> gamma;
  std::vector<int> w1;
  std::vector<int> degree_one_nodes;
  std::vector<int> rim_order;
  std::string gd_source;
  std::vector<std::pair<int, int>> pm_matching;  // low-beta regimes only
  std::optional<std::pair<long long, long long>> gd_interval;
  std::optional<std::pair<long long, long long>> gamma_interval;
  std::string pm_multiplicity;  // "total" for the low-beta regimes
};

EmbeddingMeta to_meta(const EmbeddedPlg& e, const std::string& gd_source);
std::string emit_meta_json(const EmbeddingMeta& m);
EmbeddingMeta parse_meta_json(const std::string& text);

}  // namespace plg
