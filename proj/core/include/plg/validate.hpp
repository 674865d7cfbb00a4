#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plg/degree_model.hpp"
#include "plg/metadata.hpp"
#include "plg/multigraph.hpp"

namespace plg {

struct HistogramMismatch {
  long long degree = 0;
  long long expected = 0;
  long long actual = 0;
};

struct ValidationReport {
  bool histogram_ok = false;
  bool connected = false;
  PlgParams params_echo;
  std::vector<HistogramMismatch> mismatches;  // first 1000 only
  long long mismatch_count = 0;
  // Set when metadata is supplied.
  std::optional<bool> roles_consistent;       // gamma / w1 match the graph
  std::optional<bool> gamma_subset_w1;        // high-beta regimes
  std::optional<bool> distinct_gamma_hosts;   // high-beta regimes
  std::optional<bool> gd_degrees_in_interval;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

ValidationReport validate_plg(const MultiGraph& g, const PlgParams& params,
                              const EmbeddingMeta* meta = nullptr);

}  // namespace plg
