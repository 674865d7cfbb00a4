#pragma once

#include <stdexcept>
#include <string>

namespace plg {

enum class Errc {
  invalid_params,
  invalid_interval,
  unsupported_regime,
  wrong_regime,
  invalid_growth,
  no_fixed_point,
  numeric_ambiguity,
  invalid_edge,
  parity_error,
  domain_error,
  invalid_cut,
  precondition_violation,
  invalid_cover,
  plan_infeasible,
  construction_bug,
  budget_exceeded,
  structure_violation,
  divergent,
  out_of_range,
  parse_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace plg
