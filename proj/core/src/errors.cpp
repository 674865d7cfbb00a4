#include "plg/errors.hpp"

namespace plg {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_params: return "invalid-params";
    case Errc::invalid_interval: return "invalid-interval";
    case Errc::unsupported_regime: return "unsupported-regime";
    case Errc::wrong_regime: return "wrong-regime";
    case Errc::invalid_growth: return "invalid-growth";
    case Errc::no_fixed_point: return "no-fixed-point";
    case Errc::numeric_ambiguity: return "numeric-ambiguity";
    case Errc::invalid_edge: return "invalid-edge";
    case Errc::parity_error: return "parity-error";
    case Errc::domain_error: return "domain-error";
    case Errc::invalid_cut: return "invalid-cut";
    case Errc::precondition_violation: return "precondition-violation";
    case Errc::invalid_cover: return "invalid-cover";
    case Errc::plan_infeasible: return "plan-infeasible";
    case Errc::construction_bug: return "construction-bug";
    case Errc::budget_exceeded: return "budget-exceeded";
    case Errc::structure_violation: return "structure-violation";
    case Errc::divergent: return "divergent";
    case Errc::out_of_range: return "out-of-range";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace plg
