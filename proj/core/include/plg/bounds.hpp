#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plg/degree_model.hpp"
#include "plg/zeta.hpp"

namespace plg {

// Denominator used for 1 < beta <= 2. The standard form is the default;
// the alternate form uses (zeta - 1)(d+1)^(beta-1)/2 and exists for comparison.
enum class MidFormula { standard, alternate };

struct BoundRow {
  double beta = 0;
  std::string regime;
  int d = 3;
  double eps_d = 0;
  double factor = 1;       // 1 + eps_beta
  double denominator = 1;  // factor = 1 + eps_d / denominator
};

BoundRow inapprox_factor(double beta, int d, double eps_d,
                         MidFormula mid = MidFormula::standard);
BoundRow inapprox_factor(const BetaSpec& beta, int d, double eps_d,
                         MidFormula mid = MidFormula::standard);

// Grid lo, lo+step, ... up to hi (inclusive within 1e-9 of a step).
std::vector<double> beta_grid(double lo, double hi, double step);
std::vector<BoundRow> bounds_table(const std::vector<double>& grid, int d, double eps_d,
                                   MidFormula mid = MidFormula::standard);

std::string bounds_csv(const std::vector<BoundRow>& rows);

// Accepts either the gap eps_d or the ratio 1 + eps_d and returns eps_d.
double normalize_eps(std::optional<double> eps_d, std::optional<double> ratio);

}  // namespace plg
