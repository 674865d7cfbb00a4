#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace plg {

// f(n) = c * (ln n)^k.
struct GrowthFn {
  double c = 1.0;
  double k = 2.0;
  double operator()(double n) const;
  std::string describe() const;
};

struct BetaSpec {
  enum class Kind { constant, below_one, above_one };
  Kind kind = Kind::constant;
  double beta = 1.0;  // used by Kind::constant
  GrowthFn f;         // used by the functional kinds

  static BetaSpec constant_beta(double beta);
  static BetaSpec below_one(GrowthFn f);
  static BetaSpec above_one(GrowthFn f);
  bool functional() const { return kind != Kind::constant; }
  const char* kind_name() const;
};

// Constant -> beta, BelowOne -> 1 - 1/f(n), AboveOne -> 1 + 1/f(n).
double effective_beta(const BetaSpec& spec, long long n);

struct PlgParams {
  double alpha = 0.0;
  BetaSpec beta;
  double volume = 1.0;  // e^alpha
  long long max_degree = 1;
  double beta_eff = 1.0;        // slope used for the counts
  long long realized_nodes = 0;  // functional specs: fixed-point node count
};

// volume is e^alpha and must be >= 1. Functional specs run the node-count
// fixed point and throw no-fixed-point after five rounds.
PlgParams make_params(double volume, const BetaSpec& spec);
// Snaps e^alpha to the nearest integer when within 1e-9 relative.
PlgParams params_from_alpha(double alpha, const BetaSpec& spec);

// y_j is constant on each run [lo, hi].
struct DegreeRun {
  long long lo = 0, hi = 0, count = 0;
};

struct DegreeSequence {
  long long max_degree = 0;
  std::vector<DegreeRun> runs;  // ascending, covering 1..max_degree
  long long node_total = 0;
  long long degree_total = 0;
  bool parity_fixed = false;
  long long count(long long j) const;
  // Dense y_0..y_Delta (y_0 = 0); throws invalid-params above 1e7 entries.
  std::vector<long long> dense() const;
};

DegreeSequence degree_counts(const PlgParams& params);

// floor(volume / j^beta) with a guarded double evaluation.
long long floor_power_ratio(double volume, long long j, double beta);
// floor((volume / k)^(1/beta)): the largest j with floor(volume / j^beta) >= k.
long long floor_root_ratio(double volume, long long k, double beta);

long long interval_size(const PlgParams& params, long long a, long long b);
long long interval_size(const DegreeSequence& seq, long long a, long long b);
long long node_total(const PlgParams& params);

struct IntervalEstimate {
  long long a = 0, b = 0;
  long long exact_size = 0;
  double analytic_lo = 0.0, analytic_hi = 0.0;
  std::string rule;
  std::vector<std::pair<std::string, double>> error_terms;
  bool contains() const {
    const double e = static_cast<double>(exact_size);
    return analytic_lo <= e && e <= analytic_hi;
  }
};

// Degree interval [a, b]; for constant beta uses x = a/Delta, y = b/Delta.
IntervalEstimate interval_estimate(const PlgParams& params, long long a, long long b);
// Fractions x < y of Delta; sums over [ceil(x Delta), floor(y Delta)] and
// evaluates the closed forms at the real x, y. Constant beta <= 1 only.
IntervalEstimate interval_estimate_fraction(const PlgParams& params, double x, double y);

// Closed forms for n: zeta(beta)e^alpha, alpha e^alpha, e^alpha/(1-beta).
double regime_node_estimate(const PlgParams& params);

enum class Regime { LowBeta, BetaOne, FunctionalLow, FunctionalHigh, MidBeta, BetaTwo, HighBeta };
const char* regime_name(Regime r);
Regime regime_from_name(const std::string& name);
bool high_beta_regime(Regime r);

struct EmbeddingPlan {
  PlgParams params;
  Regime regime = Regime::MidBeta;
  std::pair<long long, long long> gd_interval{0, 0};
  std::pair<long long, long long> gamma_interval{0, 0};  // inclusive
  std::optional<long long> j0;
  std::optional<double> u;
  double x = 0.0, y = 0.0, z = 0.0;
  double c = 0.0, cp = 0.0, cpp = 0.0;
  long long delta_eff = 0;
  long long gamma_capacity = 0;  // sum over the gamma range of (j-2) y_j
};

EmbeddingPlan plan_embedding_high_beta(long long n_gd, int d, double beta);
std::optional<EmbeddingPlan> plan_high_beta_at(long long volume, long long n_gd, int d,
                                               double beta);
EmbeddingPlan plan_embedding_low_beta(long long n_gd, int d, const BetaSpec& beta);
std::optional<EmbeddingPlan> plan_low_beta_at(long long volume, long long n_gd, int d,
                                              const BetaSpec& beta);
// Smallest volume tried by plan_embedding_high_beta.
long long high_beta_start_volume(long long n_gd, int d, double beta);

}  // namespace plg
