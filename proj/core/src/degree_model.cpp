#include "plg/degree_model.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "plg/errors.hpp"
#include "plg/zeta.hpp"

namespace plg {

namespace {

using Precise = boost::multiprecision::cpp_bin_float_100;
using u128 = unsigned __int128;

constexpr double kGuard = 8.0 * DBL_EPSILON;
constexpr double kCountCap = 1e18;
constexpr long long kDenseCap = 10000000;

long long resolve_floor(const Precise& r) {
  if (r >= Precise(kCountCap)) throw Error(Errc::invalid_params, "degree count exceeds 1e18");
  const Precise k = boost::multiprecision::round(r);
  const Precise gap = boost::multiprecision::abs(r - k);
  if (gap < Precise("1e-80")) return k.convert_to<long long>();
  if (gap < Precise("1e-60"))
    throw Error(Errc::numeric_ambiguity, "floor within 1e-60 of an integer");
  return boost::multiprecision::floor(r).convert_to<long long>();
}

template <class PreciseFn>
long long guarded_floor(double q, PreciseFn precise) {
  if (!(q < kCountCap)) throw Error(Errc::invalid_params, "degree count exceeds 1e18");
  const double lo = std::floor(q * (1.0 - kGuard));
  const double hi = std::floor(q * (1.0 + kGuard));
  if (lo == hi) return static_cast<long long>(lo);
  return precise();
}

long long floor_volume(double volume) { return static_cast<long long>(std::floor(volume)); }

struct RunBuild {
  std::vector<DegreeRun> runs;
  u128 nodes = 0;
  u128 degrees = 0;
};

u128 degree_sum(const DegreeRun& r) {
  const u128 len = static_cast<u128>(r.hi - r.lo + 1);
  const u128 span = static_cast<u128>(r.lo + r.hi);
  // len * span is always even.
  return static_cast<u128>(r.count) * (len * span / 2);
}

// Runs of the raw counts over [from, to], before any parity fix.
RunBuild build_runs(double volume, double beta, long long from, long long to) {
  RunBuild out;
  long long j = from;
  if (j == 1 && to >= 1) {
    out.runs.push_back({1, 1, floor_volume(volume)});
    j = 2;
  }
  while (j <= to) {
    const long long k = floor_power_ratio(volume, j, beta);
    if (k < 1) throw Error(Errc::construction_bug, "zero count below the maximum degree");
    const long long hi = std::min(to, floor_root_ratio(volume, k, beta));
    if (hi < j) throw Error(Errc::construction_bug, "inconsistent degree run");
    out.runs.push_back({j, hi, k});
    j = hi + 1;
  }
  for (const DegreeRun& r : out.runs) {
    out.nodes += static_cast<u128>(r.count) * static_cast<u128>(r.hi - r.lo + 1);
    out.degrees += degree_sum(r);
  }
  return out;
}

// Full sequence with the y_1 parity fix applied.
RunBuild full_runs(const PlgParams& p, bool* fixed) {
  RunBuild rb = build_runs(p.volume, p.beta_eff, 1, p.max_degree);
  *fixed = false;
  if (rb.degrees % 2 == 1) {
    rb.runs.front().count += 1;
    rb.nodes += 1;
    rb.degrees += 1;
    *fixed = true;
  }
  return rb;
}

long long to_ll(u128 v, const char* what) {
  if (v > static_cast<u128>(std::numeric_limits<long long>::max()))
    throw Error(Errc::invalid_params, std::string(what) + " exceeds 64-bit range");
  return static_cast<long long>(v);
}

void check_constant_beta(double beta) {
  static const double bmax = beta_max(1e-12);
  if (!(beta > 0.0 && beta < bmax))
    throw Error(Errc::invalid_params, "constant beta must lie in (0, beta_max)");
}

u128 sum_runs(const std::vector<DegreeRun>& runs, long long a, long long b) {
  u128 total = 0;
  for (const DegreeRun& r : runs) {
    const long long lo = std::max(a, r.lo), hi = std::min(b, r.hi);
    if (lo <= hi) total += static_cast<u128>(r.count) * static_cast<u128>(hi - lo + 1);
  }
  return total;
}

void check_interval(const PlgParams& p, long long a, long long b) {
  if (a < 1 || a > b || b > p.max_degree)
    throw Error(Errc::invalid_interval, "need 1 <= a <= b <= max degree");
}

double harmonic_volume(double volume, long long a, long long b) {
  double s = 0.0;
  for (long long j = b; j >= a; --j) s += volume / static_cast<double>(j);
  return s;
}

IntervalEstimate fractional_estimate(const PlgParams& p, double x, double y, long long a,
                                  long long b) {
  IntervalEstimate est;
  est.a = a;
  est.b = b;
  est.exact_size = a <= b ? interval_size(p, a, b) : 0;
  const double beta = p.beta_eff;
  const double delta = static_cast<double>(p.max_degree);
  if (beta < 1.0) {
    const double main = delta / (1.0 - beta) * (std::pow(y, 1.0 - beta) - std::pow(x, 1.0 - beta));
    const double slack_lo = (y - x) * delta + 1.0;
    const double slack_hi = std::pow(x, -beta) - std::pow(y, -beta);
    est.analytic_lo = main - slack_lo;
    est.analytic_hi = main + slack_hi;
    est.rule = "fraction-below-one";
    est.error_terms = {{"rounding_slack", slack_lo}, {"upper_slack", slack_hi}};
  } else {
    const double v = p.volume;
    const double logs = std::log(y) - std::log(x);
    est.analytic_lo = (logs - (y - x + 1.0)) * v;
    est.analytic_hi = v * logs + (1.0 / x - 1.0 / y);
    est.rule = "fraction-at-one";
    est.error_terms = {{"rounding_slack", (y - x + 1.0) * v},
                       {"upper_slack", 1.0 / x - 1.0 / y},
                       {"t", static_cast<double>(b - a)}};
  }
  return est;
}

long long search_limit(long long start) { return std::max<long long>(start * 1000, 1000000); }

}  // namespace

double GrowthFn::operator()(double n) const { return c * std::pow(std::log(n), k); }

std::string GrowthFn::describe() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g*ln^%.17g", c, k);
  return buf;
}

BetaSpec BetaSpec::constant_beta(double beta) {
  BetaSpec s;
  s.kind = Kind::constant;
  s.beta = beta;
  return s;
}

BetaSpec BetaSpec::below_one(GrowthFn f) {
  BetaSpec s;
  s.kind = Kind::below_one;
  s.f = f;
  return s;
}

BetaSpec BetaSpec::above_one(GrowthFn f) {
  BetaSpec s;
  s.kind = Kind::above_one;
  s.f = f;
  return s;
}

const char* BetaSpec::kind_name() const {
  switch (kind) {
    case Kind::below_one: return "below-one";
    case Kind::above_one: return "above-one";
    default: return "constant";
  }
}

double effective_beta(const BetaSpec& spec, long long n) {
  if (spec.kind == BetaSpec::Kind::constant) return spec.beta;
  if (!(spec.f.c > 0.0 && spec.f.k >= 1.0))
    throw Error(Errc::invalid_growth, "growth function needs c > 0 and k >= 1");
  if (n < 3) throw Error(Errc::invalid_growth, "growth function evaluated below n = 3");
  const double fn = spec.f(static_cast<double>(n));
  if (!(fn > 1.0)) throw Error(Errc::invalid_growth, "f(n) <= 1");
  return spec.kind == BetaSpec::Kind::below_one ? 1.0 - 1.0 / fn : 1.0 + 1.0 / fn;
}

long long floor_power_ratio(double volume, long long j, double beta) {
  if (j < 1) throw Error(Errc::invalid_interval, "degree must be positive");
  if (j == 1) return floor_volume(volume);
  const double q = volume / std::pow(static_cast<double>(j), beta);
  return guarded_floor(q, [&] {
    return resolve_floor(Precise(volume) / boost::multiprecision::pow(Precise(j), Precise(beta)));
  });
}

long long floor_root_ratio(double volume, long long k, double beta) {
  if (k < 1) throw Error(Errc::invalid_interval, "count must be positive");
  const double q = std::pow(volume / static_cast<double>(k), 1.0 / beta);
  return guarded_floor(q, [&] {
    return resolve_floor(
        boost::multiprecision::pow(Precise(volume) / Precise(k), Precise(1) / Precise(beta)));
  });
}

PlgParams make_params(double volume, const BetaSpec& spec) {
  if (!(volume >= 1.0) || !std::isfinite(volume))
    throw Error(Errc::invalid_params, "volume e^alpha must be at least 1");
  PlgParams p;
  p.alpha = std::log(volume);
  p.beta = spec;
  p.volume = volume;
  if (spec.kind == BetaSpec::Kind::constant) {
    check_constant_beta(spec.beta);
    p.beta_eff = spec.beta;
    p.max_degree = floor_root_ratio(volume, 1, spec.beta);
    return p;
  }
  // Start from the beta = 1 node count and iterate n -> n(beta_eff(n)).
  long long n = to_ll(build_runs(volume, 1.0, 1, floor_volume(volume)).nodes, "node count");
  for (int round = 0; round < 5; ++round) {
    p.beta_eff = effective_beta(spec, std::max<long long>(n, 3));
    p.max_degree = floor_root_ratio(volume, 1, p.beta_eff);
    bool fixed = false;
    const long long next = to_ll(full_runs(p, &fixed).nodes, "node count");
    if (next == n) {
      p.realized_nodes = n;
      return p;
    }
    n = next;
  }
  throw Error(Errc::no_fixed_point, "functional beta node count did not stabilise in 5 rounds");
}

PlgParams params_from_alpha(double alpha, const BetaSpec& spec) {
  double v = std::exp(alpha);
  const double r = std::round(v);
  if (std::fabs(v - r) <= 1e-9 * v) v = r;
  return make_params(v, spec);
}

long long DegreeSequence::count(long long j) const {
  if (j < 1 || j > max_degree) return 0;
  auto it = std::upper_bound(runs.begin(), runs.end(), j,
                             [](long long v, const DegreeRun& r) { return v < r.lo; });
  return std::prev(it)->count;
}

std::vector<long long> DegreeSequence::dense() const {
  if (max_degree > kDenseCap) throw Error(Errc::invalid_params, "sequence too long to expand");
  std::vector<long long> y(static_cast<size_t>(max_degree) + 1, 0);
  for (const DegreeRun& r : runs)
    for (long long j = r.lo; j <= r.hi; ++j) y[static_cast<size_t>(j)] = r.count;
  return y;
}

DegreeSequence degree_counts(const PlgParams& params) {
  if (!(params.volume >= 1.0)) throw Error(Errc::invalid_params, "volume e^alpha must be at least 1");
  bool fixed = false;
  RunBuild rb = full_runs(params, &fixed);
  DegreeSequence seq;
  seq.max_degree = params.max_degree;
  seq.runs = std::move(rb.runs);
  seq.node_total = to_ll(rb.nodes, "node count");
  seq.degree_total = to_ll(rb.degrees, "degree total");
  seq.parity_fixed = fixed;
  return seq;
}

long long interval_size(const PlgParams& params, long long a, long long b) {
  check_interval(params, a, b);
  if (a == 1) {
    bool fixed = false;
    return to_ll(sum_runs(full_runs(params, &fixed).runs, a, b), "interval size");
  }
  return to_ll(build_runs(params.volume, params.beta_eff, a, b).nodes, "interval size");
}

long long interval_size(const DegreeSequence& seq, long long a, long long b) {
  if (a < 1 || a > b || b > seq.max_degree)
    throw Error(Errc::invalid_interval, "need 1 <= a <= b <= max degree");
  return to_ll(sum_runs(seq.runs, a, b), "interval size");
}

long long node_total(const PlgParams& params) { return interval_size(params, 1, params.max_degree); }

IntervalEstimate interval_estimate(const PlgParams& params, long long a, long long b) {
  check_interval(params, a, b);
  const BetaSpec& spec = params.beta;
  if (spec.kind == BetaSpec::Kind::constant) {
    if (spec.beta > 1.0) throw Error(Errc::unsupported_regime, "no interval estimate for beta > 1");
    const double delta = static_cast<double>(params.max_degree);
    return fractional_estimate(params, static_cast<double>(a) / delta, static_cast<double>(b) / delta,
                            a, b);
  }
  IntervalEstimate est;
  est.a = a;
  est.b = b;
  est.exact_size = interval_size(params, a, b);
  const double n = static_cast<double>(node_total(params));
  const double fn = spec.f(n);
  const double v = params.volume;
  if (spec.kind == BetaSpec::Kind::below_one) {
    const double h = harmonic_volume(v, a, b);
    const double eps = std::pow(n, 1.0 / (fn - 1.0));
    est.analytic_lo = h - n / std::log(n);
    est.analytic_hi = (1.0 + eps) * h;
    est.rule = "functional-below-one";
    est.error_terms = {{"eps", eps}, {"n_over_log_n", n / std::log(n)}};
  } else {
    const double shrink = std::pow(n, 1.0 / fn);
    const double logs = std::log(static_cast<double>(b)) - std::log(static_cast<double>(a));
    const double width = static_cast<double>(b - a + 1);
    est.analytic_lo = v * logs / shrink - width;
    est.analytic_hi = v * logs + v * (1.0 / static_cast<double>(a) - 1.0 / static_cast<double>(b));
    est.rule = "functional-above-one";
    const double t2 = std::pow(2.0, 1.0 + 1.0 / fn);
    est.error_terms = {{"n_pow_inv_f", shrink},
                       {"rounding_slack", width},
                       {"tau", (std::pow(2.0, 1.0 / fn) - 1.0) / t2}};
  }
  return est;
}

IntervalEstimate interval_estimate_fraction(const PlgParams& params, double x, double y) {
  if (params.beta.functional() || params.beta.beta > 1.0)
    throw Error(Errc::unsupported_regime, "fractional interval estimates need constant beta <= 1");
  if (!(x > 0.0 && x < y && y <= 1.0)) throw Error(Errc::invalid_interval, "need 0 < x < y <= 1");
  const double delta = static_cast<double>(params.max_degree);
  const long long a = std::max<long long>(1, static_cast<long long>(std::ceil(x * delta)));
  const long long b = std::min(params.max_degree, static_cast<long long>(std::floor(y * delta)));
  return fractional_estimate(params, x, y, a, b);
}

double regime_node_estimate(const PlgParams& params) {
  const double v = params.volume;
  if (params.beta.functional() || params.beta.beta == 1.0) return params.alpha * v;
  const double beta = params.beta.beta;
  if (beta > 1.0) return zeta(beta) * v;
  return static_cast<double>(params.max_degree) / (1.0 - beta);
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::LowBeta: return "LowBeta";
    case Regime::BetaOne: return "BetaOne";
    case Regime::FunctionalLow: return "FunctionalLow";
    case Regime::FunctionalHigh: return "FunctionalHigh";
    case Regime::MidBeta: return "MidBeta";
    case Regime::BetaTwo: return "BetaTwo";
    case Regime::HighBeta: return "HighBeta";
  }
  return "unknown";
}

Regime regime_from_name(const std::string& name) {
  for (Regime r : {Regime::LowBeta, Regime::BetaOne, Regime::FunctionalLow, Regime::FunctionalHigh,
                   Regime::MidBeta, Regime::BetaTwo, Regime::HighBeta})
    if (name == regime_name(r)) return r;
  throw Error(Errc::parse_error, "unknown regime " + name);
}

bool high_beta_regime(Regime r) {
  return r == Regime::MidBeta || r == Regime::BetaTwo || r == Regime::HighBeta;
}

long long high_beta_start_volume(long long n_gd, int d, double beta) {
  const double v = std::pow(d + 1.0, beta) * static_cast<double>(n_gd);
  return std::max<long long>(1, static_cast<long long>(std::ceil(v * (1.0 - 1e-12))));
}

std::optional<EmbeddingPlan> plan_high_beta_at(long long volume, long long n_gd, int d,
                                               double beta) {
  static const double bmax = beta_max(1e-12);
  if (!(beta > 1.0 && beta < bmax)) throw Error(Errc::wrong_regime, "beta must lie in (1, beta_max)");
  if (n_gd < 3 || d < 2) throw Error(Errc::precondition_violation, "need n >= 3 and d >= 2");
  EmbeddingPlan plan;
  plan.params = make_params(static_cast<double>(volume), BetaSpec::constant_beta(beta));
  const long long delta = plan.params.max_degree;
  plan.delta_eff = delta;
  plan.gd_interval = {3, d + 1};
  if (delta < d + 1) return std::nullopt;
  long long lo = 3;
  if (beta < 2.0) {
    plan.regime = Regime::MidBeta;
    plan.u = beta / 2.0;
    const long long h = floor_root_ratio(static_cast<double>(delta), 1, 2.0 / beta);
    lo = std::max<long long>(1, delta - h);
    plan.j0 = lo;
  } else if (beta == 2.0) {
    plan.regime = Regime::BetaTwo;
    plan.c = 2.0 + std::pow(d + 1.0, -beta) + 2.0 * zeta(2.0);
    const double j0 = std::ceil(std::exp(plan.params.alpha / 2.0 - plan.c));
    lo = std::max<long long>(1, static_cast<long long>(j0));
    plan.j0 = lo;
  } else {
    plan.regime = Regime::HighBeta;
  }
  if (lo > delta) return std::nullopt;
  plan.gamma_interval = {lo, delta};
  if (interval_size(plan.params, lo, delta) < n_gd) return std::nullopt;
  if (floor_power_ratio(plan.params.volume, d + 1, beta) < n_gd) return std::nullopt;
  if (volume < n_gd) return std::nullopt;
  const DegreeSequence seq = degree_counts(plan.params);
  for (long long j = std::max<long long>(3, lo); j <= delta; ++j)
    plan.gamma_capacity += (j - 2) * seq.count(j);
  return plan;
}

EmbeddingPlan plan_embedding_high_beta(long long n_gd, int d, double beta) {
  const long long start = high_beta_start_volume(n_gd, d, beta);
  for (long long v = start; v <= search_limit(start); ++v)
    if (auto plan = plan_high_beta_at(v, n_gd, d, beta)) return *plan;
  throw Error(Errc::plan_infeasible, "no feasible volume for the high-beta embedding");
}

std::optional<EmbeddingPlan> plan_low_beta_at(long long volume, long long n_gd, int d,
                                              const BetaSpec& beta) {
  if (beta.kind == BetaSpec::Kind::constant && beta.beta > 1.0)
    throw Error(Errc::wrong_regime, "constant beta above 1 uses the high-beta embedding");
  if (n_gd < 3 || d < 2) throw Error(Errc::precondition_violation, "need n >= 3 and d >= 2");
  EmbeddingPlan plan;
  try {
    plan.params = make_params(static_cast<double>(volume), beta);
  } catch (const Error& e) {
    if (e.code() == Errc::no_fixed_point || e.code() == Errc::invalid_growth) return std::nullopt;
    throw;
  }
  const PlgParams& p = plan.params;
  const long long delta = p.max_degree;
  if (beta.kind == BetaSpec::Kind::constant && beta.beta < 1.0) {
    plan.regime = Regime::LowBeta;
    plan.delta_eff = delta;
    const double de = static_cast<double>(delta);
    plan.x = (d + 1.0) / de;
    plan.y = std::pow(1.0 + std::pow(de, beta.beta - 1.0), -1.0 / (2.0 - beta.beta));
    plan.z = 1.0;
  } else {
    if (beta.kind == BetaSpec::Kind::constant)
      plan.regime = Regime::BetaOne;
    else
      plan.regime = beta.kind == BetaSpec::Kind::below_one ? Regime::FunctionalLow
                                                           : Regime::FunctionalHigh;
    plan.delta_eff = plan.regime == Regime::FunctionalLow ? floor_volume(p.volume) : delta;
    if (!(p.alpha > 1.0)) return std::nullopt;
    plan.cp = (d + 1.0) / static_cast<double>(plan.delta_eff);
    plan.c = 1.0 - 1.0 / p.alpha;
    plan.cpp = plan.regime == Regime::FunctionalHigh ? 1.0 : plan.c + 1.0 / p.alpha;
    if (!(plan.cp < plan.c)) return std::nullopt;
    plan.x = std::exp(-(1.0 - plan.cp) * p.alpha);
    plan.y = std::exp(-(1.0 - plan.c) * p.alpha);
    plan.z = std::exp(-(1.0 - plan.cpp) * p.alpha);
  }
  const double de = static_cast<double>(plan.delta_eff);
  const long long gd_lo = std::max<long long>(1, static_cast<long long>(std::ceil(plan.x * de - 1e-9)));
  const long long gd_hi = std::min(delta, static_cast<long long>(std::floor(plan.y * de + 1e-9)));
  const long long g_hi = std::min(delta, static_cast<long long>(std::floor(plan.z * de + 1e-9)));
  if (gd_lo > gd_hi || gd_hi + 1 > g_hi) return std::nullopt;
  plan.gd_interval = {gd_lo, gd_hi};
  plan.gamma_interval = {gd_hi + 1, g_hi};
  if (interval_size(p, gd_lo, gd_hi) < 4 * n_gd) return std::nullopt;
  const DegreeSequence seq = degree_counts(p);
  for (long long j = std::max<long long>(3, gd_hi + 1); j <= g_hi; ++j)
    plan.gamma_capacity += (j - 2) * seq.count(j);
  return plan;
}

EmbeddingPlan plan_embedding_low_beta(long long n_gd, int d, const BetaSpec& beta) {
  for (long long v = 2; v <= 10000000; ++v)
    if (auto plan = plan_low_beta_at(v, n_gd, d, beta)) return *plan;
  throw Error(Errc::plan_infeasible, "no feasible volume for the low-beta embedding");
}

}  // namespace plg
