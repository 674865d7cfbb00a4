#include "plg/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "plg/errors.hpp"

namespace plg {

namespace {

// B_{2k} / (2k)! for k = 1..5.
constexpr double kBernoulliRatio[] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0,
                                      -1.0 / 1209600.0, 1.0 / 47900160.0};

double zeta_at(double s, long n, double* last_term) {
  double sum = 0.0;
  for (long k = n - 1; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
  const double nd = static_cast<double>(n);
  double tail = std::pow(nd, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(nd, -s);
  // Rising product s(s+1)...(s+2k-2) times n^(-s-2k+1).
  double term = s * std::pow(nd, -s - 1.0);
  for (int k = 0; k < 4; ++k) {
    tail += kBernoulliRatio[k] * term;
    term *= (s + 2 * k + 1) * (s + 2 * k + 2) / (nd * nd);
  }
  *last_term = std::fabs(kBernoulliRatio[4] * term);
  return sum + tail;
}

double table_denominator(double beta, int d, double z) {
  return 1.0 + d * (z - 1.0) * std::pow(d + 1.0, beta - 1.0) / 2.0;
}

double low_denominator(double beta, int d, double z) {
  return 1.0 + d * ((z - 1.0) * std::pow(d + 1.0, beta) - 1.0) / 2.0;
}

double mid_denominator(double beta, int d, double z) {
  const double d1 = d + 1.0;
  return 1.0 + d * std::pow(d1, beta) *
                   (std::pow(2.0, -(beta + 1.0)) + z - 1.0 - std::pow(2.0, -beta) -
                    std::pow(d1, -beta));
}

void check_query(int d, double eps_d) {
  if (d < 3) throw Error(Errc::domain_error, "d must be at least 3");
  if (!(eps_d > 0.0)) throw Error(Errc::domain_error, "eps_d must be positive");
}

BoundRow low_row(double beta, const std::string& regime, int d, double eps_d) {
  BoundRow row;
  row.beta = beta;
  row.regime = regime;
  row.d = d;
  row.eps_d = eps_d;
  row.denominator = 1.0 + 2.0 * d;
  row.factor = 1.0 + eps_d / row.denominator;
  return row;
}

}  // namespace

double zeta(double s, double tol) {
  if (!(s > 1.0)) throw Error(Errc::divergent, "zeta needs s > 1");
  if (!(tol > 0.0)) tol = 1e-12;
  double err = 0.0;
  for (long n = 16;; n *= 2) {
    const double v = zeta_at(s, n, &err);
    if (err <= tol * 1e-2 || n >= (1L << 22)) return v;
  }
}

double beta_max_gap(double x) { return zeta(x - 1.0, 1e-14) - 2.0 * zeta(x, 1e-14); }

double beta_max(double tol) {
  if (!(tol > 0.0)) tol = 1e-10;
  double lo = 2.1, hi = 3.0;
  if (!(beta_max_gap(lo) > 0.0 && beta_max_gap(hi) < 0.0))
    throw Error(Errc::construction_bug, "beta_max bracket lost its sign change");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (beta_max_gap(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

BoundRow inapprox_factor(double beta, int d, double eps_d, MidFormula mid) {
  check_query(d, eps_d);
  if (!(beta > 0.0)) throw Error(Errc::out_of_range, "beta must be positive");
  static const double bmax = beta_max(1e-12);
  if (beta >= bmax) throw Error(Errc::out_of_range, "beta must be below beta_max");
  if (beta < 1.0) return low_row(beta, "low", d, eps_d);
  if (beta == 1.0) return low_row(beta, "one", d, eps_d);
  BoundRow row;
  row.beta = beta;
  row.d = d;
  row.eps_d = eps_d;
  const double z = zeta(beta);
  if (beta <= 2.0) {
    row.regime = beta < 2.0 ? "mid" : "two";
    row.denominator = mid == MidFormula::alternate ? table_denominator(beta, d, z)
                                               : low_denominator(beta, d, z);
  } else {
    row.regime = "high";
    row.denominator = mid_denominator(beta, d, z);
  }
  row.factor = 1.0 + eps_d / row.denominator;
  return row;
}

BoundRow inapprox_factor(const BetaSpec& beta, int d, double eps_d, MidFormula mid) {
  switch (beta.kind) {
    case BetaSpec::Kind::below_one:
      check_query(d, eps_d);
      return low_row(1.0, "functional-below", d, eps_d);
    case BetaSpec::Kind::above_one:
      check_query(d, eps_d);
      return low_row(1.0, "functional-above", d, eps_d);
    default:
      return inapprox_factor(beta.beta, d, eps_d, mid);
  }
}

std::vector<double> beta_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) throw Error(Errc::domain_error, "bad beta grid");
  std::vector<double> grid;
  const long count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  // Snap to 12 decimals so points such as 1.0 and 2.0 land exactly.
  for (long i = 0; i <= count; ++i)
    grid.push_back(std::round((lo + static_cast<double>(i) * step) * 1e12) / 1e12);
  return grid;
}

std::vector<BoundRow> bounds_table(const std::vector<double>& grid, int d, double eps_d,
                                   MidFormula mid) {
  std::vector<BoundRow> rows;
  rows.reserve(grid.size());
  for (double b : grid) rows.push_back(inapprox_factor(b, d, eps_d, mid));
  return rows;
}

std::string bounds_csv(const std::vector<BoundRow>& rows) {
  std::ostringstream out;
  out << "beta,regime,d,eps_d,factor,denominator\n";
  char buf[64];
  auto real = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
  };
  for (const BoundRow& r : rows) {
    out << real(r.beta) << ',' << r.regime << ',' << r.d << ',' << real(r.eps_d) << ','
        << real(r.factor) << ',' << real(r.denominator) << '\n';
  }
  return out.str();
}

double normalize_eps(std::optional<double> eps_d, std::optional<double> ratio) {
  if (eps_d && ratio) throw Error(Errc::domain_error, "give either eps_d or ratio, not both");
  if (ratio) {
    if (!(*ratio > 1.0)) throw Error(Errc::domain_error, "ratio must exceed 1");
    return *ratio - 1.0;
  }
  if (eps_d) {
    if (!(*eps_d > 0.0)) throw Error(Errc::domain_error, "eps_d must be positive");
    return *eps_d;
  }
  throw Error(Errc::domain_error, "eps_d or ratio is required");
}

}  // namespace plg
