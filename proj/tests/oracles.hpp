#pragma once

// Independent reference implementations used by the unit and acceptance
// tests. None of them call into the library code they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/math/special_functions/zeta.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "plg/multigraph.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;
using Real = boost::multiprecision::cpp_bin_float_50;

inline cpp_int ipow(const cpp_int& base, unsigned e) {
  cpp_int r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

// Largest y >= 0 with y^q * j^p <= V^q, i.e. floor(V / j^(p/q)).
inline long long floor_count(long long volume, long long j, unsigned p, unsigned q) {
  const cpp_int rhs = ipow(volume, q);
  const cpp_int jp = ipow(j, p);
  long long lo = 0, hi = volume;
  while (lo < hi) {
    const long long mid = lo + (hi - lo + 1) / 2;
    if (ipow(mid, q) * jp <= rhs)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

// Largest D with D^p <= V^q, i.e. floor(V^(q/p)).
inline long long floor_delta(long long volume, unsigned p, unsigned q) {
  const cpp_int rhs = ipow(volume, q);
  long long lo = 1, hi = 1;
  while (ipow(hi, p) <= rhs) hi *= 2;
  while (lo + 1 < hi) {
    const long long mid = lo + (hi - lo) / 2;
    if (ipow(mid, p) <= rhs)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

inline bool covers(const plg::MultiGraph& g, std::uint64_t mask) {
  for (const auto& [e, m] : g.edges()) {
    const bool a = (mask >> (e.first - 1)) & 1U, b = (mask >> (e.second - 1)) & 1U;
    if (!a && !b) return false;
  }
  return true;
}

// Minimum cover size by enumerating subsets in order of size. n <= 24.
inline long long brute_force_vc(const plg::MultiGraph& g) {
  const int n = g.node_count();
  for (int k = 0; k <= n; ++k) {
    std::vector<int> pick(static_cast<size_t>(n), 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do {
      std::uint64_t mask = 0;
      for (int i = 0; i < n; ++i)
        if (pick[static_cast<size_t>(i)]) mask |= std::uint64_t{1} << i;
      if (covers(g, mask)) return k;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return n;
}

// Minimum cover size as (forced self-loop nodes) + n' - MIS of the rest,
// MIS by bitmask branching. n <= 64.
inline long long mis_vc(const plg::MultiGraph& g) {
  const int n = g.node_count();
  std::vector<std::uint64_t> nb(static_cast<size_t>(n), 0);
  std::uint64_t forced = 0;
  for (const auto& [e, m] : g.edges()) {
    const int a = e.first - 1, b = e.second - 1;
    if (a == b) {
      forced |= std::uint64_t{1} << a;
    } else {
      nb[static_cast<size_t>(a)] |= std::uint64_t{1} << b;
      nb[static_cast<size_t>(b)] |= std::uint64_t{1} << a;
    }
  }
  std::function<int(std::uint64_t)> mis = [&](std::uint64_t p) -> int {
    if (p == 0) return 0;
    int best_v = -1, best_deg = -1, low_v = -1;
    for (std::uint64_t rest = p; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int deg = std::popcount(nb[static_cast<size_t>(v)] & p);
      if (deg <= 1) {
        low_v = v;
        break;
      }
      if (deg > best_deg) {
        best_deg = deg;
        best_v = v;
      }
    }
    if (low_v >= 0) return 1 + mis(p & ~(nb[static_cast<size_t>(low_v)] | (std::uint64_t{1} << low_v)));
    const std::uint64_t bit = std::uint64_t{1} << best_v;
    const int without = mis(p & ~bit);
    const int with = 1 + mis(p & ~(nb[static_cast<size_t>(best_v)] | bit));
    return std::max(without, with);
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t rest = all & ~forced;
  return std::popcount(forced) + std::popcount(rest) - mis(rest);
}

// Perfect matchings of k points by explicit recursion.
inline long long enumerate_matchings(int k) {
  std::function<long long(std::uint32_t)> rec = [&](std::uint32_t left) -> long long {
    if (left == 0) return 1;
    const int first = std::countr_zero(left);
    long long total = 0;
    for (std::uint32_t rest = left & (left - 1); rest; rest &= rest - 1)
      total += rec(left & ~(1U << first) & ~(1U << std::countr_zero(rest)));
    return total;
  };
  if (k % 2) return 0;
  return rec(k == 32 ? ~0U : (1U << k) - 1);
}

// Matchings of k points containing the pair {0, 1}, by the same recursion.
inline long long enumerate_matchings_with_pair(int k) {
  return k >= 2 ? enumerate_matchings(k - 2) : 0;
}

inline Real zeta_hp(const Real& s) { return boost::math::zeta(s); }

// 1 + eps_beta recomputed in 50-digit arithmetic.
inline Real factor_hp(const Real& beta, int d, const Real& eps) {
  const Real one = 1;
  if (beta <= 1) return one + eps / (1 + 2 * d);
  const Real z = zeta_hp(beta);
  const Real d1 = d + 1;
  if (beta <= 2) return one + eps / (one + d * ((z - 1) * pow(d1, beta) - 1) / 2);
  const Real two = 2;
  const Real inner = pow(two, -(beta + 1)) + z - 1 - pow(two, -beta) - pow(d1, -beta);
  return one + eps / (one + d * pow(d1, beta) * inner);
}

}  // namespace oracle
