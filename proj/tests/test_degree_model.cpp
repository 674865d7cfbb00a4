#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "plg/degree_model.hpp"
#include "plg/errors.hpp"
#include "plg/zeta.hpp"

using namespace plg;

namespace {

std::vector<long long> dense_counts(double volume, double beta) {
  return degree_counts(make_params(volume, BetaSpec::constant_beta(beta))).dense();
}

}  // namespace

TEST_CASE("degree counts for e^alpha = 100, beta = 2") {
  const DegreeSequence s = degree_counts(make_params(100, BetaSpec::constant_beta(2)));
  CHECK(s.max_degree == 10);
  CHECK(s.dense() == std::vector<long long>{0, 100, 25, 11, 6, 4, 2, 2, 1, 1, 1});
  CHECK(s.degree_total == 280);
  CHECK_FALSE(s.parity_fixed);
  CHECK(s.node_total == 153);
}

TEST_CASE("parity fix for e^alpha = 10, beta = 1") {
  const DegreeSequence s = degree_counts(make_params(10, BetaSpec::constant_beta(1)));
  CHECK(s.max_degree == 10);
  CHECK(s.dense() == std::vector<long long>{0, 11, 5, 3, 2, 2, 1, 1, 1, 1, 1});
  CHECK(s.parity_fixed);
  CHECK(s.node_total == 28);
  CHECK(s.degree_total == 88);
}

TEST_CASE("smallest sequence") {
  for (double beta : {0.5, 1.0, 2.0}) {
    const DegreeSequence s = degree_counts(make_params(1, BetaSpec::constant_beta(beta)));
    CHECK(s.max_degree == 1);
    CHECK(s.count(1) == 2);
    CHECK(s.degree_total == 2);
  }
}

TEST_CASE("interval sizes") {
  const PlgParams p = make_params(100, BetaSpec::constant_beta(2));
  CHECK(interval_size(p, 3, 5) == 21);
  CHECK(interval_size(p, 1, p.max_degree) == node_total(p));
  CHECK(interval_size(make_params(26, BetaSpec::constant_beta(1.5)), 4, 8) == 8);
  CHECK_THROWS_AS(interval_size(p, 5, 3), Error);
  CHECK_THROWS_AS(interval_size(p, 1, 11), Error);
}

TEST_CASE("counts match the big-integer oracle") {
  struct Case { long long v; unsigned p, q; };
  for (const Case c : {Case{37, 1, 2}, Case{1000, 1, 1}, Case{777, 3, 2}, Case{5000, 2, 1}, Case{4321, 23, 10},
                       Case{123, 7, 10}}) {
    const double beta = static_cast<double>(c.p) / c.q;
    const PlgParams p = make_params(static_cast<double>(c.v), BetaSpec::constant_beta(beta));
    REQUIRE(p.max_degree == oracle::floor_delta(c.v, c.p, c.q));
    const DegreeSequence s = degree_counts(p);
    long long total = 0;
    for (long long j = 1; j <= p.max_degree && j <= 5000; ++j) {
      long long want = oracle::floor_count(c.v, j, c.p, c.q);
      if (j == 1 && s.parity_fixed) ++want;
      CHECK(s.count(j) == want);
    }
    for (const DegreeRun& r : s.runs) total += (r.hi - r.lo + 1) * r.count;
    CHECK(total == s.node_total);
    CHECK(s.degree_total % 2 == 0);
  }
}

TEST_CASE("counts are non-increasing past degree 1") {
  for (double beta : {0.4, 1.0, 1.7, 2.3}) {
    const DegreeSequence s = degree_counts(make_params(3000, BetaSpec::constant_beta(beta)));
    for (size_t i = 2; i < s.runs.size(); ++i) CHECK(s.runs[i].count < s.runs[i - 1].count);
    CHECK(s.runs.back().hi == s.max_degree);
  }
}

TEST_CASE("large maximum degree stays run-length encoded") {
  const PlgParams p = make_params(1e4, BetaSpec::constant_beta(0.5));
  CHECK(p.max_degree == 100000000);
  const DegreeSequence s = degree_counts(p);
  CHECK(s.runs.size() < 20000);
  CHECK(s.degree_total % 2 == 0);
  CHECK_THROWS_AS(s.dense(), Error);
}

TEST_CASE("floor helpers agree with the oracle on random points") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> vol(2, 200000), jj(1, 400);
  const unsigned ps[] = {1, 3, 2, 23, 1};
  const unsigned qs[] = {2, 2, 1, 10, 1};
  for (int t = 0; t < 300; ++t) {
    const int k = t % 5;
    const long long v = vol(rng), j = jj(rng);
    const double beta = static_cast<double>(ps[k]) / qs[k];
    CHECK(floor_power_ratio(static_cast<double>(v), j, beta) == oracle::floor_count(v, j, ps[k], qs[k]));
  }
}

TEST_CASE("effective beta") {
  CHECK(effective_beta(BetaSpec::constant_beta(1.5), 100) == 1.5);
  const long long n = static_cast<long long>(std::llround(std::exp(10.0)));
  CHECK(effective_beta(BetaSpec::below_one({1, 2}), n) == doctest::Approx(0.99).epsilon(1e-6));
  CHECK(effective_beta(BetaSpec::above_one({1, 2}), n) == doctest::Approx(1.01).epsilon(1e-6));
}

TEST_CASE("functional params run the node-count fixed point") {
  const PlgParams p = make_params(1000, BetaSpec::above_one({1, 2}));
  CHECK(p.beta_eff > 1.0);
  CHECK(p.realized_nodes == node_total(p));
  CHECK(p.beta_eff == doctest::Approx(effective_beta(p.beta, p.realized_nodes)));
  const PlgParams q = make_params(1000, BetaSpec::below_one({1, 2}));
  CHECK(q.beta_eff < 1.0);
  CHECK(q.realized_nodes == node_total(q));
}

TEST_CASE("params from alpha snap to integer volumes") {
  const PlgParams p = params_from_alpha(std::log(80.0), BetaSpec::constant_beta(1.5));
  CHECK(p.volume == 80.0);
  CHECK(p.max_degree == 18);
}

TEST_CASE("node count closed forms within 5 percent for beta >= 1") {
  for (double beta : {1.0, 1.5, 2.0, 2.3}) {
    for (double v : {1e4, 1e5}) {
      const PlgParams p = make_params(v, BetaSpec::constant_beta(beta));
      const double n = static_cast<double>(node_total(p));
      CHECK(std::fabs(n / regime_node_estimate(p) - 1.0) < 0.05);
    }
  }
}

TEST_CASE("fractional interval estimate below beta one") {
  const PlgParams p = make_params(1e4, BetaSpec::constant_beta(0.5));
  const IntervalEstimate e = interval_estimate_fraction(p, 0.1, 0.9);
  CHECK(e.rule == "fraction-below-one");
  CHECK(e.contains());
}

TEST_CASE("fractional upper bound at beta one misses narrow intervals") {
  // floor(1000/10) + floor(1000/11) = 190 but the closed form gives about 104.
  const PlgParams p = make_params(1000, BetaSpec::constant_beta(1));
  const IntervalEstimate e = interval_estimate(p, 10, 11);
  CHECK(e.exact_size == 190);
  CHECK(e.analytic_hi < 190);
  CHECK_FALSE(e.contains());
}

TEST_CASE("degenerate interval at beta = 1") {
  const PlgParams p = make_params(1000, BetaSpec::constant_beta(1));
  const IntervalEstimate e = interval_estimate(p, 20, 20);
  CHECK(e.exact_size == 50);
  CHECK(e.analytic_lo <= 50);
}

TEST_CASE("functional estimate brackets the whole sequence") {
  const PlgParams p = make_params(1000, BetaSpec::above_one({1, 2}));
  const IntervalEstimate e = interval_estimate(p, 1, p.max_degree);
  CHECK(e.rule == "functional-above-one");
  CHECK(e.exact_size == node_total(p));
  CHECK(e.contains());
}

TEST_CASE("no interval estimate above beta = 1") {
  CHECK_THROWS_AS(interval_estimate(make_params(100, BetaSpec::constant_beta(1.5)), 2, 4), Error);
}

TEST_CASE("high beta plans") {
  const EmbeddingPlan pet = plan_embedding_high_beta(10, 3, 1.5);
  CHECK(pet.params.volume == 80);
  CHECK(pet.params.max_degree == 18);
  REQUIRE(pet.u.has_value());
  CHECK(*pet.u == doctest::Approx(0.75));
  CHECK(pet.gamma_interval == std::pair<long long, long long>{10, 18});
  CHECK(interval_size(pet.params, 10, 18) == 11);
  CHECK(floor_power_ratio(80, 4, 1.5) == 10);

  const EmbeddingPlan c5 = plan_embedding_high_beta(5, 2, 1.5);
  CHECK(c5.params.volume == 26);
  CHECK(c5.params.max_degree == 8);
  CHECK(c5.gamma_interval == std::pair<long long, long long>{4, 8});
  CHECK(floor_power_ratio(26, 3, 1.5) == 5);

  const EmbeddingPlan hi = plan_embedding_high_beta(10, 3, 2.2);
  CHECK(hi.regime == Regime::HighBeta);
  CHECK(hi.gamma_interval.first == 3);
  CHECK_FALSE(hi.j0.has_value());
  CHECK_FALSE(hi.u.has_value());

  CHECK(plan_embedding_high_beta(10, 3, 2.0).regime == Regime::BetaTwo);
}

TEST_CASE("plans have enough wheel degree in the gamma range") {
  for (double beta : {1.3, 1.7, 2.0, 2.3}) {
    const EmbeddingPlan p = plan_embedding_high_beta(10, 3, beta);
    long long cap = 0;
    const DegreeSequence s = degree_counts(p.params);
    for (long long j = std::max<long long>(3, p.gamma_interval.first); j <= p.gamma_interval.second; ++j)
      cap += (j - 2) * s.count(j);
    CHECK(cap == p.gamma_capacity);
    CHECK(cap >= 10);
  }
}

TEST_CASE("low beta plans") {
  const EmbeddingPlan p = plan_embedding_low_beta(10, 3, BetaSpec::constant_beta(0.5));
  const double delta = static_cast<double>(p.params.max_degree);
  CHECK(p.regime == Regime::LowBeta);
  CHECK(p.x == doctest::Approx(4.0 / delta));
  CHECK(p.y == doctest::Approx(std::pow(1.0 + std::pow(delta, -0.5), -1.0 / 1.5)));
  CHECK(p.z == 1.0);
  CHECK(interval_size(p.params, p.gd_interval.first, p.gd_interval.second) >= 40);

  const EmbeddingPlan one = plan_embedding_low_beta(10, 3, BetaSpec::constant_beta(1));
  CHECK(one.regime == Regime::BetaOne);
  CHECK(one.c == doctest::Approx(1.0 - 1.0 / one.params.alpha));
  CHECK(one.cpp == doctest::Approx(one.c + 1.0 / one.params.alpha));
  CHECK(one.x == doctest::Approx(std::exp(-(1.0 - one.cp) * one.params.alpha)));

  const EmbeddingPlan below = plan_embedding_low_beta(10, 3, BetaSpec::below_one({1, 2}));
  CHECK(below.regime == Regime::FunctionalLow);
  CHECK(below.delta_eff == static_cast<long long>(std::floor(below.params.volume)));
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(make_params(0.5, BetaSpec::constant_beta(1)), Error);
  CHECK_THROWS_AS(make_params(10, BetaSpec::constant_beta(2.6)), Error);
  CHECK_THROWS_AS(make_params(10, BetaSpec::constant_beta(0)), Error);
}
