#include <random>

#include "doctest.h"
#include "graphs.hpp"
#include "oracles.hpp"

TEST_CASE("floor count oracle on hand values") {
  // y_j = floor(100 / j^2)
  CHECK(oracle::floor_count(100, 3, 2, 1) == 11);
  CHECK(oracle::floor_count(100, 10, 2, 1) == 1);
  // floor(26 / 3^1.5) = 5
  CHECK(oracle::floor_count(26, 3, 3, 2) == 5);
  CHECK(oracle::floor_delta(100, 2, 1) == 10);
  CHECK(oracle::floor_delta(26, 3, 2) == 8);
  CHECK(oracle::floor_delta(10000, 1, 2) == 100000000);
}

TEST_CASE("vertex cover oracles agree") {
  CHECK(oracle::brute_force_vc(fixtures::cycle(5)) == 3);
  CHECK(oracle::brute_force_vc(fixtures::petersen()) == 6);
  CHECK(oracle::mis_vc(fixtures::petersen()) == 6);
  CHECK(oracle::mis_vc(fixtures::sun(6)) == 6);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const plg::MultiGraph g = fixtures::random_min2(3 + t % 8, rng);
    CHECK(oracle::mis_vc(g) == oracle::brute_force_vc(g));
  }
  plg::MultiGraph loop(2);
  loop.add_edge(1, 1);
  loop.add_edge(1, 2);
  CHECK(oracle::brute_force_vc(loop) == 1);
  CHECK(oracle::mis_vc(loop) == 1);
}

TEST_CASE("matching enumeration and zeta oracle") {
  CHECK(oracle::enumerate_matchings(2) == 1);
  CHECK(oracle::enumerate_matchings(4) == 3);
  CHECK(oracle::enumerate_matchings(6) == 15);
  CHECK(oracle::enumerate_matchings(8) == 105);
  const oracle::Real pi = boost::math::constants::pi<oracle::Real>();
  CHECK(static_cast<double>(abs(oracle::zeta_hp(2) - pi * pi / 6)) < 1e-40);
}
