#include <random>

#include "doctest.h"
#include "graphs.hpp"
#include "oracles.hpp"
#include "plg/errors.hpp"
#include "plg/reduction.hpp"
#include "plg/vc.hpp"
#include "plg/wheel_dp.hpp"

using namespace plg;

TEST_CASE("cover checks") {
  const MultiGraph tri = fixtures::cycle(3);
  CHECK(is_cover(tri, {1, 2}));
  CHECK_FALSE(is_cover(tri, {1}));
  MultiGraph loop(1);
  loop.add_edge(1, 1);
  CHECK_FALSE(is_cover(loop, {}));
  CHECK(is_cover(loop, {1}));
}

TEST_CASE("exact cover on known graphs") {
  CHECK(exact_vc(fixtures::cycle(5)).nodes.size() == 3);
  CHECK(exact_vc(fixtures::petersen()).nodes.size() == 6);
  CHECK(exact_vc(reduce_pm(fixtures::cycle(3), 2).graph).nodes.size() == 8);
  const Cover c = exact_vc(fixtures::petersen());
  CHECK(is_cover(fixtures::petersen(), c.nodes));
}

TEST_CASE("exact cover honours forced nodes") {
  const Cover c = exact_vc(fixtures::cycle(4), {}, {1, 2});
  CHECK(c.nodes.size() == 3);
  CHECK(std::find(c.nodes.begin(), c.nodes.end(), 1) != c.nodes.end());
  CHECK(std::find(c.nodes.begin(), c.nodes.end(), 2) != c.nodes.end());
}

TEST_CASE("matching approximation") {
  MultiGraph edge(2);
  edge.add_edge(1, 2);
  CHECK(approx_vc_matching(edge).nodes.size() == 2);
  CHECK(approx_vc_matching(fixtures::star(5)).nodes.size() == 2);
  CHECK(approx_vc_matching(fixtures::cycle(5)).nodes.size() == 4);
}

TEST_CASE("exact cover against exhaustive search") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> size(2, 16);
  std::uniform_real_distribution<double> dens(0.1, 0.6);
  for (int t = 0; t < 200; ++t) {
    const int n = size(rng);
    std::bernoulli_distribution coin(dens(rng));
    MultiGraph g(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (coin(rng)) g.add_edge(i, j, 1 + (i + j) % 2);
    if (t % 7 == 0) g.add_edge(1, 1);
    const Cover c = exact_vc(g);
    const long long opt = oracle::brute_force_vc(g);
    CHECK(is_cover(g, c.nodes));
    CHECK(static_cast<long long>(c.nodes.size()) == opt);
    CHECK(static_cast<long long>(approx_vc_matching(g).nodes.size()) <= 2 * opt);
    const SimpleProjection s = underlying_simple(g);
    CHECK(exact_vc(s.graph, {}, s.forced).nodes.size() == c.nodes.size());
  }
}

TEST_CASE("bounded degree instances satisfy opt >= n / d") {
  for (unsigned seed : {1U, 2U, 3U}) {
    const MultiGraph g = fixtures::random_cubic(20, seed);
    CHECK(3 * exact_vc(g).nodes.size() >= 20);
  }
}

TEST_CASE("budget limits") {
  const MultiGraph g = fixtures::random_cubic(50, 4);
  CHECK_THROWS_AS(exact_vc(g, {10, 60}), Error);
}

TEST_CASE("cover file format") {
  const Cover c = make_cover({5, 2, 9});
  CHECK(emit_cover(c) == "s vc 3\n2\n5\n9\n");
  CHECK(parse_cover(emit_cover(c)).nodes == c.nodes);
  CHECK_THROWS_AS(parse_cover("s vc 2\n1\n"), Error);
}

TEST_CASE("rim dynamic program") {
  WheelGroup six{2, {1, 2, 3, 4, 5, 6}};
  CHECK(rim_cover_dp(fixtures::cycle(6), {six}, {}, {}).nodes.size() == 3);
  WheelGroup five{2, {1, 2, 3, 4, 5}};
  CHECK(rim_cover_dp(fixtures::cycle(5), {five}, {}, {}).nodes.size() == 3);
  CHECK(rim_cover_dp(fixtures::sun(6), {six}, {7, 8, 9, 10, 11, 12}, {}).nodes.size() == 6);
  const Cover forced = rim_cover_dp(fixtures::cycle(6), {six}, {}, {1, 2});
  CHECK(forced.nodes.size() == 4);
  CHECK(is_cover(fixtures::cycle(6), forced.nodes));
}

TEST_CASE("rim dynamic program handles group chords") {
  // Two groups 1..3 and 4..6 on one rim plus the chord 1-3 inside the first group.
  MultiGraph g = fixtures::cycle(6);
  g.add_edge(1, 3);
  const std::vector<WheelGroup> groups{{2, {1, 2, 3}}, {3, {4, 5, 6}}};
  const Cover c = rim_cover_dp(g, groups, {}, {});
  CHECK(is_cover(g, c.nodes));
  CHECK(static_cast<long long>(c.nodes.size()) == oracle::brute_force_vc(g));
  MultiGraph bad = fixtures::cycle(6);
  bad.add_edge(2, 5);
  CHECK_THROWS_AS(rim_cover_dp(bad, groups, {}, {}), Error);
}

TEST_CASE("rim dynamic program matches exhaustive search on random wheels") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 60; ++t) {
    const int m = 1 + static_cast<int>(rng() % 12);
    MultiGraph g(m);
    std::vector<WheelGroup> groups;
    int start = 1;
    while (start <= m) {
      const int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(m - start + 1));
      WheelGroup grp{static_cast<long long>(groups.size() + 2), {}};
      for (int v = start; v < start + len; ++v) grp.nodes.push_back(v);
      if (len >= 3 && rng() % 2) g.add_edge(start, start + len - 1);
      groups.push_back(grp);
      start += len;
    }
    for (int i = 1; i < m; ++i)
      if (rng() % 4) g.add_edge(i, i + 1, 1 + static_cast<long long>(rng() % 2));
    if (m >= 3 && rng() % 2) g.add_edge(1, m);
    if (m >= 1 && rng() % 5 == 0) g.add_edge(m, m);
    std::vector<int> leaves;
    const int nleaves = static_cast<int>(rng() % 5);
    for (int k = 0; k < nleaves; ++k) {
      const int leaf = g.add_nodes(1);
      g.add_edge(1 + static_cast<int>(rng() % static_cast<unsigned>(m)), leaf);
      leaves.push_back(leaf);
    }
    const std::vector<int> forced = rng() % 2 ? std::vector<int>{1} : std::vector<int>{};
    MultiGraph with_forced = g;
    for (int v : forced) with_forced.add_edge(v, v);
    const Cover c = rim_cover_dp(g, groups, leaves, forced);
    CHECK(is_cover(with_forced, c.nodes));
    CHECK(static_cast<long long>(c.nodes.size()) == oracle::brute_force_vc(with_forced));
  }
}
