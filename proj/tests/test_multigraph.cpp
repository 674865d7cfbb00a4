#include <random>

#include "doctest.h"
#include "graphs.hpp"
#include "oracles.hpp"
#include "plg/errors.hpp"
#include "plg/multigraph.hpp"

using namespace plg;

TEST_CASE("degrees") {
  MultiGraph a(2);
  a.add_edge(1, 2, 3);
  CHECK(a.degrees() == std::vector<long long>{0, 3, 3});
  MultiGraph b(1);
  b.add_edge(1, 1, 2);
  CHECK(b.degree(1) == 4);
  MultiGraph c(3);
  c.add_edge(1, 2);
  c.add_edge(2, 3);
  CHECK(c.degrees() == std::vector<long long>{0, 1, 2, 1});
  CHECK_THROWS_AS(c.add_edge(0, 1), Error);
  CHECK_THROWS_AS(c.add_edge(1, 4), Error);
}

TEST_CASE("histograms") {
  MultiGraph path(3);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  CHECK(degree_histogram(path) == DegreeHistogram{{1, 2}, {2, 1}});
  CHECK(degree_histogram(MultiGraph(4)) == DegreeHistogram{{0, 4}});
  CHECK(degree_histogram(fixtures::cycle(3)) == DegreeHistogram{{2, 3}});
}

TEST_CASE("connectivity") {
  CHECK(is_connected(fixtures::cycle(3)));
  MultiGraph two(4);
  two.add_edge(1, 2);
  two.add_edge(3, 4);
  CHECK_FALSE(is_connected(two));
  MultiGraph loop(1);
  loop.add_edge(1, 1);
  CHECK(is_connected(loop));
}

TEST_CASE("underlying simple graph") {
  MultiGraph g(2);
  g.add_edge(1, 2, 3);
  SimpleProjection s = underlying_simple(g);
  CHECK(s.graph.multiplicity(1, 2) == 1);
  CHECK(s.graph.total_multiplicity() == 1);
  CHECK(s.forced.empty());

  MultiGraph h(2);
  h.add_edge(1, 1);
  h.add_edge(1, 2);
  s = underlying_simple(h);
  CHECK(s.graph.distinct_edges() == 1);
  CHECK(s.forced == std::vector<int>{1});

  const MultiGraph pet = fixtures::petersen();
  CHECK(underlying_simple(pet).graph == pet);
  CHECK(underlying_simple(underlying_simple(g).graph).graph == underlying_simple(g).graph);
}

TEST_CASE("covers of a multigraph and its projection coincide") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> node(1, 8), mult(1, 3);
  for (int t = 0; t < 30; ++t) {
    MultiGraph g(8);
    for (int e = 0; e < 10; ++e) g.add_edge(node(rng), node(rng), mult(rng));
    const SimpleProjection s = underlying_simple(g);
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
      bool forced_in = true;
      for (int v : s.forced) forced_in = forced_in && ((mask >> (v - 1)) & 1U);
      CHECK(oracle::covers(g, mask) == (oracle::covers(s.graph, mask) && forced_in));
    }
  }
}

TEST_CASE("handshake") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> node(1, 12), mult(1, 4);
  MultiGraph g(12);
  for (int e = 0; e < 40; ++e) g.add_edge(node(rng), node(rng), mult(rng));
  long long sum = 0;
  for (int v = 1; v <= 12; ++v) sum += g.degree(v);
  CHECK(sum == 2 * g.total_multiplicity());
}

TEST_CASE("plgm round trip") {
  MultiGraph g(4);
  g.add_edge(1, 2, 2);
  g.add_edge(3, 3);
  g.add_edge(2, 4);
  const std::string text = emit_plgm(g, {"hello"});
  CHECK(text == "p plgm 4 3\nc hello\ne 1 2 2\ne 2 4 1\ne 3 3 1\n");
  const PlgmDocument doc = parse_plgm(text);
  CHECK(doc.graph == g);
  CHECK(doc.comments == std::vector<std::string>{"hello"});
}

TEST_CASE("plgm rejects malformed input") {
  CHECK_THROWS_AS(parse_plgm("p plgm 2 1\ne 2 1 1\n"), Error);
  CHECK_THROWS_AS(parse_plgm("p plgm 2 2\ne 1 2 1\n"), Error);
  CHECK_THROWS_AS(parse_plgm("p plgm 2 2\ne 1 2 1\ne 1 2 1\n"), Error);
  CHECK_THROWS_AS(parse_plgm("p plgm 2 1\ne 1 3 1\n"), Error);
  CHECK_THROWS_AS(parse_plgm("p plgm 2 1\ne 1 2 0\n"), Error);
  CHECK_THROWS_AS(parse_plgm("p plgm 2 1\ne 1 2 1\nc late\n"), Error);
  CHECK_THROWS_AS(parse_plgm("q plgm 2 1\ne 1 2 1\n"), Error);
}

TEST_CASE("induced subgraph relabels in the given order") {
  const MultiGraph pet = fixtures::petersen();
  const MultiGraph outer = induced_subgraph(pet, {1, 2, 3, 4, 5});
  CHECK(outer == fixtures::cycle(5));
}
