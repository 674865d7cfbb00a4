#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "plg/degree_model.hpp"
#include "plg/multigraph.hpp"

namespace plg {

// mt19937_64 with an unbiased bounded draw, so sequences do not depend on the
// standard library's distribution implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform on [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

// splitmix64 finaliser over seed and stream index.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream);

struct CopyRecord {
  int owner = 0;
  long long index = 0;  // 1..deg(owner)
};

// Nodes are numbered by ascending degree: the y_1 degree-1 nodes first, then
// degree 2, and so on.
std::vector<long long> node_degrees(const DegreeSequence& seq);
int first_node_of_degree(const DegreeSequence& seq, long long j);
std::vector<CopyRecord> copy_list(const std::vector<long long>& degrees);

boost::multiprecision::cpp_int count_matchings(long long k);
boost::rational<long long> matching_edge_probability(long long k);

// Pairs of copy positions 0..k-1 from a Fisher-Yates shuffle.
std::vector<std::pair<long long, long long>> sample_matching(long long k, Rng& rng);

MultiGraph sample_plg(const std::vector<long long>& degrees, std::uint64_t seed);
MultiGraph sample_plg(const DegreeSequence& seq, std::uint64_t seed);

struct CutExpectation {
  double lemma1 = 0.0;
  double exact = 0.0;
};

CutExpectation expected_cut(long long deg_sum_a, long long deg_sum_b, long long deg_sum_total);

struct CutEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long long samples = 0;
  double lemma1_value = 0.0;
  double exact_value = 0.0;
};

// Sample i uses Rng(stream_seed(seed, i)).
CutEstimate estimate_cut(const std::vector<long long>& degrees, const std::vector<int>& a,
                         const std::vector<int>& b, long long samples, std::uint64_t seed);
CutEstimate estimate_cut(const DegreeSequence& seq, const std::vector<int>& a,
                         const std::vector<int>& b, long long samples, std::uint64_t seed);

}  // namespace plg
