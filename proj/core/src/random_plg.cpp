#include "plg/random_plg.hpp"

#include <cmath>

#include "plg/errors.hpp"

namespace plg {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error(Errc::domain_error, "empty range");
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % n;
  }
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<long long> node_degrees(const DegreeSequence& seq) {
  if (seq.node_total > 50000000) throw Error(Errc::invalid_params, "sequence too large to sample");
  std::vector<long long> deg;
  deg.reserve(static_cast<size_t>(seq.node_total));
  for (const DegreeRun& r : seq.runs)
    for (long long j = r.lo; j <= r.hi; ++j)
      for (long long c = 0; c < r.count; ++c) deg.push_back(j);
  return deg;
}

int first_node_of_degree(const DegreeSequence& seq, long long j) {
  long long before = 0;
  for (const DegreeRun& r : seq.runs) {
    if (j < r.lo) break;
    const long long hi = std::min(j - 1, r.hi);
    if (hi >= r.lo) before += r.count * (hi - r.lo + 1);
  }
  if (seq.count(j) == 0) throw Error(Errc::domain_error, "no node of that degree");
  return static_cast<int>(before + 1);
}

std::vector<CopyRecord> copy_list(const std::vector<long long>& degrees) {
  std::vector<CopyRecord> copies;
  for (size_t v = 0; v < degrees.size(); ++v)
    for (long long i = 1; i <= degrees[v]; ++i) copies.push_back({static_cast<int>(v) + 1, i});
  return copies;
}

boost::multiprecision::cpp_int count_matchings(long long k) {
  if (k < 0 || k % 2 != 0) throw Error(Errc::parity_error, "matching count needs even k >= 0");
  boost::multiprecision::cpp_int total = 1;
  for (long long i = k - 1; i >= 1; i -= 2) total *= i;
  return total;
}

boost::rational<long long> matching_edge_probability(long long k) {
  if (k < 2) throw Error(Errc::domain_error, "edge probability needs k >= 2");
  if (k % 2 != 0) throw Error(Errc::parity_error, "edge probability needs even k");
  return boost::rational<long long>(1, k - 1);
}

namespace {

// Shuffles positions 0..k-1 in place.
template <class T>
void fisher_yates(std::vector<T>& items, Rng& rng) {
  for (size_t i = items.size(); i > 1; --i) {
    const size_t j = static_cast<size_t>(rng.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

std::vector<int> copy_owners(const std::vector<long long>& degrees) {
  long long total = 0;
  for (long long d : degrees) {
    if (d < 0) throw Error(Errc::domain_error, "negative degree");
    total += d;
  }
  if (total % 2 != 0) throw Error(Errc::parity_error, "odd degree total");
  std::vector<int> owners;
  owners.reserve(static_cast<size_t>(total));
  for (size_t v = 0; v < degrees.size(); ++v)
    for (long long i = 0; i < degrees[v]; ++i) owners.push_back(static_cast<int>(v) + 1);
  return owners;
}

}  // namespace

std::vector<std::pair<long long, long long>> sample_matching(long long k, Rng& rng) {
  if (k < 0 || k % 2 != 0) throw Error(Errc::parity_error, "matching needs even k");
  std::vector<long long> pos(static_cast<size_t>(k));
  for (long long i = 0; i < k; ++i) pos[static_cast<size_t>(i)] = i;
  fisher_yates(pos, rng);
  std::vector<std::pair<long long, long long>> pairs;
  for (size_t i = 0; i + 1 < pos.size(); i += 2) {
    const long long a = pos[i], b = pos[i + 1];
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  return pairs;
}

MultiGraph sample_plg(const std::vector<long long>& degrees, std::uint64_t seed) {
  std::vector<int> owners = copy_owners(degrees);
  Rng rng(seed);
  fisher_yates(owners, rng);
  MultiGraph g(static_cast<int>(degrees.size()));
  for (size_t i = 0; i + 1 < owners.size(); i += 2) g.add_edge(owners[i], owners[i + 1]);
  return g;
}

MultiGraph sample_plg(const DegreeSequence& seq, std::uint64_t seed) {
  if (seq.degree_total % 2 != 0) throw Error(Errc::parity_error, "odd degree total");
  return sample_plg(node_degrees(seq), seed);
}

CutExpectation expected_cut(long long deg_sum_a, long long deg_sum_b, long long deg_sum_total) {
  if (deg_sum_total < 2) throw Error(Errc::domain_error, "degree total must be at least 2");
  if (deg_sum_a < 0 || deg_sum_b < 0 || deg_sum_a + deg_sum_b > deg_sum_total)
    throw Error(Errc::invalid_cut, "side degree sums exceed the total");
  const double ab = static_cast<double>(deg_sum_a) * static_cast<double>(deg_sum_b);
  return {ab / static_cast<double>(deg_sum_total), ab / static_cast<double>(deg_sum_total - 1)};
}

CutEstimate estimate_cut(const std::vector<long long>& degrees, const std::vector<int>& a,
                         const std::vector<int>& b, long long samples, std::uint64_t seed) {
  if (samples < 1) throw Error(Errc::domain_error, "need at least one sample");
  const int n = static_cast<int>(degrees.size());
  std::vector<int> side(static_cast<size_t>(n) + 1, 0);
  long long sa = 0, sb = 0, total = 0;
  for (long long d : degrees) total += d;
  for (int v : a) {
    if (v < 1 || v > n) throw Error(Errc::invalid_cut, "node out of range");
    if (side[static_cast<size_t>(v)]) throw Error(Errc::invalid_cut, "repeated node in A");
    side[static_cast<size_t>(v)] = 1;
    sa += degrees[static_cast<size_t>(v) - 1];
  }
  for (int v : b) {
    if (v < 1 || v > n) throw Error(Errc::invalid_cut, "node out of range");
    if (side[static_cast<size_t>(v)]) throw Error(Errc::invalid_cut, "A and B overlap");
    side[static_cast<size_t>(v)] = 2;
    sb += degrees[static_cast<size_t>(v) - 1];
  }
  const CutExpectation ex = expected_cut(sa, sb, total);
  const std::vector<int> base = copy_owners(degrees);
  std::vector<int> owners;
  double sum = 0.0, sum_sq = 0.0;
  for (long long i = 0; i < samples; ++i) {
    owners = base;
    Rng rng(stream_seed(seed, static_cast<std::uint64_t>(i)));
    fisher_yates(owners, rng);
    long long cut = 0;
    for (size_t k = 0; k + 1 < owners.size(); k += 2) {
      const int s = side[static_cast<size_t>(owners[k])], t = side[static_cast<size_t>(owners[k + 1])];
      if ((s == 1 && t == 2) || (s == 2 && t == 1)) ++cut;
    }
    sum += static_cast<double>(cut);
    sum_sq += static_cast<double>(cut) * static_cast<double>(cut);
  }
  CutEstimate est;
  est.samples = samples;
  est.mean = sum / static_cast<double>(samples);
  const double var = samples > 1 ? (sum_sq - sum * est.mean) / static_cast<double>(samples - 1) : 0.0;
  est.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(samples));
  est.lemma1_value = ex.lemma1;
  est.exact_value = ex.exact;
  return est;
}

CutEstimate estimate_cut(const DegreeSequence& seq, const std::vector<int>& a,
                         const std::vector<int>& b, long long samples, std::uint64_t seed) {
  return estimate_cut(node_degrees(seq), a, b, samples, seed);
}

}  // namespace plg
