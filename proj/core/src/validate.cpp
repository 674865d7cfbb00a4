#include "plg/validate.hpp"

#include <algorithm>
#include <set>

namespace plg {

namespace {

constexpr size_t kMaxListed = 1000;

void compare_histogram(const MultiGraph& g, const PlgParams& params, ValidationReport& r) {
  const DegreeHistogram actual = degree_histogram(g);
  const DegreeSequence seq = degree_counts(params);
  auto note = [&](long long j, long long exp, long long act) {
    ++r.mismatch_count;
    if (r.mismatches.size() < kMaxListed) r.mismatches.push_back({j, exp, act});
  };
  auto actual_at = [&](long long j) {
    const auto it = actual.find(j);
    return it == actual.end() ? 0LL : it->second;
  };
  // Degrees outside 1..Delta.
  for (const auto& [j, cnt] : actual)
    if (j < 1 || j > seq.max_degree) note(j, 0, cnt);
  for (const DegreeRun& run : seq.runs) {
    for (long long j = run.lo; j <= run.hi && r.mismatches.size() < kMaxListed; ++j) {
      const long long act = actual_at(j);
      if (act != run.count) note(j, run.count, act);
    }
  }
  r.histogram_ok = r.mismatch_count == 0;
}

}  // namespace

ValidationReport validate_plg(const MultiGraph& g, const PlgParams& params, const EmbeddingMeta* meta) {
  ValidationReport r;
  r.params_echo = params;
  compare_histogram(g, params, r);
  if (!r.histogram_ok) r.failures.push_back("degree histogram differs from degree_counts");
  r.connected = is_connected(g);
  if (!r.connected) r.failures.push_back("graph is not connected");
  if (meta == nullptr) return r;

  const size_t n = static_cast<size_t>(g.node_count());
  std::vector<char> gd(n + 1, 0), leaf(n + 1, 0);
  bool ids_ok = true;
  auto mark = [&](const std::vector<int>& ids, std::vector<char>& flag) {
    for (int v : ids) {
      if (v < 1 || static_cast<size_t>(v) > n)
        ids_ok = false;
      else
        flag[static_cast<size_t>(v)] = 1;
    }
  };
  mark(meta->gd_nodes, gd);
  mark(meta->degree_one_nodes, leaf);
  std::set<int> gamma, w1;
  std::vector<std::vector<int>> outside(n + 1);
  bool leaves_ok = true;
  for (const auto& [p, mult] : g.edges()) {
    const auto [u, v] = p;
    for (int s = 0; s < 2; ++s) {
      const int a = s == 0 ? u : v, b = s == 0 ? v : u;
      if (gd[static_cast<size_t>(a)] && !gd[static_cast<size_t>(b)] && !leaf[static_cast<size_t>(b)]) {
        gamma.insert(b);
        for (long long k = 0; k < mult; ++k) outside[static_cast<size_t>(a)].push_back(b);
      }
      if (leaf[static_cast<size_t>(a)] && !gd[static_cast<size_t>(b)] && !leaf[static_cast<size_t>(b)]) w1.insert(b);
      if (leaf[static_cast<size_t>(a)] && (gd[static_cast<size_t>(b)] || leaf[static_cast<size_t>(b)])) leaves_ok = false;
      if (u == v) break;
    }
  }
  const std::vector<int> gamma_v(gamma.begin(), gamma.end()), w1_v(w1.begin(), w1.end());
  std::vector<int> mg = meta->gamma, mw = meta->w1;
  std::sort(mg.begin(), mg.end());
  std::sort(mw.begin(), mw.end());
  r.roles_consistent = ids_ok && leaves_ok && gamma_v == mg && w1_v == mw;
  if (!*r.roles_consistent) r.failures.push_back("metadata roles do not match the graph");

  const Regime regime = regime_from_name(meta->regime);
  if (high_beta_regime(regime)) {
    r.gamma_subset_w1 = std::includes(w1_v.begin(), w1_v.end(), gamma_v.begin(), gamma_v.end());
    if (!*r.gamma_subset_w1) r.failures.push_back("gamma is not contained in W1");
    std::set<int> hosts;
    bool distinct = true;
    for (int v : meta->gd_nodes) {
      const auto& o = outside[static_cast<size_t>(v)];
      if (o.size() != 1 || !hosts.insert(o.front()).second) distinct = false;
    }
    r.distinct_gamma_hosts = distinct;
    if (!distinct) r.failures.push_back("G_d nodes do not have distinct single gamma hosts");
  }
  if (meta->gd_interval && !high_beta_regime(regime)) {
    bool inside = true;
    for (int v : meta->gd_nodes) {
      if (v < 1 || static_cast<size_t>(v) > n) continue;
      const long long deg = g.degree(v);
      if (deg < meta->gd_interval->first || deg > meta->gd_interval->second) inside = false;
    }
    r.gd_degrees_in_interval = inside;
    if (!inside) r.failures.push_back("gadget node degree outside the planned interval");
  }
  return r;
}

}  // namespace plg
