#include "plg/vc.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <sstream>

#include "plg/errors.hpp"

namespace plg {

Cover make_cover(std::vector<int> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  Cover c;
  c.certified_size = static_cast<long long>(nodes.size());
  c.nodes = std::move(nodes);
  return c;
}

bool is_cover(const MultiGraph& g, const std::vector<int>& c) {
  std::vector<char> in(static_cast<size_t>(g.node_count()) + 1, 0);
  for (int v : c)
    if (v >= 1 && v <= g.node_count()) in[static_cast<size_t>(v)] = 1;
  for (const auto& [e, m] : g.edges())
    if (!in[static_cast<size_t>(e.first)] && !in[static_cast<size_t>(e.second)]) return false;
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

class Bits {
 public:
  explicit Bits(int n = 0) : w_(static_cast<size_t>((n + 63) / 64), 0) {}
  void set(int i) { w_[static_cast<size_t>(i) >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { w_[static_cast<size_t>(i) >> 6] &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1ULL; }
  int and_count(const Bits& o) const {
    int c = 0;
    for (size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
    return c;
  }
  int first_and(const Bits& o, int from = 0) const {
    for (size_t k = static_cast<size_t>(from) >> 6; k < w_.size(); ++k) {
      std::uint64_t x = w_[k] & o.w_[k];
      if (k == (static_cast<size_t>(from) >> 6)) x &= ~0ULL << (from & 63);
      if (x) return static_cast<int>(k * 64) + std::countr_zero(x);
    }
    return -1;
  }
  int first() const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return static_cast<int>(k * 64) + std::countr_zero(w_[k]);
    return -1;
  }
  int next(int i) const {
    ++i;
    for (size_t k = static_cast<size_t>(i) >> 6; k < w_.size(); ++k) {
      std::uint64_t x = w_[k];
      if (k == (static_cast<size_t>(i) >> 6)) x &= ~0ULL << (i & 63);
      if (x) return static_cast<int>(k * 64) + std::countr_zero(x);
    }
    return -1;
  }

 private:
  std::vector<std::uint64_t> w_;
};

class BranchAndBound {
 public:
  BranchAndBound(std::vector<Bits> adj, int n, double time_limit)
      : adj_(std::move(adj)), n_(n), deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                                                  std::chrono::duration<double>(time_limit))) {}

  std::vector<int> solve() {
    Bits alive(n_);
    for (int v = 0; v < n_; ++v) alive.set(v);
    for (int v = 0; v < n_; ++v) best_.push_back(v);
    best_size_ = n_;
    rec(alive);
    return best_;
  }

 private:
  void rec(Bits alive) {
    if ((++calls_ & 1023) == 0 && Clock::now() > deadline_)
      throw Error(Errc::budget_exceeded, "exact vertex cover ran past its time limit");
    const size_t mark = stack_.size();
    // Degree-0 and degree-1 rules to a fixed point.
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = alive.first(); v >= 0; v = alive.next(v)) {
        const int d = adj_[static_cast<size_t>(v)].and_count(alive);
        if (d == 0) {
          alive.reset(v);
        } else if (d == 1) {
          const int u = adj_[static_cast<size_t>(v)].first_and(alive);
          alive.reset(u);
          alive.reset(v);
          stack_.push_back(u);
          changed = true;
        }
      }
    }
    const int size = static_cast<int>(stack_.size());
    if (size >= best_size_) {
      stack_.resize(mark);
      return;
    }
    int pivot = -1, pivot_deg = 0;
    for (int v = alive.first(); v >= 0; v = alive.next(v)) {
      const int d = adj_[static_cast<size_t>(v)].and_count(alive);
      if (d > pivot_deg) {
        pivot = v;
        pivot_deg = d;
      }
    }
    if (pivot < 0) {
      best_size_ = size;
      best_ = stack_;
      stack_.resize(mark);
      return;
    }
    if (size + matching_bound(alive) >= best_size_) {
      stack_.resize(mark);
      return;
    }
    {
      Bits next = alive;
      next.reset(pivot);
      stack_.push_back(pivot);
      rec(next);
      stack_.pop_back();
    }
    if (size + pivot_deg < best_size_) {
      Bits next = alive;
      next.reset(pivot);
      const Bits& nb = adj_[static_cast<size_t>(pivot)];
      for (int u = nb.first_and(alive); u >= 0; u = nb.first_and(alive, u + 1)) {
        next.reset(u);
        stack_.push_back(u);
      }
      rec(next);
    }
    stack_.resize(mark);
  }

  int matching_bound(const Bits& alive) const {
    Bits free = alive;
    int matched = 0;
    for (int v = free.first(); v >= 0; v = free.next(v)) {
      const int u = adj_[static_cast<size_t>(v)].first_and(free);
      if (u < 0) continue;
      free.reset(v);
      free.reset(u);
      ++matched;
    }
    return matched;
  }

  std::vector<Bits> adj_;
  int n_;
  Clock::time_point deadline_;
  long long calls_ = 0;
  int best_size_ = 0;
  std::vector<int> best_;
  std::vector<int> stack_;
};

}  // namespace

Cover exact_vc(const MultiGraph& g, const SolveBudget& budget, const std::vector<int>& forced) {
  const int n = g.node_count();
  const auto adj = g.adjacency();
  std::vector<char> alive(static_cast<size_t>(n) + 1, 1);
  std::vector<int> deg(static_cast<size_t>(n) + 1, 0);
  alive[0] = 0;
  for (int v = 1; v <= n; ++v) deg[static_cast<size_t>(v)] = static_cast<int>(adj[static_cast<size_t>(v)].size());
  std::vector<int> cover;
  auto remove = [&](int v, bool take) {
    if (!alive[static_cast<size_t>(v)]) return;
    alive[static_cast<size_t>(v)] = 0;
    if (take) cover.push_back(v);
    for (int w : adj[static_cast<size_t>(v)]) --deg[static_cast<size_t>(w)];
  };
  for (int v : g.self_loop_nodes()) remove(v, true);
  for (int v : forced) {
    if (v < 1 || v > n) throw Error(Errc::invalid_cover, "forced node out of range");
    remove(v, true);
  }
  std::vector<int> queue;
  for (int v = 1; v <= n; ++v) queue.push_back(v);
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    if (!alive[static_cast<size_t>(v)]) continue;
    if (deg[static_cast<size_t>(v)] == 0) {
      remove(v, false);
    } else if (deg[static_cast<size_t>(v)] == 1) {
      int u = 0;
      for (int w : adj[static_cast<size_t>(v)])
        if (alive[static_cast<size_t>(w)]) u = w;
      remove(u, true);
      for (int w : adj[static_cast<size_t>(u)])
        if (alive[static_cast<size_t>(w)]) queue.push_back(w);
    }
  }
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v)
    if (alive[static_cast<size_t>(v)]) rest.push_back(v);
  if (static_cast<long long>(rest.size()) > budget.node_limit)
    throw Error(Errc::budget_exceeded, std::to_string(rest.size()) + " nodes left after kernelization");
  if (!rest.empty()) {
    std::vector<int> index(static_cast<size_t>(n) + 1, -1);
    for (size_t i = 0; i < rest.size(); ++i) index[static_cast<size_t>(rest[i])] = static_cast<int>(i);
    const int k = static_cast<int>(rest.size());
    std::vector<Bits> badj(static_cast<size_t>(k), Bits(k));
    for (int i = 0; i < k; ++i)
      for (int w : adj[static_cast<size_t>(rest[static_cast<size_t>(i)])])
        if (index[static_cast<size_t>(w)] >= 0) badj[static_cast<size_t>(i)].set(index[static_cast<size_t>(w)]);
    BranchAndBound bb(std::move(badj), k, budget.time_limit);
    for (int i : bb.solve()) cover.push_back(rest[static_cast<size_t>(i)]);
  }
  return make_cover(std::move(cover));
}

Cover approx_vc_matching(const MultiGraph& g) {
  std::vector<char> in(static_cast<size_t>(g.node_count()) + 1, 0);
  std::vector<int> cover;
  for (const auto& [e, m] : g.edges()) {
    if (in[static_cast<size_t>(e.first)] || in[static_cast<size_t>(e.second)]) continue;
    in[static_cast<size_t>(e.first)] = in[static_cast<size_t>(e.second)] = 1;
    cover.push_back(e.first);
    if (e.second != e.first) cover.push_back(e.second);
  }
  return make_cover(std::move(cover));
}

std::string emit_cover(const Cover& c) {
  std::ostringstream out;
  out << "s vc " << c.nodes.size() << '\n';
  for (int v : c.nodes) out << v << '\n';
  return out.str();
}

Cover parse_cover(const std::string& text) {
  std::istringstream in(text);
  std::string s, vc;
  long long size = -1;
  if (!(in >> s >> vc >> size) || s != "s" || vc != "vc" || size < 0)
    throw Error(Errc::parse_error, "cover file must start with 's vc <size>'");
  std::vector<int> nodes;
  int v = 0;
  while (in >> v) nodes.push_back(v);
  if (!in.eof()) throw Error(Errc::parse_error, "bad node index in cover file");
  if (static_cast<long long>(nodes.size()) != size)
    throw Error(Errc::parse_error, "cover size does not match header");
  Cover c = make_cover(nodes);
  if (c.certified_size != size) throw Error(Errc::parse_error, "duplicate nodes in cover file");
  return c;
}

}  // namespace plg
