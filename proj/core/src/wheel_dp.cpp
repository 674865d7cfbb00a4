#include "plg/wheel_dp.hpp"

#include <algorithm>
#include <array>
#include <climits>

#include "plg/errors.hpp"

namespace plg {

namespace {

constexpr int kInf = INT_MAX / 4;

}  // namespace

Cover rim_cover_dp(const MultiGraph& g, const std::vector<WheelGroup>& groups,
                   const std::vector<int>& leaves, const std::vector<int>& forced) {
  const size_t n = static_cast<size_t>(g.node_count());
  std::vector<int> rim, group_of, pos(n + 1, -1);
  std::vector<int> group_start, group_end;
  for (const WheelGroup& grp : groups) {
    if (grp.nodes.empty()) continue;
    group_start.push_back(static_cast<int>(rim.size()));
    for (int v : grp.nodes) {
      pos[static_cast<size_t>(v)] = static_cast<int>(rim.size());
      rim.push_back(v);
      group_of.push_back(static_cast<int>(group_start.size()) - 1);
    }
    group_end.push_back(static_cast<int>(rim.size()) - 1);
  }
  const int m = static_cast<int>(rim.size());
  std::vector<char> is_leaf(n + 1, 0), must(static_cast<size_t>(m), 0);
  for (int v : leaves) is_leaf[static_cast<size_t>(v)] = 1;
  for (int v : forced) {
    if (v < 1 || static_cast<size_t>(v) > n || pos[static_cast<size_t>(v)] < 0)
      throw Error(Errc::structure_violation, "forced node is not a wheel node");
    must[static_cast<size_t>(pos[static_cast<size_t>(v)])] = 1;
  }
  std::vector<char> step_edge(static_cast<size_t>(std::max(m, 1)), 0);  // i -- i+1 (mod m)
  std::vector<char> chord(group_start.size(), 0);
  std::vector<int> leaf_host(n + 1, 0);
  for (const auto& [e, mult] : g.edges()) {
    const auto [u, v] = e;
    const int pu = pos[static_cast<size_t>(u)], pv = pos[static_cast<size_t>(v)];
    const bool lu = is_leaf[static_cast<size_t>(u)], lv = is_leaf[static_cast<size_t>(v)];
    if (pu < 0 && pv < 0 && !lu && !lv) continue;
    if ((lu && lv) || (lu && u == v))
      throw Error(Errc::structure_violation, "edge between degree-1 nodes");
    if (lu || lv) {
      const int leaf = lu ? u : v, other = lu ? v : u;
      if (pos[static_cast<size_t>(other)] < 0) continue;
      if (leaf_host[static_cast<size_t>(leaf)] != 0 || mult > 1)
        throw Error(Errc::structure_violation, "degree-1 node is not pendant");
      leaf_host[static_cast<size_t>(leaf)] = other;
      must[static_cast<size_t>(pos[static_cast<size_t>(other)])] = 1;
      continue;
    }
    if (pu < 0 || pv < 0) continue;
    if (u == v) {
      must[static_cast<size_t>(pu)] = 1;
      continue;
    }
    const int a = std::min(pu, pv), b = std::max(pu, pv);
    if (b == a + 1) {
      step_edge[static_cast<size_t>(a)] = 1;
    } else if (a == 0 && b == m - 1) {
      step_edge[static_cast<size_t>(m - 1)] = 1;
    } else if (group_of[static_cast<size_t>(a)] == group_of[static_cast<size_t>(b)] &&
               a == group_start[static_cast<size_t>(group_of[static_cast<size_t>(a)])] &&
               b == group_end[static_cast<size_t>(group_of[static_cast<size_t>(a)])]) {
      chord[static_cast<size_t>(group_of[static_cast<size_t>(a)])] = 1;
    } else {
      throw Error(Errc::structure_violation, "wheel edge joins non-adjacent rim nodes");
    }
  }
  if (m == 0) return make_cover({});

  // State: (x_i, x of the current group's first node). Index = 2 * x + first.
  std::vector<int> best_cover;
  int best = kInf;
  for (int s0 = 0; s0 <= 1; ++s0) {
    if (must[0] && s0 == 0) continue;
    std::vector<std::array<int, 4>> cost(static_cast<size_t>(m));
    std::vector<std::array<int, 4>> from(static_cast<size_t>(m));
    for (auto& c : cost) c.fill(kInf);
    cost[0][static_cast<size_t>(2 * s0 + s0)] = s0;
    for (int i = 0; i + 1 < m; ++i) {
      const int nxt = i + 1;
      const bool starts = group_start[static_cast<size_t>(group_of[static_cast<size_t>(nxt)])] == nxt;
      const int grp = group_of[static_cast<size_t>(nxt)];
      const bool closes_chord = chord[static_cast<size_t>(grp)] && group_end[static_cast<size_t>(grp)] == nxt &&
                                group_start[static_cast<size_t>(grp)] != nxt;
      for (int st = 0; st < 4; ++st) {
        const int c = cost[static_cast<size_t>(i)][static_cast<size_t>(st)];
        if (c >= kInf) continue;
        const int x = st / 2, first = st % 2;
        for (int y = 0; y <= 1; ++y) {
          if (must[static_cast<size_t>(nxt)] && y == 0) continue;
          if (step_edge[static_cast<size_t>(i)] && !x && !y) continue;
          const int nfirst = starts ? y : first;
          if (closes_chord && !nfirst && !y) continue;
          const int ns = 2 * y + nfirst;
          if (c + y < cost[static_cast<size_t>(nxt)][static_cast<size_t>(ns)]) {
            cost[static_cast<size_t>(nxt)][static_cast<size_t>(ns)] = c + y;
            from[static_cast<size_t>(nxt)][static_cast<size_t>(ns)] = st;
          }
        }
      }
    }
    for (int st = 0; st < 4; ++st) {
      const int c = cost[static_cast<size_t>(m - 1)][static_cast<size_t>(st)];
      if (c >= kInf) continue;
      const int x = st / 2;
      if (m >= 2 && step_edge[static_cast<size_t>(m - 1)] && !x && !s0) continue;
      if (c < best) {
        best = c;
        best_cover.clear();
        int cur = st;
        for (int i = m - 1; i >= 0; --i) {
          if (cur / 2) best_cover.push_back(rim[static_cast<size_t>(i)]);
          if (i > 0) cur = from[static_cast<size_t>(i)][static_cast<size_t>(cur)];
        }
      }
    }
  }
  if (best >= kInf) throw Error(Errc::construction_bug, "wheel DP found no cover");
  return make_cover(std::move(best_cover));
}

Cover wheel_vc_dp(const EmbeddedPlg& e, const std::vector<int>& forced) {
  return rim_cover_dp(e.graph, e.wheel_groups, e.degree_one_nodes, forced);
}

Cover hat_cover(const EmbeddedPlg& e, const std::vector<int>& c_d) {
  std::vector<char> in(static_cast<size_t>(e.graph.node_count()) + 1, 0);
  for (int v : c_d) {
    if (v < 1 || v > e.graph.node_count() || e.roles[static_cast<size_t>(v)].role != Role::gd)
      throw Error(Errc::invalid_cover, "c_d must hold only G_d-side nodes");
    in[static_cast<size_t>(v)] = 1;
  }
  for (const auto& [p, mult] : e.graph.edges()) {
    const bool gd_edge = e.roles[static_cast<size_t>(p.first)].role == Role::gd &&
                         e.roles[static_cast<size_t>(p.second)].role == Role::gd;
    if (gd_edge && !in[static_cast<size_t>(p.first)] && !in[static_cast<size_t>(p.second)])
      throw Error(Errc::invalid_cover, "c_d misses a G_d-side edge");
  }
  std::vector<int> out = c_d;
  out.insert(out.end(), e.gamma.begin(), e.gamma.end());
  const Cover wheel = wheel_vc_dp(e, e.gamma);
  out.insert(out.end(), wheel.nodes.begin(), wheel.nodes.end());
  return make_cover(std::move(out));
}

bool WheelShape::cycle_plus_pendants() const {
  if (bad_leaves != 0 || chord_edges != 0) return false;
  if (rim_nodes >= 3) return cycle_edges == rim_nodes;
  return cycle_edges == rim_nodes - 1;
}

WheelShape wheel_shape(const EmbeddedPlg& e) {
  WheelShape s;
  const int m = static_cast<int>(e.rim_order.size());
  s.rim_nodes = m;
  std::vector<int> pos(static_cast<size_t>(e.graph.node_count()) + 1, -1);
  for (int i = 0; i < m; ++i) pos[static_cast<size_t>(e.rim_order[static_cast<size_t>(i)])] = i;
  std::vector<int> leaf_links(static_cast<size_t>(e.graph.node_count()) + 1, 0);
  for (const auto& [p, mult] : e.graph.edges()) {
    const Role ru = e.roles[static_cast<size_t>(p.first)].role, rv = e.roles[static_cast<size_t>(p.second)].role;
    if (ru == Role::wheel && rv == Role::wheel) {
      if (p.first == p.second) {
        ++s.self_loops;
        continue;
      }
      const int a = std::min(pos[static_cast<size_t>(p.first)], pos[static_cast<size_t>(p.second)]);
      const int b = std::max(pos[static_cast<size_t>(p.first)], pos[static_cast<size_t>(p.second)]);
      if (b == a + 1 || (a == 0 && b == m - 1))
        ++s.cycle_edges;
      else
        ++s.chord_edges;
    } else if (ru == Role::degree_one || rv == Role::degree_one) {
      const int leaf = ru == Role::degree_one ? p.first : p.second;
      const Role other = ru == Role::degree_one ? rv : ru;
      if (other != Role::wheel || mult > 1 || p.first == p.second)
        ++s.bad_leaves;
      else
        ++leaf_links[static_cast<size_t>(leaf)];
    }
  }
  for (int leaf : e.degree_one_nodes) {
    if (leaf_links[static_cast<size_t>(leaf)] == 1)
      ++s.pendant_leaves;
    else if (leaf_links[static_cast<size_t>(leaf)] > 1)
      ++s.bad_leaves;
  }
  return s;
}

}  // namespace plg
