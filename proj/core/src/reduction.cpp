#include "plg/reduction.hpp"

#include <algorithm>
#include <numeric>

#include "plg/errors.hpp"

namespace plg {

namespace {

// Construction step that cannot complete at this volume; the caller regrows.
struct AttemptFailed {
  std::string why;
};

void check_degrees(const MultiGraph& g, int d) {
  if (d < 2) throw Error(Errc::precondition_violation, "d must be at least 2");
  if (g.node_count() < 3) throw Error(Errc::precondition_violation, "input needs at least 3 nodes");
  if (!g.is_simple()) throw Error(Errc::precondition_violation, "input graph must be simple");
  for (int v = 1; v <= g.node_count(); ++v) {
    if (g.degree(v) < 2)
      throw Error(Errc::precondition_violation, "node " + std::to_string(v) + " has degree below 2");
    if (g.degree(v) > d)
      throw Error(Errc::precondition_violation, "node " + std::to_string(v) + " has degree above d");
  }
}

void check_input(const MultiGraph& g, int d) {
  check_degrees(g, d);
  if (!is_connected(g)) throw Error(Errc::precondition_violation, "input graph must be connected");
}

struct Layout {
  int gd_count = 0;
  int total = 0;
  std::vector<WheelGroup> groups;  // non-empty, ascending degree
  std::vector<int> rim;
  std::vector<int> leaves;
  std::vector<long long> target;  // by node id
  std::vector<NodeRole> roles;
};

// G_d nodes take ids 1..gd_count, wheel nodes follow in rim order, leaves last.
Layout make_layout(const std::vector<long long>& gd_target, const std::vector<long long>& wheel_count,
                   long long leaves) {
  Layout lay;
  lay.gd_count = static_cast<int>(gd_target.size()) - 1;
  long long wheel_total = 0;
  for (size_t j = 2; j < wheel_count.size(); ++j) wheel_total += wheel_count[j];
  const long long total = lay.gd_count + wheel_total + leaves;
  if (total > 20000000) throw AttemptFailed{"embedding too large"};
  lay.total = static_cast<int>(total);
  lay.target.assign(static_cast<size_t>(total) + 1, 0);
  lay.roles.assign(static_cast<size_t>(total) + 1, NodeRole{});
  for (int v = 1; v <= lay.gd_count; ++v) {
    lay.target[static_cast<size_t>(v)] = gd_target[static_cast<size_t>(v)];
    lay.roles[static_cast<size_t>(v)] = {Role::gd, v, gd_target[static_cast<size_t>(v)], 0};
  }
  int id = lay.gd_count;
  for (size_t j = 2; j < wheel_count.size(); ++j) {
    if (wheel_count[j] <= 0) continue;
    WheelGroup grp;
    grp.degree = static_cast<long long>(j);
    for (long long l = 1; l <= wheel_count[j]; ++l) {
      ++id;
      grp.nodes.push_back(id);
      lay.rim.push_back(id);
      lay.target[static_cast<size_t>(id)] = grp.degree;
      lay.roles[static_cast<size_t>(id)] = {Role::wheel, static_cast<int>(lay.rim.size()), grp.degree,
                                            static_cast<int>(l)};
    }
    lay.groups.push_back(std::move(grp));
  }
  for (long long i = 1; i <= leaves; ++i) {
    ++id;
    lay.leaves.push_back(id);
    lay.target[static_cast<size_t>(id)] = 1;
    lay.roles[static_cast<size_t>(id)] = {Role::degree_one, static_cast<int>(i), 1, 0};
  }
  return lay;
}

class Builder {
 public:
  explicit Builder(const Layout& lay) : graph(lay.total), residual(lay.target) {}

  void add(int u, int v, long long m) {
    if (m <= 0) return;
    long long& ru = residual[static_cast<size_t>(u)];
    long long& rv = residual[static_cast<size_t>(v)];
    if (u == v ? ru < 2 * m : (ru < m || rv < m))
      throw Error(Errc::construction_bug, "edge exceeds a target degree");
    graph.add_edge(u, v, m);
    if (u == v) {
      ru -= 2 * m;
    } else {
      ru -= m;
      rv -= m;
    }
  }

  void add_rim(const std::vector<int>& rim) {
    const size_t m = rim.size();
    if (m == 1) {
      add(rim[0], rim[0], 1);
      return;
    }
    for (size_t i = 0; i < m; ++i) add(rim[i], rim[(i + 1) % m], 1);
  }

  // Next host with residual left, scanning cyclically from cursor.
  int next_host(const std::vector<int>& hosts, size_t& cursor) {
    for (size_t step = 0; step < hosts.size(); ++step) {
      const size_t k = (cursor + step) % hosts.size();
      if (residual[static_cast<size_t>(hosts[k])] > 0) {
        cursor = (k + 1) % hosts.size();
        return hosts[k];
      }
    }
    throw AttemptFailed{"host residual exhausted"};
  }

  MultiGraph graph;
  std::vector<long long> residual;
};

std::vector<int> host_list(const std::vector<const WheelGroup*>& order, size_t rotation) {
  std::vector<int> hosts;
  const size_t k = order.size();
  for (size_t i = 0; i < k; ++i)
    for (int v : order[(i + rotation) % k]->nodes) hosts.push_back(v);
  return hosts;
}

std::vector<const WheelGroup*> host_groups(const Layout& lay, long long lo, long long hi,
                                           bool descending) {
  std::vector<const WheelGroup*> out;
  for (const WheelGroup& grp : lay.groups)
    if (grp.degree >= std::max<long long>(3, lo) && grp.degree <= hi) out.push_back(&grp);
  if (descending) std::reverse(out.begin(), out.end());
  return out;
}

EmbeddedPlg finish(const Layout& lay, Builder& b, const EmbeddingPlan& plan, int original_nodes) {
  std::vector<int> pool;
  FillWheelResult fill;
  try {
    fill = fill_wheel(lay.groups, b.residual, pool);
  } catch (const Error& e) {
    if (e.code() == Errc::construction_bug) throw AttemptFailed{e.what()};
    throw;
  }
  for (const auto& [u, v, m] : fill.edges) b.graph.add_edge(u, v, m);
  for (int v = 1; v <= lay.total; ++v)
    if (b.residual[static_cast<size_t>(v)] != 0)
      throw Error(Errc::construction_bug, "residual degree left after Fill_Wheel");
  EmbeddedPlg e;
  e.graph = std::move(b.graph);
  e.params = plan.params;
  e.plan = plan;
  e.roles = lay.roles;
  for (int v = 1; v <= lay.gd_count; ++v) e.gd_nodes.push_back(v);
  e.wheel_groups = lay.groups;
  e.rim_order = lay.rim;
  e.degree_one_nodes = lay.leaves;
  e.original_nodes = original_nodes;
  e.fill = std::move(fill);
  e.gamma = compute_gamma(e);
  e.w1 = compute_w1(e);
  return e;
}

// Rotations of the host group order, keeping the first build whose Fill_Wheel
// run never breaks the residual invariant.
template <class Attempt>
std::optional<EmbeddedPlg> try_rotations(size_t rotations, Attempt attempt) {
  std::optional<EmbeddedPlg> fallback;
  for (size_t rot = 0; rot < std::max<size_t>(1, rotations); ++rot) {
    try {
      EmbeddedPlg e = attempt(rot);
      e.rotation = static_cast<int>(rot);
      if (e.fill.invariant_violations == 0) return e;
      if (!fallback) fallback = std::move(e);
    } catch (const AttemptFailed&) {
    }
  }
  return fallback;
}

std::optional<EmbeddedPlg> build_high(const MultiGraph& g, const EmbeddingPlan& plan) {
  const int n = g.node_count();
  const DegreeSequence seq = degree_counts(plan.params);
  const std::vector<long long> y = seq.dense();
  const long long delta = seq.max_degree;
  std::vector<long long> wheel(static_cast<size_t>(delta) + 1, 0);
  std::vector<long long> gd_of(static_cast<size_t>(delta) + 2, 0);
  std::vector<long long> gd_target(static_cast<size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    const long long t = g.degree(v) + 1;
    if (t > delta) return std::nullopt;
    gd_target[static_cast<size_t>(v)] = t;
    ++gd_of[static_cast<size_t>(t)];
  }
  for (long long j = 2; j <= delta; ++j) {
    wheel[static_cast<size_t>(j)] = y[static_cast<size_t>(j)] - gd_of[static_cast<size_t>(j)];
    if (wheel[static_cast<size_t>(j)] < 0) return std::nullopt;
  }
  Layout lay;
  try {
    lay = make_layout(gd_target, wheel, y[1]);
  } catch (const AttemptFailed&) {
    return std::nullopt;
  }
  if (lay.rim.empty()) return std::nullopt;
  const bool descending = plan.regime != Regime::MidBeta;
  const auto groups = host_groups(lay, plan.gamma_interval.first, plan.gamma_interval.second, descending);
  long long capacity = 0;
  for (const WheelGroup* grp : groups)
    capacity += (grp->degree - 2) * static_cast<long long>(grp->nodes.size());
  if (groups.empty() || capacity < n + y[1]) return std::nullopt;

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });

  return try_rotations(groups.size(), [&](size_t rot) {
    Builder b(lay);
    for (const auto& [e, m] : g.edges()) b.add(e.first, e.second, m);
    b.add_rim(lay.rim);
    const std::vector<int> hosts = host_list(groups, rot);
    size_t k = 0;
    for (int v : order) {
      while (k < hosts.size() && b.residual[static_cast<size_t>(hosts[k])] == 0) ++k;
      if (k >= hosts.size()) throw AttemptFailed{"too few distinct hosts"};
      b.add(v, hosts[k++], 1);
    }
    size_t cursor = k % hosts.size();
    for (int leaf : lay.leaves) b.add(leaf, b.next_host(hosts, cursor), 1);
    EmbeddedPlg e = finish(lay, b, plan, n);
    std::vector<char> has_leaf(static_cast<size_t>(lay.total) + 1, 0);
    for (int v : e.w1) has_leaf[static_cast<size_t>(v)] = 1;
    for (int v : e.gamma)
      if (!has_leaf[static_cast<size_t>(v)]) throw AttemptFailed{"gamma host without a degree-1 neighbour"};
    return e;
  });
}

std::optional<EmbeddedPlg> build_low(const MultiGraph& g, int d, const EmbeddingPlan& plan) {
  const PmGadgetGraph gadget = reduce_pm(g, d);
  const int N = gadget.graph.node_count();
  const DegreeSequence seq = degree_counts(plan.params);
  const std::vector<long long> y = seq.dense();
  const long long delta = seq.max_degree;
  const auto [lo, hi] = plan.gd_interval;

  std::vector<int> order(static_cast<size_t>(N));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return gadget.graph.degree(a) < gadget.graph.degree(b); });
  std::vector<long long> used(static_cast<size_t>(delta) + 1, 0);
  std::vector<long long> target(static_cast<size_t>(N) + 1, 0);
  long long slot = lo;
  for (int v : order) {
    slot = std::max(slot, gadget.graph.degree(v) + 2);
    while (slot <= hi && used[static_cast<size_t>(slot)] >= y[static_cast<size_t>(slot)]) ++slot;
    if (slot > hi) return std::nullopt;
    target[static_cast<size_t>(v)] = slot;
    ++used[static_cast<size_t>(slot)];
  }
  std::vector<long long> wheel(static_cast<size_t>(delta) + 1, 0);
  for (long long j = 2; j <= delta; ++j)
    wheel[static_cast<size_t>(j)] = y[static_cast<size_t>(j)] - used[static_cast<size_t>(j)];
  Layout lay;
  try {
    lay = make_layout(target, wheel, y[1]);
  } catch (const AttemptFailed&) {
    return std::nullopt;
  }
  if (lay.rim.empty()) return std::nullopt;
  const auto groups = host_groups(lay, plan.gamma_interval.first, plan.gamma_interval.second, true);
  if (groups.empty()) return std::nullopt;

  // Gadget edges, with each matching edge raised to min(deg_r) - 1 in total.
  Builder proto(lay);
  for (const auto& [e, m] : gadget.graph.edges()) proto.add(e.first, e.second, m);
  for (const auto& [a, b] : gadget.matching) {
    const long long ra = proto.residual[static_cast<size_t>(a)];
    const long long rb = proto.residual[static_cast<size_t>(b)];
    proto.add(a, b, std::min(ra, rb) - 2);
  }
  long long demand = 0, capacity = 0;
  for (int v = 1; v <= N; ++v) demand += proto.residual[static_cast<size_t>(v)];
  for (const WheelGroup* grp : groups)
    capacity += (grp->degree - 2) * static_cast<long long>(grp->nodes.size());
  if (capacity < demand + y[1]) return std::nullopt;

  auto result = try_rotations(groups.size(), [&](size_t rot) {
    Builder b = proto;
    b.add_rim(lay.rim);
    const std::vector<int> gamma_hosts = host_list(groups, 0);
    size_t k = 0;
    for (int c : order) {
      while (b.residual[static_cast<size_t>(c)] > 0) {
        while (k < gamma_hosts.size() && b.residual[static_cast<size_t>(gamma_hosts[k])] == 0) ++k;
        if (k >= gamma_hosts.size()) throw AttemptFailed{"gamma hosts exhausted"};
        const int h = gamma_hosts[k];
        b.add(c, h, std::min(b.residual[static_cast<size_t>(c)], b.residual[static_cast<size_t>(h)]));
      }
    }
    const std::vector<int> hosts = host_list(groups, rot);
    size_t cursor = 0;
    for (int leaf : lay.leaves) b.add(leaf, b.next_host(hosts, cursor), 1);
    return finish(lay, b, plan, g.node_count());
  });
  if (result) result->gadget = gadget;
  return result;
}

template <class PlanAt, class Build>
EmbeddedPlg search_volumes(long long start, long long limit, PlanAt plan_at, Build build) {
  std::optional<EmbeddedPlg> fallback;
  long long tried = 0, since_fallback = 0;
  for (long long v = start; v <= limit; ++v) {
    const std::optional<EmbeddingPlan> plan = plan_at(v);
    if (!plan) continue;
    ++tried;
    std::optional<EmbeddedPlg> e = build(*plan);
    if (e && e->fill.invariant_violations == 0) {
      e->volumes_tried = tried;
      return std::move(*e);
    }
    if (e && !fallback) {
      fallback = std::move(e);
      fallback->volumes_tried = tried;
    }
    if (fallback && ++since_fallback > 200) break;
  }
  if (fallback) return std::move(*fallback);
  throw Error(Errc::plan_infeasible, "no volume admits a complete embedding");
}

}  // namespace

PmGadgetGraph reduce_pm(const MultiGraph& g, int d) {
  check_input(g, d);
  const int n = g.node_count();
  PmGadgetGraph out;
  out.base_nodes = n;
  out.graph = MultiGraph(4 * n);
  out.copy_map.assign(static_cast<size_t>(4 * n) + 1, {0, 0});
  for (int c = 1; c <= 4; ++c)
    for (int j = 1; j <= n; ++j) out.copy_map[static_cast<size_t>(out.node_id(c, j))] = {c, j};
  for (const auto& [e, m] : g.edges()) {
    out.graph.add_edge(out.node_id(1, e.first), out.node_id(1, e.second), 1);
    out.graph.add_edge(out.node_id(2, e.first), out.node_id(2, e.second), 1);
  }
  for (int j = 1; j <= n; ++j) {
    const int v1 = out.node_id(1, j), v2 = out.node_id(2, j), v3 = out.node_id(3, j),
              v4 = out.node_id(4, j);
    out.graph.add_edge(v1, v3);
    out.graph.add_edge(v3, v4);
    out.graph.add_edge(v4, v2);
    out.graph.add_edge(v3, v2);
    out.graph.add_edge(v1, v4);
    out.matching.emplace_back(v1, v3);
    out.matching.emplace_back(v2, v4);
  }
  return out;
}

Cover transform_cover(const PmGadgetGraph& gadget, const std::vector<int>& c) {
  if (!is_cover(gadget.graph, c)) throw Error(Errc::invalid_cover, "input is not a cover of the gadget");
  const int n = gadget.base_nodes;
  std::vector<char> in(static_cast<size_t>(4 * n) + 1, 0);
  for (int v : c)
    if (v >= 1 && v <= 4 * n) in[static_cast<size_t>(v)] = 1;
  std::vector<int> c1, c2;
  for (int j = 1; j <= n; ++j) {
    if (in[static_cast<size_t>(gadget.node_id(1, j))]) c1.push_back(j);
    if (in[static_cast<size_t>(gadget.node_id(2, j))]) c2.push_back(j);
  }
  const std::vector<int>& s = c1.size() <= c2.size() ? c1 : c2;
  std::vector<char> chosen(static_cast<size_t>(n) + 1, 0);
  for (int j : s) chosen[static_cast<size_t>(j)] = 1;
  // Drop side nodes whose copy-1 neighbours are all chosen, in ascending order,
  // so the side cover is minimal.
  const auto adj = gadget.graph.adjacency();
  for (int j : s) {
    bool redundant = true;
    for (int w : adj[static_cast<size_t>(gadget.node_id(1, j))]) {
      const auto [copy, orig] = gadget.copy_map[static_cast<size_t>(w)];
      if (copy == 1 && !chosen[static_cast<size_t>(orig)]) redundant = false;
    }
    if (redundant) chosen[static_cast<size_t>(j)] = 0;
  }
  std::vector<int> out;
  for (int j = 1; j <= n; ++j) {
    if (chosen[static_cast<size_t>(j)]) {
      out.push_back(gadget.node_id(1, j));
      out.push_back(gadget.node_id(2, j));
      out.push_back(gadget.node_id(3, j));
    } else {
      out.push_back(gadget.node_id(3, j));
      out.push_back(gadget.node_id(4, j));
    }
  }
  return make_cover(std::move(out));
}

std::vector<int> compute_gamma(const EmbeddedPlg& e) {
  std::vector<int> out;
  const auto adj = e.graph.adjacency();
  for (int v : e.rim_order)
    for (int w : adj[static_cast<size_t>(v)])
      if (e.roles[static_cast<size_t>(w)].role == Role::gd) {
        out.push_back(v);
        break;
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> compute_w1(const EmbeddedPlg& e) {
  std::vector<int> out;
  const auto adj = e.graph.adjacency();
  for (int v : e.rim_order)
    for (int w : adj[static_cast<size_t>(v)])
      if (e.roles[static_cast<size_t>(w)].role == Role::degree_one) {
        out.push_back(v);
        break;
      }
  std::sort(out.begin(), out.end());
  return out;
}

EmbeddedPlg reduce_high_beta(const MultiGraph& g, int d, double beta,
                             const std::optional<EmbeddingPlan>& plan) {
  check_input(g, d);
  const long long n = g.node_count();
  const long long start = plan ? static_cast<long long>(plan->params.volume)
                               : high_beta_start_volume(n, d, beta);
  if (plan && !high_beta_regime(plan->regime))
    throw Error(Errc::wrong_regime, "plan is not a high-beta plan");
  return search_volumes(
      start, std::max<long long>(start * 1000, 1000000),
      [&](long long v) -> std::optional<EmbeddingPlan> {
        if (plan && v == start) return plan;
        return plan_high_beta_at(v, n, d, beta);
      },
      [&](const EmbeddingPlan& p) { return build_high(g, p); });
}

EmbeddedPlg reduce_low_beta(const MultiGraph& g, int d, const BetaSpec& beta,
                            const std::optional<EmbeddingPlan>& plan) {
  check_input(g, d);
  const long long n = g.node_count();
  if (plan && high_beta_regime(plan->regime))
    throw Error(Errc::wrong_regime, "plan is not a low-beta plan");
  const long long start = plan ? static_cast<long long>(plan->params.volume)
                               : static_cast<long long>(plan_embedding_low_beta(n, d, beta).params.volume);
  return search_volumes(
      start, 10000000,
      [&](long long v) -> std::optional<EmbeddingPlan> {
        if (plan && v == start) return plan;
        return plan_low_beta_at(v, n, d, beta);
      },
      [&](const EmbeddingPlan& p) { return build_low(g, d, p); });
}

EmbeddedPlg reduce(const MultiGraph& g, int d, const BetaSpec& beta) {
  if (beta.kind == BetaSpec::Kind::constant && beta.beta > 1.0) return reduce_high_beta(g, d, beta.beta);
  return reduce_low_beta(g, d, beta);
}

Cover extract_cover(const EmbeddedPlg& e, const std::vector<int>& c) {
  if (!is_cover(e.graph, c)) throw Error(Errc::invalid_cover, "input is not a cover of the embedding");
  std::vector<int> part;
  for (int v : c)
    if (v >= 1 && v <= static_cast<int>(e.gd_nodes.size())) part.push_back(v);
  if (!e.gadget) return make_cover(std::move(part));
  const Cover normal = transform_cover(*e.gadget, part);
  std::vector<int> out;
  for (int v : normal.nodes) {
    const auto [copy, original] = e.gadget->copy_map[static_cast<size_t>(v)];
    if (copy == 1) out.push_back(original);
  }
  return make_cover(std::move(out));
}

}  // namespace plg
