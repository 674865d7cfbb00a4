#include <algorithm>

#include "plg/errors.hpp"
#include "plg/reduction.hpp"

namespace plg {

bool invariant_holds(const WheelGroup& group, const std::vector<long long>& residual) {
  const auto& w = group.nodes;
  for (size_t i = 1; i < w.size(); ++i)
    if (residual[static_cast<size_t>(w[i - 1])] > residual[static_cast<size_t>(w[i])]) return false;
  if (w.size() < 2) return true;
  return residual[static_cast<size_t>(w.back())] - residual[static_cast<size_t>(w.front())] <= 1;
}

namespace {

class Emitter {
 public:
  Emitter(std::vector<long long>& residual, FillWheelResult& out) : r_(residual), out_(out) {}

  void edge(int u, int v) {
    long long& ru = r_[static_cast<size_t>(u)];
    long long& rv = r_[static_cast<size_t>(v)];
    if (u == v ? ru < 2 : (ru < 1 || rv < 1))
      throw Error(Errc::construction_bug, "Fill_Wheel edge would make a residual negative");
    if (u == v) {
      ru -= 2;
    } else {
      --ru;
      --rv;
    }
    ++out_.emitted;
    const int a = std::min(u, v), b = std::max(u, v);
    if (!out_.edges.empty()) {
      auto& [pu, pv, pm] = out_.edges.back();
      if (pu == a && pv == b) {
        ++pm;
        return;
      }
    }
    out_.edges.emplace_back(a, b, 1);
  }

 private:
  std::vector<long long>& r_;
  FillWheelResult& out_;
};

long long group_residual(const WheelGroup& g, const std::vector<long long>& r) {
  long long s = 0;
  for (int v : g.nodes) s += r[static_cast<size_t>(v)];
  return s;
}

}  // namespace

FillWheelResult fill_wheel(const std::vector<WheelGroup>& groups, std::vector<long long>& residual,
                           std::vector<int> pool) {
  FillWheelResult out;
  Emitter emit(residual, out);
  auto check = [&](size_t gi, const char* when) {
    if (invariant_holds(groups[gi], residual)) return;
    if (out.invariant_violations++ == 0)
      out.first_violation = std::string(when) + " in degree group " + std::to_string(groups[gi].degree);
  };
  for (size_t gi = 0; gi < groups.size(); ++gi) check(gi, "before Fill_Wheel");
  size_t pool_next = 0;
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    const WheelGroup& grp = groups[gi];
    const auto& w = grp.nodes;
    if (w.empty()) continue;
    size_t next = gi + 1;
    while (next < groups.size() && groups[next].nodes.empty()) ++next;
    while (group_residual(grp, residual) > 0) {
      // l = first position holding the maximum residual.
      size_t l = 0;
      for (size_t i = 1; i < w.size(); ++i)
        if (residual[static_cast<size_t>(w[i])] > residual[static_cast<size_t>(w[l])]) l = i;
      const int wl = w[l];
      bool spilled = false;
      if (l + 1 < w.size()) {
        emit.edge(wl, w[l + 1]);
      } else if (w.size() >= 2 && residual[static_cast<size_t>(w[0])] > 0) {
        emit.edge(wl, w[0]);
      } else if (w.size() == 1 && residual[static_cast<size_t>(wl)] >= 2) {
        emit.edge(wl, wl);
      } else if (next < groups.size()) {
        emit.edge(wl, groups[next].nodes.front());
        spilled = true;
      } else {
        if (pool_next >= pool.size())
          throw Error(Errc::construction_bug, "odd residual left with no degree-1 node available");
        const int leaf = pool[pool_next++];
        emit.edge(wl, leaf);
        ++out.pool_used;
      }
      check(gi, "after an emission");
      if (spilled) check(next, "after a spill");
    }
  }
  return out;
}

}  // namespace plg
