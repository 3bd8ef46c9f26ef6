#include "tropjac/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tropjac {

namespace {

void check_size(const TropicalGraph& g) {
  if (g.num_edges() > kMaxEnumerationEdges)
    throw Error(ErrorCode::TooManyEdges, "enumeration limited to 8 edges");
}

bool increasing_edges_acyclic(const TropicalGraph& g, const IntVector& s) {
  Orientation o;
  o.reversed.assign(g.num_edges(), false);
  o.in_domain.assign(g.num_edges(), false);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (g.is_loop(e) || s[e] == 0) continue;
    o.in_domain[e] = true;
    o.reversed[e] = s[e] < 0;
  }
  return is_acyclic(g, o);
}

std::vector<SlopeAssignment> with_diagnostics(const TropicalGraph& g, const std::vector<IntVector>& vectors) {
  std::vector<SlopeAssignment> out;
  out.reserve(vectors.size());
  for (const auto& s : vectors) out.push_back(diagnose(g, s));
  return out;
}

}  // namespace

SlopeAssignment diagnose(const TropicalGraph& g, const IntVector& slopes) {
  // only the base is needed, not the vertex values
  CycleData cd = cycle_data(g, slopes);
  LatticeQuotient q = LatticeQuotient::make(g.num_edges(), cd.relations);
  std::vector<std::size_t> degenerate;
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (q.degenerate()[e]) degenerate.push_back(e);
  return SlopeAssignment{slopes, q.sharp(), std::move(degenerate), relationless(cd.relations)};
}

Int certified_bound(const TropicalGraph& g, const Multidegree& target) {
  Int b = 0;
  for (Int r : edge_target(g, target)) b = checked_add(b, std::max<Int>(r, 0));
  return b;
}

std::vector<IntVector> peel_slope_vectors(const TropicalGraph& g, const Multidegree& target) {
  check_size(g);
  std::vector<Int> r0 = edge_target(g, target);
  std::set<IntVector> found;
  const std::size_t nv = g.num_vertices();

  for_each_acyclic_orientation(g, [&](const Orientation& o) {
    std::vector<Int> r = r0;
    std::vector<bool> alive(nv, true);
    std::vector<std::size_t> indeg(nv, 0);
    std::vector<std::vector<std::size_t>> out(nv);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      if (!o.in_domain[e]) continue;
      out[o.tail(g, e)].push_back(e);
      ++indeg[o.head(g, e)];
    }
    IntVector slopes(g.num_edges(), 0);

    std::function<void(std::size_t)> peel = [&](std::size_t remaining) {
      if (remaining == 0) {
        found.insert(slopes);
        return;
      }
      std::size_t v = 0;
      while (!(alive[v] && indeg[v] == 0)) ++v;
      const auto& edges = out[v];
      if (r[v] < 0) return;
      if (edges.empty() && r[v] != 0) return;

      alive[v] = false;
      for (std::size_t e : edges) --indeg[o.head(g, e)];
      // compositions of r[v] into one part per outgoing edge
      std::function<void(std::size_t, Int)> split = [&](std::size_t k, Int left) {
        if (k + 1 >= edges.size()) {
          if (!edges.empty()) {
            std::size_t e = edges.back();
            std::size_t w = o.head(g, e);
            slopes[e] = o.reversed[e] ? -left : left;
            r[w] = checked_add(r[w], left);
            peel(remaining - 1);
            r[w] -= left;
          } else {
            peel(remaining - 1);
          }
          return;
        }
        std::size_t e = edges[k];
        std::size_t w = o.head(g, e);
        for (Int c = 0; c <= left; ++c) {
          slopes[e] = o.reversed[e] ? -c : c;
          r[w] = checked_add(r[w], c);
          split(k + 1, left - c);
          r[w] -= c;
        }
      };
      split(0, r[v]);
      for (std::size_t e : edges) {
        ++indeg[o.head(g, e)];
        slopes[e] = 0;
      }
      alive[v] = true;
    };
    peel(nv);
  });
  return {found.begin(), found.end()};
}

std::vector<SlopeAssignment> enumerate_slopes(const TropicalGraph& g, const Multidegree& target) {
  return with_diagnostics(g, peel_slope_vectors(g, target));
}

std::vector<IntVector> box_slope_vectors(const TropicalGraph& g, const Multidegree& target, Int bound) {
  check_size(g);
  Int need = certified_bound(g, target);
  if (bound < need)
    throw Error(ErrorCode::BoundTooSmall, "bound " + std::to_string(bound) + " below " + std::to_string(need));

  const std::size_t ne = g.num_edges(), nv = g.num_vertices();
  // visit order: non-tree edges, then spanning-tree edges children first, so
  // that every tree edge settles the degree of one vertex
  std::vector<bool> tree(ne, false), seen(nv, false);
  std::vector<std::size_t> tree_order;
  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    seen[v] = true;
    for (std::size_t e : g.incident_edges(v)) {
      std::size_t w = g.edge(e).tail == v ? g.edge(e).head : g.edge(e).tail;
      if (seen[w]) continue;
      tree[e] = true;
      dfs(w);
      tree_order.push_back(e);
    }
  };
  dfs(g.basepoint());
  std::vector<std::size_t> order;
  for (std::size_t e = 0; e < ne; ++e)
    if (!tree[e]) order.push_back(e);
  order.insert(order.end(), tree_order.begin(), tree_order.end());

  // vertices whose degree is settled once position k of the order is assigned
  std::vector<std::size_t> position(ne);
  for (std::size_t k = 0; k < ne; ++k) position[order[k]] = k;
  std::vector<std::vector<std::size_t>> settle(ne + 1);
  for (std::size_t v = 0; v < nv; ++v) {
    std::size_t last = 0;
    for (std::size_t e : g.incident_edges(v)) last = std::max(last, position[e] + 1);
    settle[last].push_back(v);
  }
  std::vector<Int> deg(nv, 0);
  for (const auto& l : g.legs()) deg[l.vertex] += l.weight;
  for (std::size_t v : settle[0])
    if (deg[v] != target.values[v]) return {};

  std::vector<IntVector> out;
  IntVector s(ne, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == ne) {
      if (increasing_edges_acyclic(g, s)) out.push_back(s);
      return;
    }
    const std::size_t e = order[k];
    const auto& ed = g.edge(e);
    const Int lo = g.is_loop(e) ? 0 : -bound, hi = g.is_loop(e) ? 0 : bound;
    for (Int x = lo; x <= hi; ++x) {
      s[e] = x;
      if (!g.is_loop(e)) {
        deg[ed.tail] += x;
        deg[ed.head] -= x;
      }
      bool ok = true;
      for (std::size_t v : settle[k + 1])
        if (deg[v] != target.values[v]) ok = false;
      if (ok) rec(k + 1);
      if (!g.is_loop(e)) {
        deg[ed.tail] -= x;
        deg[ed.head] += x;
      }
    }
    s[e] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SlopeAssignment> brute_force_slopes(const TropicalGraph& g, const Multidegree& target, Int bound) {
  return with_diagnostics(g, box_slope_vectors(g, target, bound));
}

}  // namespace tropjac
