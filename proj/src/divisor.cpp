#include "tropjac/divisor.hpp"

#include <deque>
#include <numeric>

namespace tropjac {

Multidegree Multidegree::from_values(std::vector<Int> values) {
  Multidegree m;
  m.total = 0;
  for (Int v : values) m.total = checked_add(m.total, v);
  m.values = std::move(values);
  return m;
}

std::vector<std::size_t> PLDivisor::degenerate_edges() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < base_.degenerate().size(); ++e)
    if (base_.degenerate()[e]) out.push_back(e);
  return out;
}

bool PLDivisor::relationless() const { return tropjac::relationless(cycle_relations_); }

CycleData cycle_data(const TropicalGraph& g, const IntVector& slopes) {
  const std::size_t ne = g.num_edges();
  if (slopes.size() != ne) throw Error(ErrorCode::MissingSlope, "one slope per edge is required");
  for (std::size_t e = 0; e < ne; ++e)
    if (g.is_loop(e) && slopes[e] != 0) throw Error(ErrorCode::LoopSlopeNonzero, "edge " + g.edge(e).id);

  // potentials along a breadth-first spanning tree from the basepoint
  CycleData out;
  auto& pot = out.potentials;
  pot.resize(g.num_vertices());
  std::vector<bool> tree_edge(ne, false);
  std::vector<bool> seen(g.num_vertices(), false);
  std::deque<std::size_t> queue{g.basepoint()};
  seen[g.basepoint()] = true;
  pot[g.basepoint()] = IntVector(ne, 0);
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : g.incident_edges(v)) {
      const auto& ed = g.edge(e);
      std::size_t w = ed.tail == v ? ed.head : ed.tail;
      if (seen[w]) continue;
      seen[w] = true;
      tree_edge[e] = true;
      pot[w] = pot[v];
      pot[w][e] = ed.tail == v ? slopes[e] : -slopes[e];
      queue.push_back(w);
    }
  }
  for (std::size_t e = 0; e < ne; ++e) {
    if (tree_edge[e] || g.is_loop(e)) continue;
    const auto& ed = g.edge(e);
    IntVector r = sub(pot[ed.tail], pot[ed.head]);
    r[e] = checked_add(r[e], slopes[e]);
    out.relations.push_back(std::move(r));
  }
  return out;
}

bool relationless(const std::vector<IntVector>& relations) {
  for (const auto& r : relations)
    if (std::accumulate(r.begin(), r.end(), Int{0}) != 0) return false;
  return true;
}

PLDivisor make_divisor(const TropicalGraph& g, const IntVector& slopes) {
  const std::size_t ne = g.num_edges();
  CycleData cd = cycle_data(g, slopes);
  PLDivisor d;
  d.graph_ = g;
  d.slopes_ = slopes;
  d.cycle_relations_ = std::move(cd.relations);
  auto& pot = cd.potentials;
  d.base_ = LatticeQuotient::make(ne, d.cycle_relations_);

  std::vector<Element> vals;
  for (const auto& p : pot) vals.push_back(d.base_.reduce(p));

  // shift so that the minimum is 0 when the values form a chain
  const std::size_t nv = g.num_vertices();
  bool chain = true;
  std::size_t lowest = 0;
  for (std::size_t v = 1; v < nv && chain; ++v) {
    if (leq(d.base_, vals[v], vals[lowest]))
      lowest = v;
    else if (!leq(d.base_, vals[lowest], vals[v]))
      chain = false;
  }
  for (std::size_t v = 0; v < nv && chain; ++v)
    for (std::size_t w = v + 1; w < nv && chain; ++w)
      if (!leq(d.base_, vals[v], vals[w]) && !leq(d.base_, vals[w], vals[v])) chain = false;
  d.totally_ordered_ = chain;
  if (chain) {
    IntVector shift = pot[lowest];
    for (auto& p : pot) p = sub(p, shift);
    for (std::size_t v = 0; v < nv; ++v) vals[v] = d.base_.reduce(pot[v]);
  }
  d.potentials_ = std::move(pot);
  d.values_ = std::move(vals);
  return d;
}

PLDivisor make_divisor(const TropicalGraph& g, const std::map<std::string, Int>& slopes) {
  IntVector s(g.num_edges(), 0);
  std::vector<bool> given(g.num_edges(), false);
  for (const auto& [id, v] : slopes) {
    std::size_t e = g.edge_index(id);
    s[e] = v;
    given[e] = true;
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (!given[e]) throw Error(ErrorCode::MissingSlope, "no slope for edge " + g.edge(e).id);
  return make_divisor(g, s);
}

Multidegree multidegree(const TropicalGraph& g, const IntVector& slopes) {
  std::vector<Int> deg(g.num_vertices(), 0);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (g.is_loop(e)) continue;
    const auto& ed = g.edge(e);
    deg[ed.tail] = checked_add(deg[ed.tail], slopes[e]);
    deg[ed.head] = checked_sub(deg[ed.head], slopes[e]);
  }
  for (const auto& l : g.legs()) deg[l.vertex] = checked_add(deg[l.vertex], l.weight);
  return Multidegree::from_values(std::move(deg));
}

Multidegree multidegree(const PLDivisor& d) { return multidegree(d.graph(), d.slopes()); }

TargetMultidegree target_multidegree(const TropicalGraph& g, TargetKind kind) {
  const Int a = g.leg_weight_total();
  const Int n = static_cast<Int>(g.num_legs());
  std::vector<Int> deg(g.num_vertices(), 0);
  switch (kind) {
    case TargetKind::Zero:
      if (a != 0) throw Error(ErrorCode::WeightSumMismatch, "zero target needs leg weights summing to 0");
      break;
    case TargetKind::Canonical:
      if (a != 2 * g.genus() - 2)
        throw Error(ErrorCode::WeightSumMismatch, "canonical target needs leg weights summing to 2g-2");
      for (std::size_t v = 0; v < deg.size(); ++v) deg[v] = 2 * g.vertex_genus(v) - 2 + g.edge_ends(v);
      break;
    case TargetKind::LogCanonical:
      if (a != 2 * g.genus() - 2 + n)
        throw Error(ErrorCode::WeightSumMismatch, "log-canonical target needs leg weights summing to 2g-2+n");
      for (std::size_t v = 0; v < deg.size(); ++v) deg[v] = 2 * g.vertex_genus(v) - 2 + g.valence(v);
      break;
  }
  TargetMultidegree t;
  t.degree = Multidegree::from_values(deg);
  t.edge_target = edge_target(g, t.degree);
  return t;
}

std::vector<Int> edge_target(const TropicalGraph& g, const Multidegree& target) {
  if (target.values.size() != g.num_vertices())
    throw Error(ErrorCode::InvalidArgument, "target needs one entry per vertex");
  if (target.total != g.leg_weight_total())
    throw Error(ErrorCode::WeightSumMismatch, "target total differs from the sum of leg weights");
  std::vector<Int> r(g.num_vertices());
  for (std::size_t v = 0; v < r.size(); ++v) r[v] = checked_sub(target.values[v], g.leg_weight_at(v));
  return r;
}

PLDivisor tree_twist(const TropicalGraph& g, const Multidegree& target) {
  if (!g.is_tree()) throw Error(ErrorCode::NotATree, "graph has first Betti number " + std::to_string(g.b1()));
  std::vector<Int> r = edge_target(g, target);
  IntVector slopes(g.num_edges(), 0);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    // side of the tail once e is removed
    std::vector<bool> side(g.num_vertices(), false);
    std::vector<std::size_t> stack{g.edge(e).tail};
    side[g.edge(e).tail] = true;
    Int s = 0;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      s = checked_add(s, r[v]);
      for (std::size_t f : g.incident_edges(v)) {
        if (f == e) continue;
        std::size_t w = g.edge(f).tail == v ? g.edge(f).head : g.edge(f).tail;
        if (!side[w]) {
          side[w] = true;
          stack.push_back(w);
        }
      }
    }
    slopes[e] = s;
  }
  PLDivisor d = make_divisor(g, slopes);
  if (multidegree(d) != target) throw std::logic_error("tree twist missed its target");
  return d;
}

HarmonicSolution harmonic_solve(const TropicalGraph& g, const RationalVector& lengths, const Multidegree& target) {
  if (lengths.size() != g.num_edges()) throw Error(ErrorCode::InvalidArgument, "one length per edge is required");
  for (const auto& l : lengths)
    if (l <= 0) throw Error(ErrorCode::InvalidArgument, "edge lengths must be positive");
  if (target.values.size() != g.num_vertices())
    throw Error(ErrorCode::InvalidArgument, "target needs one entry per vertex");
  if (target.total != g.leg_weight_total())
    throw Error(ErrorCode::Infeasible, "target total differs from the sum of leg weights");

  const std::size_t nv = g.num_vertices();
  RationalMatrix a(nv, RationalVector(nv, 0));
  RationalVector b(nv);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (g.is_loop(e)) continue;
    const auto& ed = g.edge(e);
    Rational w = 1 / lengths[e];
    a[ed.tail][ed.head] += w;
    a[ed.tail][ed.tail] -= w;
    a[ed.head][ed.tail] += w;
    a[ed.head][ed.head] -= w;
  }
  for (std::size_t v = 0; v < nv; ++v) b[v] = Rational(target.values[v] - g.leg_weight_at(v));

  auto x = solve_particular(a, b, nv);
  if (!x) throw Error(ErrorCode::Infeasible, "Laplacian system is inconsistent");
  HarmonicSolution sol;
  Rational base = (*x)[g.basepoint()];
  for (auto& v : *x) v -= base;
  sol.particular = std::move(*x);
  sol.homogeneous = nullspace(a, nv);
  sol.dimension = sol.homogeneous.size();
  return sol;
}

}  // namespace tropjac
