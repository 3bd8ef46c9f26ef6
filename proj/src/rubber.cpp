#include "tropjac/rubber.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>

namespace tropjac {

namespace {

// base cone: sharpened relations vanish, nondegenerate edge lengths positive
struct BaseCone {
  std::vector<IntVector> equalities;
  std::vector<std::size_t> positive;
};

BaseCone base_cone(const PLDivisor& d) {
  BaseCone c;
  c.equalities = d.base().sharpened().relations();
  for (std::size_t e = 0; e < d.graph().num_edges(); ++e)
    if (!d.base().degenerate()[e]) c.positive.push_back(e);
  return c;
}

Constraint row_constraint(const IntVector& a, Relation rel) {
  return Constraint{to_rational(a), rel, 0};
}

std::vector<Constraint> cell_system(const PLDivisor& d, const BaseCone& cone, const Preorder& cell) {
  const std::size_t ne = d.graph().num_edges();
  std::vector<Constraint> cs;
  for (const auto& r : cone.equalities) cs.push_back(row_constraint(r, Relation::Eq));
  for (std::size_t e : cone.positive) {
    IntVector u(ne, 0);
    u[e] = 1;
    cs.push_back(row_constraint(u, Relation::Gt));
  }
  const auto& p = d.potentials();
  for (std::size_t i = 0; i < cell.size(); ++i) {
    for (std::size_t k = 1; k < cell[i].size(); ++k)
      cs.push_back(row_constraint(sub(p[cell[i][k]], p[cell[i][0]]), Relation::Eq));
    if (i + 1 < cell.size())
      cs.push_back(row_constraint(sub(p[cell[i + 1][0]], p[cell[i][0]]), Relation::Gt));
  }
  return cs;
}

std::vector<IntVector> tie_rows(const PLDivisor& d, const Preorder& cell) {
  std::vector<IntVector> rows;
  for (const auto& cls : cell)
    for (std::size_t k = 1; k < cls.size(); ++k) rows.push_back(sub(d.potentials()[cls[k]], d.potentials()[cls[0]]));
  return rows;
}

std::vector<int> sign_vector(std::size_t nv, const Preorder& cell) {
  std::vector<std::size_t> pos(nv);
  for (std::size_t i = 0; i < cell.size(); ++i)
    for (std::size_t v : cell[i]) pos[v] = i;
  std::vector<int> s;
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t w = v + 1; w < nv; ++w) s.push_back(pos[w] > pos[v] ? 1 : (pos[w] < pos[v] ? -1 : 0));
  return s;
}

void check_partition(const PLDivisor& d, const Preorder& cell) {
  std::vector<int> count(d.graph().num_vertices(), 0);
  for (const auto& cls : cell) {
    if (cls.empty()) throw Error(ErrorCode::NotTotallyOrdered, "empty class in preorder");
    for (std::size_t v : cls) {
      if (v >= count.size()) throw Error(ErrorCode::NotTotallyOrdered, "preorder names an unknown vertex");
      ++count[v];
    }
  }
  for (int c : count)
    if (c != 1) throw Error(ErrorCode::NotTotallyOrdered, "preorder must list every vertex exactly once");
}

Preorder normalized(Preorder cell) {
  for (auto& cls : cell) std::sort(cls.begin(), cls.end());
  return cell;
}

}  // namespace

std::size_t SubdivisionFan::maximal_count() const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const FanCell& c) { return c.maximal; }));
}

bool is_aligned(const PLDivisor& d) {
  const auto& vals = d.values();
  for (std::size_t v = 0; v < vals.size(); ++v)
    for (std::size_t w = v + 1; w < vals.size(); ++w)
      if (!leq(d.base(), vals[v], vals[w]) && !leq(d.base(), vals[w], vals[v])) return false;
  return true;
}

RationalVector evaluate_values(const PLDivisor& d, const RationalVector& lengths) {
  RationalVector out;
  for (const auto& p : d.potentials()) {
    Rational s = 0;
    for (std::size_t e = 0; e < p.size(); ++e) s += p[e] * lengths[e];
    out.push_back(s);
  }
  return out;
}

Preorder realized_preorder(const PLDivisor& d, const RationalVector& lengths) {
  RationalVector vals = evaluate_values(d, lengths);
  std::vector<std::size_t> order(vals.size());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
  Preorder cell;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || vals[order[i]] != vals[order[i - 1]]) cell.emplace_back();
    cell.back().push_back(order[i]);
  }
  return normalized(cell);
}

bool in_closed_cell(const PLDivisor& d, const FanCell& cell, const RationalVector& lengths) {
  RationalVector vals = evaluate_values(d, lengths);
  for (std::size_t i = 0; i < cell.classes.size(); ++i) {
    for (std::size_t v : cell.classes[i])
      if (vals[v] != vals[cell.classes[i][0]]) return false;
    if (i + 1 < cell.classes.size() && vals[cell.classes[i + 1][0]] < vals[cell.classes[i][0]]) return false;
  }
  return true;
}

SubdivisionFan rub_subdivision(const PLDivisor& d) {
  if (!d.nondegenerate()) throw Error(ErrorCode::DegenerateDivisor, "fan needs a nondegenerate divisor");
  const std::size_t nv = d.graph().num_vertices(), ne = d.graph().num_edges();
  if (nv > kMaxFanVertices) throw Error(ErrorCode::TooManyVertices, "fan limited to 6 vertices");

  BaseCone cone = base_cone(d);
  SubdivisionFan fan;
  fan.ambient = ne;
  fan.equalities = cone.equalities;
  fan.positive_edges = cone.positive;
  fan.dimension = ne - rank(to_rational(cone.equalities));

  // ordered set partitions of the vertices
  Preorder current;
  std::vector<bool> used(nv, false);
  std::function<void(std::size_t)> rec = [&](std::size_t placed) {
    if (placed == nv) {
      auto witness = fm_feasible_point(ne, cell_system(d, cone, current));
      if (!witness) return;
      FanCell c;
      c.classes = current;
      c.signs = sign_vector(nv, current);
      c.witness = std::move(*witness);
      auto rows = cone.equalities;
      for (auto& r : tie_rows(d, current)) rows.push_back(std::move(r));
      c.dimension = ne - rank(to_rational(rows));
      c.maximal = c.dimension == fan.dimension;
      fan.cells.push_back(std::move(c));
      return;
    }
    std::vector<std::size_t> free;
    for (std::size_t v = 0; v < nv; ++v)
      if (!used[v]) free.push_back(v);
    for (std::uint32_t mask = 1; mask < (1u << free.size()); ++mask) {
      std::vector<std::size_t> cls;
      for (std::size_t i = 0; i < free.size(); ++i)
        if (mask & (1u << i)) cls.push_back(free[i]);
      for (std::size_t v : cls) used[v] = true;
      current.push_back(cls);
      rec(placed + cls.size());
      current.pop_back();
      for (std::size_t v : cls) used[v] = false;
    }
  };
  rec(0);
  std::sort(fan.cells.begin(), fan.cells.end(), [](const FanCell& a, const FanCell& b) { return a.signs < b.signs; });
  return fan;
}

Division division_of(const PLDivisor& d, const Preorder& raw_cell) {
  check_partition(d, raw_cell);
  Preorder cell = normalized(raw_cell);
  const std::size_t ne = d.graph().num_edges();
  BaseCone cone = base_cone(d);
  if (!fm_feasible_point(ne, cell_system(d, cone, cell)))
    throw Error(ErrorCode::NotTotallyOrdered, "preorder is not realized on the base cone");

  auto rows = cone.equalities;
  for (auto& r : tie_rows(d, cell)) rows.push_back(std::move(r));
  Division dv{LatticeQuotient::make(ne, rows), {}, {}, std::vector<std::size_t>(d.graph().num_vertices()), {}};
  const IntVector& origin = d.potentials()[cell[0][0]];
  for (std::size_t i = 0; i < cell.size(); ++i) {
    IntVector p = sub(d.potentials()[cell[i][0]], origin);
    dv.levels.push_back(dv.base.reduce(p));
    dv.level_potentials.push_back(std::move(p));
    for (std::size_t v : cell[i]) dv.level_of[v] = i;
  }
  for (std::size_t i = 0; i + 1 < dv.levels.size(); ++i) {
    dv.gaps.push_back(dv.base.sub(dv.levels[i + 1], dv.levels[i]));
    if (dv.base.is_zero(dv.gaps.back())) throw std::logic_error("zero gap in a realized preorder");
  }
  return dv;
}

Division division_of(const PLDivisor& d) {
  if (!is_aligned(d)) throw Error(ErrorCode::NotTotallyOrdered, "vertex values are not totally ordered");
  const auto& vals = d.values();
  std::vector<std::size_t> order(vals.size());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return vals[a] != vals[b] && leq(d.base(), vals[a], vals[b]);
  });
  Preorder cell;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || vals[order[i]] != vals[order[i - 1]]) cell.emplace_back();
    cell.back().push_back(order[i]);
  }
  return division_of(d, cell);
}

ChainCurve chain_curve(const Division& dv) {
  ChainCurve c;
  c.components = dv.gaps.size() + 1;
  c.node_parameters = dv.gaps;
  c.zero_marking_component = 0;
  c.infinity_marking_component = dv.gaps.size();
  return c;
}

namespace {

IntVector padded(IntVector v, std::size_t n) {
  v.resize(n, 0);
  return v;
}

}  // namespace

RubberData subdivide_curve(const PLDivisor& d, const Preorder& raw_cell) {
  if (!d.nondegenerate()) throw Error(ErrorCode::DegenerateDivisor, "subdivision needs a nondegenerate divisor");
  const TropicalGraph& g = d.graph();
  const std::size_t ne = g.num_edges();
  Division dv = division_of(d, raw_cell);
  const LatticeQuotient& base = dv.base;

  std::size_t ambient = ne;
  std::vector<IntVector> relations = base.relations();
  LatticeQuotient current = base;
  Int index = 1;
  auto embed = [&](const IntVector& x) { return current.reduce(padded(x, ambient)); };

  RawGraph raw;
  std::vector<bool> inserted;
  std::vector<std::size_t> level_of;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    raw.vertices.push_back({g.vertex_id(v), g.vertex_genus(v)});
    inserted.push_back(false);
    level_of.push_back(dv.level_of[v]);
  }
  for (const auto& l : g.legs()) raw.legs.push_back({l.id, g.vertex_id(l.vertex), l.weight});

  struct Piece {
    std::string origin;
    Int slope;
    IntVector length;  // ambient vector, padded on use
  };
  std::vector<Piece> pieces;

  for (std::size_t e = 0; e < ne; ++e) {
    const auto& ed = g.edge(e);
    const Int s = d.slopes()[e];
    IntVector unit(ne, 0);
    unit[e] = 1;
    const std::size_t a = dv.level_of[ed.tail], b = dv.level_of[ed.head];
    const std::size_t span = a > b ? a - b : b - a;
    if (s == 0 || span <= 1) {
      if ((s == 0) != (span == 0)) throw std::logic_error("edge slope disagrees with the level map");
      raw.edges.push_back({ed.id, g.vertex_id(ed.tail), g.vertex_id(ed.head)});
      pieces.push_back({ed.id, s, unit});
      continue;
    }
    const Int mag = s < 0 ? -s : s;
    const int step = b > a ? 1 : -1;
    std::string prev = g.vertex_id(ed.tail);
    IntVector used(ne, 0);
    for (std::size_t k = 0; k < span; ++k) {
      std::size_t from = a + static_cast<std::size_t>(step * static_cast<int>(k));
      std::size_t to = from + static_cast<std::size_t>(step);
      std::string next;
      if (k + 1 == span) {
        next = g.vertex_id(ed.head);
      } else {
        next = ed.id + "#" + std::to_string(k + 1);
        raw.vertices.push_back({next, 0});
        inserted.push_back(true);
        level_of.push_back(to);
      }
      IntVector length;
      if (k + 1 == span) {
        length = sub(padded(unit, ambient), padded(used, ambient));
      } else {
        const IntVector& gap = dv.level_potentials[std::max(from, to)];
        IntVector delta = sub(gap, dv.level_potentials[std::min(from, to)]);
        if (mag == 1) {
          length = delta;
        } else if (auto y = divide(current, embed(delta), mag)) {
          length = current.lift(*y);
        } else {
          ++ambient;
          for (auto& r : relations) r.resize(ambient, 0);
          IntVector rel = scale(padded(delta, ambient), -1);
          rel[ambient - 1] = mag;
          relations.push_back(rel);
          current = LatticeQuotient::make(ambient, relations);
          index = checked_mul(index, mag);
          length = IntVector(ambient, 0);
          length[ambient - 1] = 1;
        }
      }
      used = add(padded(used, ambient), padded(length, ambient));
      raw.edges.push_back({ed.id + "/" + std::to_string(k + 1), prev, next});
      pieces.push_back({ed.id, s, length});
      prev = next;
    }
  }

  RubberData rd{TropicalGraph::validate(raw), std::move(inserted), {}, std::move(level_of), {}, {}, current, {}, {}, {},
                index, true, true, std::move(dv)};
  for (const auto& p : pieces) {
    rd.edge_origin.push_back(p.origin);
    rd.slopes.push_back(p.slope);
    rd.expansion.push_back(p.slope < 0 ? -p.slope : p.slope);
    rd.piece_lengths.push_back(current.reduce(padded(p.length, ambient)));
  }
  for (const auto& p : rd.division.level_potentials) rd.level_values.push_back(current.reduce(padded(p, ambient)));
  for (std::size_t e = 0; e < ne; ++e) {
    IntVector u(ambient, 0);
    u[e] = 1;
    rd.original_lengths.push_back(current.reduce(u));
  }

  const TropicalGraph& c = rd.subdivided;
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    std::size_t x = rd.level_of[c.edge(e).tail], y = rd.level_of[c.edge(e).head];
    std::size_t diff = x > y ? x - y : y - x;
    if (diff > 1 || (diff == 0) != (rd.expansion[e] == 0)) rd.no_vertex_on_node = false;
  }
  for (std::size_t lvl = 0; lvl < rd.division.levels.size(); ++lvl) {
    bool covered = false;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
      if (rd.level_of[v] == lvl && g.is_stable_vertex(v)) covered = true;
    if (!covered) rd.every_level_covered_by_stable = false;
  }
  return rd;
}

TropicalGraph contract(const RubberData& rd) {
  const TropicalGraph& c = rd.subdivided;
  RawGraph raw;
  for (std::size_t v = 0; v < c.num_vertices(); ++v)
    if (!rd.inserted[v]) raw.vertices.push_back({c.vertex_id(v), c.vertex_genus(v)});
  for (std::size_t e = 0; e < c.num_edges();) {
    std::size_t f = e;
    while (f + 1 < c.num_edges() && rd.edge_origin[f + 1] == rd.edge_origin[e]) ++f;
    raw.edges.push_back({rd.edge_origin[e], c.vertex_id(c.edge(e).tail), c.vertex_id(c.edge(f).head)});
    e = f + 1;
  }
  for (const auto& l : c.legs()) raw.legs.push_back({l.id, c.vertex_id(l.vertex), l.weight});
  return TropicalGraph::validate(raw);
}

bool levels_consistent(const RubberData& rd) {
  const TropicalGraph& c = rd.subdivided;
  const LatticeQuotient& q = rd.refined_base;
  std::vector<std::optional<Element>> val(c.num_vertices());
  std::size_t start = 0;
  while (rd.level_of[start] != 0) ++start;
  val[start] = q.zero();
  std::deque<std::size_t> queue{start};
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : c.incident_edges(v)) {
      const auto& ed = c.edge(e);
      Element rise = q.scale(rd.piece_lengths[e], rd.slopes[e]);
      std::size_t w = ed.tail == v ? ed.head : ed.tail;
      Element expect = ed.tail == v ? q.add(*val[v], rise) : q.sub(*val[v], rise);
      if (!val[w]) {
        val[w] = expect;
        queue.push_back(w);
      } else if (*val[w] != expect) {
        return false;
      }
    }
  }
  for (std::size_t v = 0; v < c.num_vertices(); ++v)
    if (!val[v] || *val[v] != rd.level_values[rd.level_of[v]]) return false;
  return true;
}

ObstructionRanks obstruction_ranks(const RubberData& rd, Int g, Int n) {
  ObstructionRanks r;
  r.vdim = 2 * g - 3 + n;
  r.h1_rank = g;
  for (Int x : rd.expansion)
    if (x > 0) ++r.primary_obstruction_rank;
  r.euler_fdagger = (1 - g) + r.primary_obstruction_rank;
  return r;
}

}  // namespace tropjac
