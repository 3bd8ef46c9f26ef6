#include "tropjac/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace tropjac {

namespace {

template <class T, class F>
void require_unique(const std::vector<T>& items, F key, const char* what) {
  std::set<std::string> seen;
  for (const auto& it : items)
    if (!seen.insert(key(it)).second) throw Error(ErrorCode::DuplicateId, std::string(what) + " id " + key(it));
}

}  // namespace

TropicalGraph TropicalGraph::validate(const RawGraph& raw) {
  require_unique(raw.vertices, [](const RawVertex& v) { return v.id; }, "vertex");
  require_unique(raw.edges, [](const RawEdge& e) { return e.id; }, "edge");
  require_unique(raw.legs, [](const RawLeg& l) { return l.id; }, "leg");

  TropicalGraph g;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& v : raw.vertices) {
    if (v.genus < 0) throw Error(ErrorCode::NegativeGenus, "vertex " + v.id);
    index.emplace(v.id, g.vertex_ids_.size());
    g.vertex_ids_.push_back(v.id);
    g.genera_.push_back(v.genus);
  }
  auto lookup = [&](const std::string& id, const std::string& owner) {
    auto it = index.find(id);
    if (it == index.end()) throw Error(ErrorCode::DanglingReference, owner + " refers to unknown vertex " + id);
    return it->second;
  };
  g.incident_.resize(g.vertex_ids_.size());
  for (const auto& e : raw.edges) {
    Edge ed{e.id, lookup(e.a, "edge " + e.id), lookup(e.b, "edge " + e.id)};
    g.incident_[ed.tail].push_back(g.edges_.size());
    if (ed.head != ed.tail) g.incident_[ed.head].push_back(g.edges_.size());
    g.edges_.push_back(std::move(ed));
  }
  for (const auto& l : raw.legs) g.legs_.push_back({l.id, lookup(l.vertex, "leg " + l.id), l.weight});

  if (g.vertex_ids_.empty()) throw Error(ErrorCode::DisconnectedGraph, "graph has no vertices");
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : g.incident_[v]) {
      std::size_t w = g.edges_[e].tail == v ? g.edges_[e].head : g.edges_[e].tail;
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != g.num_vertices()) throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");

  g.b1_ = static_cast<Int>(g.num_edges()) - static_cast<Int>(g.num_vertices()) + 1;
  g.genus_ = g.b1_;
  for (Int h : g.genera_) g.genus_ += h;
  g.basepoint_ = static_cast<std::size_t>(
      std::min_element(g.vertex_ids_.begin(), g.vertex_ids_.end()) - g.vertex_ids_.begin());
  return g;
}

std::size_t TropicalGraph::vertex_index(const std::string& id) const {
  for (std::size_t v = 0; v < vertex_ids_.size(); ++v)
    if (vertex_ids_[v] == id) return v;
  throw Error(ErrorCode::DanglingReference, "unknown vertex " + id);
}

std::size_t TropicalGraph::edge_index(const std::string& id) const {
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].id == id) return e;
  throw Error(ErrorCode::DanglingReference, "unknown edge " + id);
}

Int TropicalGraph::edge_ends(std::size_t v) const {
  Int n = 0;
  for (std::size_t e : incident_[v]) n += is_loop(e) ? 2 : 1;
  return n;
}

Int TropicalGraph::valence(std::size_t v) const {
  Int n = edge_ends(v);
  for (const auto& l : legs_)
    if (l.vertex == v) ++n;
  return n;
}

Int TropicalGraph::leg_weight_at(std::size_t v) const {
  Int s = 0;
  for (const auto& l : legs_)
    if (l.vertex == v) s = checked_add(s, l.weight);
  return s;
}

Int TropicalGraph::leg_weight_total() const {
  Int s = 0;
  for (const auto& l : legs_) s = checked_add(s, l.weight);
  return s;
}

RawGraph TropicalGraph::to_raw() const {
  RawGraph r;
  for (std::size_t v = 0; v < num_vertices(); ++v) r.vertices.push_back({vertex_ids_[v], genera_[v]});
  for (const auto& e : edges_) r.edges.push_back({e.id, vertex_ids_[e.tail], vertex_ids_[e.head]});
  for (const auto& l : legs_) r.legs.push_back({l.id, vertex_ids_[l.vertex], l.weight});
  return r;
}

// ---------------------------------------------------------------------------
// orientations

namespace {

bool reaches(const std::vector<std::vector<std::size_t>>& out, std::size_t from, std::size_t to) {
  std::vector<bool> seen(out.size(), false);
  std::vector<std::size_t> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (std::size_t w : out[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return false;
}

}  // namespace

void for_each_acyclic_orientation(const TropicalGraph& g, const std::function<void(const Orientation&)>& visit) {
  std::vector<std::size_t> domain;
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (!g.is_loop(e)) domain.push_back(e);

  Orientation o;
  o.reversed.assign(g.num_edges(), false);
  o.in_domain.assign(g.num_edges(), false);
  for (std::size_t e : domain) o.in_domain[e] = true;
  std::vector<std::vector<std::size_t>> out(g.num_vertices());

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == domain.size()) {
      visit(o);
      return;
    }
    std::size_t e = domain[k];
    for (bool rev : {false, true}) {
      o.reversed[e] = rev;
      std::size_t t = o.tail(g, e), h = o.head(g, e);
      if (reaches(out, h, t)) continue;
      out[t].push_back(h);
      rec(k + 1);
      out[t].pop_back();
    }
    o.reversed[e] = false;
  };
  rec(0);
}

std::vector<Orientation> acyclic_orientations(const TropicalGraph& g) {
  std::vector<Orientation> all;
  for_each_acyclic_orientation(g, [&](const Orientation& o) { all.push_back(o); });
  return all;
}

bool is_acyclic(const TropicalGraph& g, const Orientation& o) {
  std::vector<std::size_t> indeg(g.num_vertices(), 0);
  std::vector<std::vector<std::size_t>> out(g.num_vertices());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!o.in_domain[e]) continue;
    out[o.tail(g, e)].push_back(o.head(g, e));
    ++indeg[o.head(g, e)];
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < indeg.size(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return removed == g.num_vertices();
}

// ---------------------------------------------------------------------------
// stable graphs

namespace {

struct Shape {
  std::vector<Int> genus;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> leg;  // leg i sits at vertex leg[i]
};

using Key = std::vector<Int>;

Key encode(const Shape& s, const std::vector<int>& pos) {
  const std::size_t n = s.genus.size();
  std::vector<Int> genus(n);
  for (std::size_t v = 0; v < n; ++v) genus[pos[v]] = s.genus[v];
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : s.edges) {
    int x = pos[a], y = pos[b];
    edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(edges.begin(), edges.end());
  Key k{static_cast<Int>(n)};
  k.insert(k.end(), genus.begin(), genus.end());
  for (int v : s.leg) k.push_back(pos[v]);
  for (auto [a, b] : edges) {
    k.push_back(a);
    k.push_back(b);
  }
  return k;
}

// Minimal encoding over relabelings that respect an ordered partition by
// isomorphism invariants.
std::pair<Key, std::vector<int>> canonical(const Shape& s) {
  const std::size_t n = s.genus.size();
  std::vector<std::vector<Int>> inv(n);
  for (std::size_t v = 0; v < n; ++v) {
    Int loops = 0, ends = 0;
    for (auto [a, b] : s.edges) {
      if (a == static_cast<int>(v) && b == static_cast<int>(v)) ++loops;
      if (a == static_cast<int>(v)) ++ends;
      if (b == static_cast<int>(v)) ++ends;
    }
    std::vector<Int> legs;
    for (std::size_t i = 0; i < s.leg.size(); ++i)
      if (s.leg[i] == static_cast<int>(v)) legs.push_back(static_cast<Int>(i));
    // vertices carrying legs are ordered first, by their smallest leg
    inv[v] = {legs.empty() ? 1 : 0, legs.empty() ? 0 : legs.front(), s.genus[v], ends, loops};
    inv[v].insert(inv[v].end(), legs.begin(), legs.end());
  }
  std::vector<int> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<int>(v);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  for (auto [a, b] : cells) std::sort(order.begin() + a, order.begin() + b);

  Key best;
  std::vector<int> best_pos;
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cells.size()) {
      std::vector<int> pos(n);
      for (std::size_t i = 0; i < n; ++i) pos[order[i]] = static_cast<int>(i);
      Key k = encode(s, pos);
      if (best.empty() || k < best) {
        best = std::move(k);
        best_pos = std::move(pos);
      }
      return;
    }
    auto [a, b] = cells[c];
    std::sort(order.begin() + a, order.begin() + b);
    do rec(c + 1);
    while (std::next_permutation(order.begin() + a, order.begin() + b));
  };
  rec(0);
  return {best, best_pos};
}

Shape relabel(const Shape& s, const std::vector<int>& pos) {
  Shape t;
  t.genus.resize(s.genus.size());
  for (std::size_t v = 0; v < s.genus.size(); ++v) t.genus[pos[v]] = s.genus[v];
  for (auto [a, b] : s.edges) t.edges.emplace_back(std::min(pos[a], pos[b]), std::max(pos[a], pos[b]));
  std::sort(t.edges.begin(), t.edges.end());
  for (int v : s.leg) t.leg.push_back(pos[v]);
  return t;
}

void degenerations(const Shape& s, const std::function<void(Shape)>& emit) {
  const int n = static_cast<int>(s.genus.size());
  for (int v = 0; v < n; ++v) {
    if (s.genus[v] >= 1) {
      Shape t = s;
      --t.genus[v];
      t.edges.emplace_back(v, v);
      emit(std::move(t));
    }
    // half-edges at v: (kind, index, side); kind 0 = edge end, 1 = leg
    struct Half {
      int kind;
      std::size_t index;
      int side;
    };
    std::vector<Half> halves;
    for (std::size_t e = 0; e < s.edges.size(); ++e) {
      if (s.edges[e].first == v) halves.push_back({0, e, 0});
      if (s.edges[e].second == v) halves.push_back({0, e, 1});
    }
    for (std::size_t i = 0; i < s.leg.size(); ++i)
      if (s.leg[i] == v) halves.push_back({1, i, 0});
    const int h = static_cast<int>(halves.size());
    for (std::uint32_t mask = 0; mask < (1u << h); ++mask) {
      int moved = __builtin_popcount(mask);
      for (Int h1 = 0; h1 <= s.genus[v]; ++h1) {
        Int h0 = s.genus[v] - h1;
        if (2 * h0 - 2 + (h - moved) + 1 <= 0) continue;
        if (2 * h1 - 2 + moved + 1 <= 0) continue;
        Shape t = s;
        t.genus[v] = h0;
        t.genus.push_back(h1);
        for (int i = 0; i < h; ++i) {
          if (!(mask & (1u << i))) continue;
          const Half& hf = halves[i];
          if (hf.kind == 1)
            t.leg[hf.index] = n;
          else if (hf.side == 0)
            t.edges[hf.index].first = n;
          else
            t.edges[hf.index].second = n;
        }
        t.edges.emplace_back(v, n);
        emit(std::move(t));
      }
    }
  }
}

}  // namespace

std::vector<TropicalGraph> enumerate_stable_graphs(Int g, Int n) {
  if (g < 0 || n < 0 || g > kMaxCatalogGenus || n > kMaxCatalogLegs || 2 * g - 2 + n <= 0)
    throw Error(ErrorCode::OutOfSupportedRange,
                "catalog supports 2g-2+n > 0 with g <= 3 and n <= 6");
  Shape smooth;
  smooth.genus = {g};
  smooth.leg.assign(static_cast<std::size_t>(n), 0);

  std::map<Key, Shape> found;
  {
    auto [k, pos] = canonical(smooth);
    found.emplace(k, relabel(smooth, pos));
  }
  std::vector<Shape> level{smooth};
  while (!level.empty()) {
    std::vector<Shape> next;
    for (const auto& s : level)
      degenerations(s, [&](Shape t) {
        auto [k, pos] = canonical(t);
        if (found.count(k)) return;
        found.emplace(k, relabel(t, pos));
        next.push_back(std::move(t));
      });
    level = std::move(next);
  }

  std::vector<std::pair<Key, const Shape*>> sorted;
  for (const auto& [k, s] : found) sorted.emplace_back(k, &s);
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.second->edges.size() != b.second->edges.size()) return a.second->edges.size() < b.second->edges.size();
    return a.first < b.first;
  });

  std::vector<TropicalGraph> out;
  for (const auto& [k, s] : sorted) {
    RawGraph r;
    for (std::size_t v = 0; v < s->genus.size(); ++v) r.vertices.push_back({"v" + std::to_string(v), s->genus[v]});
    for (std::size_t e = 0; e < s->edges.size(); ++e)
      r.edges.push_back({"e" + std::to_string(e), "v" + std::to_string(s->edges[e].first),
                         "v" + std::to_string(s->edges[e].second)});
    for (std::size_t i = 0; i < s->leg.size(); ++i)
      r.legs.push_back({"x" + std::to_string(i + 1), "v" + std::to_string(s->leg[i]), 0});
    out.push_back(TropicalGraph::validate(r));
  }
  return out;
}

}  // namespace tropjac
