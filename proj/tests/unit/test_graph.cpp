#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "tropjac/graph.hpp"

using namespace tropjac;

namespace {

ErrorCode code_of(const RawGraph& r) {
  try {
    TropicalGraph::validate(r);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

// oracle: directed cycle detection by colour DFS on a direction vector
bool has_cycle(const TropicalGraph& g, const std::vector<std::size_t>& dom, std::uint32_t bits) {
  std::vector<std::vector<std::size_t>> out(g.num_vertices());
  for (std::size_t k = 0; k < dom.size(); ++k) {
    const auto& e = g.edge(dom[k]);
    bool rev = (bits >> (dom.size() - 1 - k)) & 1u;
    out[rev ? e.head : e.tail].push_back(rev ? e.tail : e.head);
  }
  std::vector<int> colour(g.num_vertices(), 0);
  std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
    colour[v] = 1;
    for (std::size_t w : out[v]) {
      if (colour[w] == 1) return true;
      if (colour[w] == 0 && dfs(w)) return true;
    }
    colour[v] = 2;
    return false;
  };
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (colour[v] == 0 && dfs(v)) return true;
  return false;
}

std::size_t brute_orientations(const TropicalGraph& g) {
  std::vector<std::size_t> dom;
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (!g.is_loop(e)) dom.push_back(e);
  std::size_t n = 0;
  for (std::uint32_t b = 0; b < (1u << dom.size()); ++b)
    if (!has_cycle(g, dom, b)) ++n;
  return n;
}

// oracle: isomorphism fixing leg labels, by trying every vertex bijection
bool isomorphic(const TropicalGraph& a, const TropicalGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  std::vector<std::size_t> p(a.num_vertices());
  std::iota(p.begin(), p.end(), 0);
  auto edge_multiset = [](const TropicalGraph& g, const std::vector<std::size_t>& map) {
    std::vector<std::pair<std::size_t, std::size_t>> es;
    for (const auto& e : g.edges()) es.emplace_back(std::min(map[e.tail], map[e.head]), std::max(map[e.tail], map[e.head]));
    std::sort(es.begin(), es.end());
    return es;
  };
  std::vector<std::size_t> id(b.num_vertices());
  std::iota(id.begin(), id.end(), 0);
  auto eb = edge_multiset(b, id);
  do {
    bool ok = true;
    for (std::size_t v = 0; v < p.size() && ok; ++v) ok = a.vertex_genus(v) == b.vertex_genus(p[v]);
    for (std::size_t i = 0; i < a.num_legs() && ok; ++i) ok = p[a.legs()[i].vertex] == b.legs()[i].vertex;
    if (ok && edge_multiset(a, p) == eb) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST_CASE("validate examples") {
  auto t = fixtures::theta(3);
  CHECK(t.b1() == 1);
  CHECK(t.genus() == 1);

  auto s = TropicalGraph::validate({{{"v", 1}}, {}, {{"x1", "v", 0}}});
  CHECK(s.genus() == 1);
  CHECK(s.b1() == 0);

  CHECK(code_of({{{"v", 0}, {"w", 0}}, {}, {}}) == ErrorCode::DisconnectedGraph);
  CHECK(code_of({{{"v", 0}}, {{"e", "v", "z"}}, {}}) == ErrorCode::DanglingReference);
  CHECK(code_of({{{"v", 0}}, {}, {{"x", "q", 1}}}) == ErrorCode::DanglingReference);
  CHECK(code_of({{{"v", -1}}, {}, {}}) == ErrorCode::NegativeGenus);
  CHECK(code_of({{{"v", 0}, {"v", 1}}, {}, {}}) == ErrorCode::DuplicateId);
  CHECK(code_of({{}, {}, {}}) == ErrorCode::DisconnectedGraph);
}

TEST_CASE("self-loops and valence") {
  auto g = TropicalGraph::validate({{{"v", 0}}, {{"e", "v", "v"}}, {{"x", "v", 5}}});
  CHECK(g.is_loop(0));
  CHECK(g.valence(0) == 3);
  CHECK(g.genus() == 1);
  CHECK(g.is_stable_vertex(0));
}

TEST_CASE("serialization round trip") {
  std::mt19937_64 rng(fixtures::seed());
  for (int i = 0; i < 50; ++i) {
    auto g = fixtures::random_connected(rng, 1 + rng() % 5, rng() % 4, true);
    auto raw = g.to_raw();
    auto h = TropicalGraph::validate(raw);
    CHECK(h.to_raw() == raw);
    CHECK(h.genus() == g.genus());
  }
}

TEST_CASE("acyclic orientation examples") {
  auto edge = TropicalGraph::validate({{{"v", 0}, {"w", 0}}, {{"e", "v", "w"}}, {}});
  CHECK(acyclic_orientations(edge).size() == 2);
  CHECK(acyclic_orientations(fixtures::theta(1)).size() == 2);
  auto tri = TropicalGraph::validate(
      {{{"a", 0}, {"b", 0}, {"c", 0}}, {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "c", "a"}}, {}});
  CHECK(acyclic_orientations(tri).size() == 6);
  CHECK(brute_orientations(tri) == 6);
  auto loop = TropicalGraph::validate({{{"v", 0}}, {{"e", "v", "v"}}, {}});
  CHECK(acyclic_orientations(loop).size() == 1);
}

TEST_CASE("orientation count matches brute force and order is lexicographic") {
  std::mt19937_64 rng(fixtures::seed() + 1);
  for (int i = 0; i < 150; ++i) {
    std::size_t n = 1 + rng() % 5;
    auto g = fixtures::random_connected(rng, n, rng() % (7 - n + 1), true);
    if (g.num_edges() > 6) continue;
    auto all = acyclic_orientations(g);
    CHECK(all.size() == brute_orientations(g));
    std::vector<std::vector<bool>> keys;
    for (const auto& o : all) {
      CHECK(is_acyclic(g, o));
      std::vector<bool> k;
      for (std::size_t e = 0; e < g.num_edges(); ++e)
        if (o.in_domain[e]) k.push_back(o.reversed[e]);
      keys.push_back(k);
    }
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
  }
}

TEST_CASE("stable graph counts") {
  CHECK(enumerate_stable_graphs(1, 1).size() == 2);
  CHECK(enumerate_stable_graphs(0, 3).size() == 1);
  CHECK(enumerate_stable_graphs(0, 4).size() == 4);
  // boundary strata of the genus-0 spaces: 1 + 10 + 15 and 1 + 25 + 105 + 105
  CHECK(enumerate_stable_graphs(0, 5).size() == 26);
  CHECK(enumerate_stable_graphs(0, 6).size() == 236);
  CHECK(enumerate_stable_graphs(1, 2).size() == 5);
  CHECK(enumerate_stable_graphs(2, 0).size() == 7);
  CHECK(enumerate_stable_graphs(3, 0).size() == 42);
}

TEST_CASE("stable graphs are stable, of the right genus, and pairwise non-isomorphic") {
  for (auto [g, n] : std::vector<std::pair<Int, Int>>{{0, 5}, {1, 2}, {1, 3}, {2, 0}, {2, 1}}) {
    auto list = enumerate_stable_graphs(g, n);
    for (const auto& x : list) {
      CHECK(x.genus() == g);
      CHECK(x.num_legs() == static_cast<std::size_t>(n));
      for (std::size_t v = 0; v < x.num_vertices(); ++v) CHECK(x.is_stable_vertex(v));
    }
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) CHECK_FALSE(isomorphic(list[i], list[j]));
  }
}

TEST_CASE("catalog guard") {
  CHECK_THROWS_AS(enumerate_stable_graphs(3, 7), Error);
  CHECK_THROWS_AS(enumerate_stable_graphs(4, 0), Error);
  CHECK_THROWS_AS(enumerate_stable_graphs(0, 2), Error);
  CHECK_THROWS_AS(enumerate_stable_graphs(1, 0), Error);
  try {
    enumerate_stable_graphs(3, 7);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfSupportedRange);
  }
}
