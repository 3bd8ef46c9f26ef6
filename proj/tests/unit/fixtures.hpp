#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "tropjac/graph.hpp"

namespace fixtures {

std::uint64_t seed();

inline tropjac::TropicalGraph theta(tropjac::Int k) {
  return tropjac::TropicalGraph::validate(
      {{{"v", 0}, {"w", 0}}, {{"e1", "v", "w"}, {"e2", "v", "w"}}, {{"x1", "v", k}, {"x2", "w", -k}}});
}

inline tropjac::TropicalGraph y_graph() {
  return tropjac::TropicalGraph::validate({{{"u", 0}, {"v", 0}, {"w", 0}},
                                           {{"e1", "u", "v"}, {"e2", "u", "w"}},
                                           {{"x1", "u", 2}, {"x2", "v", -1}, {"x3", "w", -1}}});
}

inline tropjac::TropicalGraph star3() {
  return tropjac::TropicalGraph::validate(
      {{{"u", 0}, {"v1", 0}, {"v2", 0}, {"v3", 0}},
       {{"e1", "u", "v1"}, {"e2", "u", "v2"}, {"e3", "u", "v3"}},
       {{"x0", "u", 3}, {"x1", "v1", -1}, {"x2", "v2", -1}, {"x3", "v3", -1}}});
}

inline tropjac::TropicalGraph path3(tropjac::Int a, tropjac::Int b, tropjac::Int c) {
  return tropjac::TropicalGraph::validate({{{"v1", 0}, {"v2", 0}, {"v3", 0}},
                                           {{"e1", "v1", "v2"}, {"e2", "v2", "v3"}},
                                           {{"x1", "v1", a}, {"x2", "v2", b}, {"x3", "v3", c}}});
}

// random tree on n vertices with leg weights summing to zero
inline tropjac::TropicalGraph random_tree(std::mt19937_64& rng, std::size_t n, tropjac::Int spread) {
  tropjac::RawGraph r;
  std::uniform_int_distribution<tropjac::Int> w(-spread, spread);
  tropjac::Int total = 0;
  for (std::size_t v = 0; v < n; ++v) {
    r.vertices.push_back({"v" + std::to_string(v), static_cast<tropjac::Int>(rng() % 2)});
    if (v > 0) {
      std::size_t parent = rng() % v;
      if (rng() % 2)
        r.edges.push_back({"e" + std::to_string(v), "v" + std::to_string(parent), "v" + std::to_string(v)});
      else
        r.edges.push_back({"e" + std::to_string(v), "v" + std::to_string(v), "v" + std::to_string(parent)});
    }
    tropjac::Int a = v + 1 == n ? -total : w(rng);
    total += a;
    r.legs.push_back({"x" + std::to_string(v), "v" + std::to_string(v), a});
  }
  return tropjac::TropicalGraph::validate(r);
}

// random connected multigraph with optional loops
inline tropjac::TropicalGraph random_connected(std::mt19937_64& rng, std::size_t n, std::size_t extra,
                                               bool loops) {
  tropjac::RawGraph r;
  for (std::size_t v = 0; v < n; ++v) {
    r.vertices.push_back({"v" + std::to_string(v), 0});
    if (v > 0)
      r.edges.push_back({"e" + std::to_string(r.edges.size()), "v" + std::to_string(rng() % v), "v" + std::to_string(v)});
  }
  for (std::size_t k = 0; k < extra; ++k) {
    std::size_t a = rng() % n, b = rng() % n;
    if (a == b && !loops) b = (a + 1) % n;
    if (n == 1 && !loops) break;
    r.edges.push_back({"e" + std::to_string(r.edges.size()), "v" + std::to_string(a), "v" + std::to_string(b)});
  }
  r.legs.push_back({"x1", "v0", 0});
  return tropjac::TropicalGraph::validate(r);
}

}  // namespace fixtures
