#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tropjac/integer.hpp"

namespace tropjac {

struct RawVertex {
  std::string id;
  Int genus = 0;
  bool operator==(const RawVertex&) const = default;
};

struct RawEdge {
  std::string id;
  std::string a, b;  // a is the tail of the reference orientation
  bool operator==(const RawEdge&) const = default;
};

struct RawLeg {
  std::string id;
  std::string vertex;
  Int weight = 0;
  bool operator==(const RawLeg&) const = default;
};

struct RawGraph {
  std::vector<RawVertex> vertices;
  std::vector<RawEdge> edges;
  std::vector<RawLeg> legs;
  bool operator==(const RawGraph&) const = default;
};

class TropicalGraph {
 public:
  struct Edge {
    std::string id;
    std::size_t tail, head;
  };
  struct Leg {
    std::string id;
    std::size_t vertex;
    Int weight;
  };

  static TropicalGraph validate(const RawGraph& raw);

  std::size_t num_vertices() const { return vertex_ids_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_legs() const { return legs_.size(); }
  const std::string& vertex_id(std::size_t v) const { return vertex_ids_[v]; }
  Int vertex_genus(std::size_t v) const { return genera_[v]; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Leg>& legs() const { return legs_; }
  bool is_loop(std::size_t e) const { return edges_[e].tail == edges_[e].head; }
  const std::vector<std::size_t>& incident_edges(std::size_t v) const { return incident_[v]; }

  std::size_t vertex_index(const std::string& id) const;
  std::size_t edge_index(const std::string& id) const;

  Int b1() const { return b1_; }
  Int genus() const { return genus_; }
  bool is_tree() const { return b1_ == 0; }
  // edge-ends plus legs
  Int valence(std::size_t v) const;
  Int edge_ends(std::size_t v) const;
  Int leg_weight_at(std::size_t v) const;
  Int leg_weight_total() const;
  bool is_stable_vertex(std::size_t v) const { return 2 * genera_[v] - 2 + valence(v) > 0; }
  // vertex indices sorted by id; the first is the canonical basepoint
  std::size_t basepoint() const { return basepoint_; }

  RawGraph to_raw() const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<Int> genera_;
  std::vector<Edge> edges_;
  std::vector<Leg> legs_;
  std::vector<std::vector<std::size_t>> incident_;
  Int b1_ = 0;
  Int genus_ = 0;
  std::size_t basepoint_ = 0;
};

// reversed[e] flips the reference orientation; loops are left out of the domain
struct Orientation {
  std::vector<bool> reversed;
  std::vector<bool> in_domain;
  std::size_t tail(const TropicalGraph& g, std::size_t e) const {
    return reversed[e] ? g.edge(e).head : g.edge(e).tail;
  }
  std::size_t head(const TropicalGraph& g, std::size_t e) const {
    return reversed[e] ? g.edge(e).tail : g.edge(e).head;
  }
};

void for_each_acyclic_orientation(const TropicalGraph& g, const std::function<void(const Orientation&)>& visit);
std::vector<Orientation> acyclic_orientations(const TropicalGraph& g);
bool is_acyclic(const TropicalGraph& g, const Orientation& o);

constexpr Int kMaxCatalogGenus = 3;
constexpr Int kMaxCatalogLegs = 6;

// All stable graphs of genus g with legs x1..xn (weights 0), one per isomorphism class.
std::vector<TropicalGraph> enumerate_stable_graphs(Int g, Int n);

}  // namespace tropjac
