#pragma once

#include <map>
#include <string>
#include <vector>

#include "tropjac/graph.hpp"
#include "tropjac/lattice.hpp"
#include "tropjac/linear.hpp"

namespace tropjac {

struct Multidegree {
  std::vector<Int> values;  // indexed by vertex
  Int total = 0;
  bool operator==(const Multidegree&) const = default;
  static Multidegree from_values(std::vector<Int> values);
};

// ambient potentials along a spanning tree and one relation per non-tree edge
struct CycleData {
  std::vector<IntVector> potentials;
  std::vector<IntVector> relations;
};

CycleData cycle_data(const TropicalGraph& g, const IntVector& slopes);
// every relation has zero coordinate sum, so equal edge lengths satisfy them
bool relationless(const std::vector<IntVector>& relations);

class PLDivisor {
 public:
  const TropicalGraph& graph() const { return graph_; }
  const IntVector& slopes() const { return slopes_; }
  const LatticeQuotient& base() const { return base_; }
  // one relation per non-tree edge, before Hermite reduction
  const std::vector<IntVector>& cycle_relations() const { return cycle_relations_; }
  // ambient representatives of the vertex values
  const std::vector<IntVector>& potentials() const { return potentials_; }
  const std::vector<Element>& values() const { return values_; }
  std::vector<std::size_t> degenerate_edges() const;
  bool sharp() const { return base_.sharp(); }
  bool nondegenerate() const { return degenerate_edges().empty(); }
  // cycle relations vanish when all edge lengths coincide
  bool relationless() const;
  bool totally_ordered() const { return totally_ordered_; }

 private:
  friend PLDivisor make_divisor(const TropicalGraph& g, const IntVector& slopes);
  TropicalGraph graph_;
  IntVector slopes_;
  LatticeQuotient base_;
  std::vector<IntVector> cycle_relations_;
  std::vector<IntVector> potentials_;
  std::vector<Element> values_;
  bool totally_ordered_ = false;
};

PLDivisor make_divisor(const TropicalGraph& g, const IntVector& slopes);
PLDivisor make_divisor(const TropicalGraph& g, const std::map<std::string, Int>& slopes);

Multidegree multidegree(const TropicalGraph& g, const IntVector& slopes);
Multidegree multidegree(const PLDivisor& d);

enum class TargetKind { Zero, Canonical, LogCanonical };

struct TargetMultidegree {
  Multidegree degree;
  std::vector<Int> edge_target;  // degree minus leg weights at each vertex
};

TargetMultidegree target_multidegree(const TropicalGraph& g, TargetKind kind);
// degree minus leg weights, after checking the totals agree
std::vector<Int> edge_target(const TropicalGraph& g, const Multidegree& target);

PLDivisor tree_twist(const TropicalGraph& g, const Multidegree& target);

struct HarmonicSolution {
  RationalVector particular;  // value 0 at the basepoint
  std::vector<RationalVector> homogeneous;
  std::size_t dimension = 0;
};

HarmonicSolution harmonic_solve(const TropicalGraph& g, const RationalVector& lengths, const Multidegree& target);

}  // namespace tropjac
