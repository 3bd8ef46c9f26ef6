#pragma once

#include <vector>

#include "tropjac/divisor.hpp"

namespace tropjac {

constexpr std::size_t kMaxEnumerationEdges = 8;

struct SlopeAssignment {
  IntVector slopes;  // per edge, reference orientation
  bool sharp = true;
  std::vector<std::size_t> degenerate_edges;
  bool relationless = false;
  bool nondegenerate() const { return degenerate_edges.empty(); }
  bool operator==(const SlopeAssignment&) const = default;
};

SlopeAssignment diagnose(const TropicalGraph& g, const IntVector& slopes);

// Peeling over acyclic orientations; sorted slope vectors, no diagnostics.
std::vector<IntVector> peel_slope_vectors(const TropicalGraph& g, const Multidegree& target);
std::vector<SlopeAssignment> enumerate_slopes(const TropicalGraph& g, const Multidegree& target);

// Largest slope magnitude the peeling can produce: sum of positive residuals.
Int certified_bound(const TropicalGraph& g, const Multidegree& target);

// Every vector in [-bound, bound]^E with the target multidegree, zero on loops,
// whose strictly increasing edges form an acyclic digraph.
std::vector<IntVector> box_slope_vectors(const TropicalGraph& g, const Multidegree& target, Int bound);
std::vector<SlopeAssignment> brute_force_slopes(const TropicalGraph& g, const Multidegree& target, Int bound);

}  // namespace tropjac
