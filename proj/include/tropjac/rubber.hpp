#pragma once

#include <string>
#include <vector>

#include "tropjac/divisor.hpp"

namespace tropjac {

constexpr std::size_t kMaxFanVertices = 6;

// classes of vertex indices, listed from lowest to highest value
using Preorder = std::vector<std::vector<std::size_t>>;

struct FanCell {
  Preorder classes;
  std::vector<int> signs;  // sign of value(w) - value(v) for each vertex pair v < w
  RationalVector witness;  // edge lengths in the relative interior
  std::size_t dimension = 0;
  bool maximal = false;
};

struct SubdivisionFan {
  std::size_t ambient = 0;
  std::vector<IntVector> equalities;  // relations cutting the base cone out of the orthant
  std::vector<std::size_t> positive_edges;
  std::size_t dimension = 0;
  std::vector<FanCell> cells;
  std::size_t maximal_count() const;
};

struct Division {
  LatticeQuotient base;  // cell base: relations plus ties
  std::vector<Element> levels;
  std::vector<Element> gaps;
  std::vector<std::size_t> level_of;  // per vertex of the graph
  std::vector<IntVector> level_potentials;
};

struct ChainCurve {
  std::size_t components = 1;
  std::vector<Element> node_parameters;  // node i joins components i and i+1
  std::size_t zero_marking_component = 0;
  std::size_t infinity_marking_component = 0;
};

struct RubberData {
  TropicalGraph subdivided;
  std::vector<bool> inserted;             // per vertex of the subdivision
  std::vector<std::string> edge_origin;   // original edge id per edge
  std::vector<std::size_t> level_of;      // per vertex
  IntVector slopes;                       // per edge
  std::vector<Int> expansion;             // |slope| for edges crossing a gap, 0 for vertical ones
  LatticeQuotient refined_base;
  std::vector<Element> piece_lengths;     // per edge, in refined_base
  std::vector<Element> level_values;      // in refined_base
  std::vector<Element> original_lengths;  // per original edge, in refined_base
  Int extension_index = 1;
  bool no_vertex_on_node = true;
  bool every_level_covered_by_stable = true;
  Division division;
};

struct ObstructionRanks {
  Int vdim = 0;
  Int h1_rank = 0;
  Int primary_obstruction_rank = 0;
  Int euler_fdagger = 0;
};

bool is_aligned(const PLDivisor& d);
// linear functionals value(v) = potential(v) . lengths
RationalVector evaluate_values(const PLDivisor& d, const RationalVector& lengths);
// the preorder a length vector induces on the vertex values
Preorder realized_preorder(const PLDivisor& d, const RationalVector& lengths);
bool in_closed_cell(const PLDivisor& d, const FanCell& cell, const RationalVector& lengths);

SubdivisionFan rub_subdivision(const PLDivisor& d);

Division division_of(const PLDivisor& d, const Preorder& cell);
Division division_of(const PLDivisor& d);
ChainCurve chain_curve(const Division& dv);

RubberData subdivide_curve(const PLDivisor& d, const Preorder& cell);
TropicalGraph contract(const RubberData& rd);
// recompute values along the subdivision and compare with the level map
bool levels_consistent(const RubberData& rd);

ObstructionRanks obstruction_ranks(const RubberData& rd, Int g, Int n);

}  // namespace tropjac
