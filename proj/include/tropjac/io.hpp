#pragma once

#include <json.hpp>
#include <map>
#include <string>

#include "tropjac/enumerate.hpp"
#include "tropjac/rubber.hpp"

namespace tropjac {

using Json = nlohmann::json;

RawGraph parse_graph(const Json& j);
Json graph_to_json(const RawGraph& g);
Json graph_to_json(const TropicalGraph& g);
std::string graph_to_dot(const TropicalGraph& g);

std::map<std::string, Int> parse_slopes(const Json& j);
Multidegree parse_multidegree(const TropicalGraph& g, const Json& j);

Json rational_to_json(const Rational& r);
Json element_to_json(const LatticeQuotient& q, const Element& x);
Json quotient_to_json(const LatticeQuotient& q, const std::vector<std::string>& generator_names);
Json multidegree_to_json(const TropicalGraph& g, const Multidegree& m);
Json divisor_to_json(const PLDivisor& d);
Json assignment_to_json(const TropicalGraph& g, const SlopeAssignment& a);
Json preorder_to_json(const TropicalGraph& g, const Preorder& p);
Json fan_to_json(const PLDivisor& d, const SubdivisionFan& fan);
Json division_to_json(const TropicalGraph& g, const Division& dv);
Json chain_to_json(const Division& dv, const ChainCurve& c);
Json rubber_to_json(const RubberData& rd);
Json ranks_to_json(const ObstructionRanks& r);

// hex SHA-256 of the compact serialization
std::string digest(const Json& j);

}  // namespace tropjac
