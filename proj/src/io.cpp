#include "tropjac/io.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <sstream>

namespace tropjac {

namespace {

template <class F>
auto parsing(const char* what, F body) {
  try {
    return body();
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + ex.what());
  }
}

Json names(const TropicalGraph& g, const std::vector<std::size_t>& edges) {
  Json out = Json::array();
  for (std::size_t e : edges) out.push_back(g.edge(e).id);
  return out;
}

std::vector<std::string> edge_names(const TropicalGraph& g) {
  std::vector<std::string> out;
  for (const auto& e : g.edges()) out.push_back(e.id);
  return out;
}

}  // namespace

RawGraph parse_graph(const Json& j) {
  return parsing("graph", [&] {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "graph must be a JSON object");
    RawGraph g;
    for (const auto& v : j.at("vertices")) g.vertices.push_back({v.at("id").get<std::string>(), v.at("genus").get<Int>()});
    if (j.contains("edges"))
      for (const auto& e : j.at("edges")) {
        const auto& ends = e.at("ends");
        if (!ends.is_array() || ends.size() != 2) throw Error(ErrorCode::ParseError, "edge needs two ends");
        g.edges.push_back({e.at("id").get<std::string>(), ends[0].get<std::string>(), ends[1].get<std::string>()});
      }
    if (j.contains("legs"))
      for (const auto& l : j.at("legs"))
        g.legs.push_back({l.at("id").get<std::string>(), l.at("vertex").get<std::string>(), l.at("weight").get<Int>()});
    return g;
  });
}

Json graph_to_json(const RawGraph& g) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : g.vertices) j["vertices"].push_back({{"id", v.id}, {"genus", v.genus}});
  j["edges"] = Json::array();
  for (const auto& e : g.edges) j["edges"].push_back({{"id", e.id}, {"ends", {e.a, e.b}}});
  j["legs"] = Json::array();
  for (const auto& l : g.legs) j["legs"].push_back({{"id", l.id}, {"vertex", l.vertex}, {"weight", l.weight}});
  return j;
}

Json graph_to_json(const TropicalGraph& g) { return graph_to_json(g.to_raw()); }

std::string graph_to_dot(const TropicalGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    os << "  \"" << g.vertex_id(v) << "\" [label=\"" << g.vertex_id(v) << ":g=" << g.vertex_genus(v) << "\"];\n";
  for (const auto& e : g.edges())
    os << "  \"" << g.vertex_id(e.tail) << "\" -- \"" << g.vertex_id(e.head) << "\" [label=\"" << e.id << "\"];\n";
  for (const auto& l : g.legs()) {
    os << "  \"leg:" << l.id << "\" [shape=point];\n";
    os << "  \"" << g.vertex_id(l.vertex) << "\" -- \"leg:" << l.id << "\" [label=\"" << l.id << ":" << l.weight
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::map<std::string, Int> parse_slopes(const Json& j) {
  return parsing("slopes", [&] {
    const Json& s = j.contains("slopes") ? j.at("slopes") : j;
    if (!s.is_object()) throw Error(ErrorCode::ParseError, "slopes must map edge ids to integers");
    return s.get<std::map<std::string, Int>>();
  });
}

Multidegree parse_multidegree(const TropicalGraph& g, const Json& j) {
  auto m = parsing("multidegree", [&] {
    const Json& s = j.contains("multidegree") ? j.at("multidegree") : j;
    if (!s.is_object()) throw Error(ErrorCode::ParseError, "multidegree must map vertex ids to integers");
    return s.get<std::map<std::string, Int>>();
  });
  std::vector<Int> vals(g.num_vertices(), 0);
  std::vector<bool> given(g.num_vertices(), false);
  for (const auto& [id, v] : m) {
    std::size_t i = g.vertex_index(id);
    vals[i] = v;
    given[i] = true;
  }
  for (std::size_t v = 0; v < vals.size(); ++v)
    if (!given[v]) throw Error(ErrorCode::ParseError, "multidegree misses vertex " + g.vertex_id(v));
  return Multidegree::from_values(std::move(vals));
}

Json rational_to_json(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Json element_to_json(const LatticeQuotient& q, const Element& x) {
  Json t = Json::array();
  for (std::size_t i = 0; i < x.torsion.size(); ++i) t.push_back({x.torsion[i], q.torsion_moduli()[i]});
  return {{"free", x.free}, {"torsion", t}};
}

Json quotient_to_json(const LatticeQuotient& q, const std::vector<std::string>& generator_names) {
  Json gens = Json::object();
  Json degenerate = Json::array();
  for (std::size_t e = 0; e < q.ambient_rank(); ++e) {
    const std::string name = e < generator_names.size() ? generator_names[e] : "t" + std::to_string(e);
    gens[name] = element_to_json(q, q.generator(e));
    if (q.degenerate()[e]) degenerate.push_back(name);
  }
  return {{"ambient_rank", q.ambient_rank()},
          {"relations", q.relations()},
          {"snf_diagonal", q.snf_diagonal()},
          {"free_rank", q.free_rank()},
          {"torsion_moduli", q.torsion_moduli()},
          {"generators", gens},
          {"degenerate", degenerate},
          {"sharp", q.sharp()}};
}

Json multidegree_to_json(const TropicalGraph& g, const Multidegree& m) {
  Json per = Json::object();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) per[g.vertex_id(v)] = m.values[v];
  return {{"per_vertex", per}, {"total", m.total}};
}

Json divisor_to_json(const PLDivisor& d) {
  const TropicalGraph& g = d.graph();
  Json slopes = Json::object();
  for (std::size_t e = 0; e < g.num_edges(); ++e) slopes[g.edge(e).id] = d.slopes()[e];
  Json values = Json::object();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) values[g.vertex_id(v)] = element_to_json(d.base(), d.values()[v]);
  return {{"graph", graph_to_json(g)},
          {"slopes", slopes},
          {"derived",
           {{"base", quotient_to_json(d.base(), edge_names(g))},
            {"values", values},
            {"degenerate_edges", names(g, d.degenerate_edges())},
            {"sharp", d.sharp()},
            {"relationless", d.relationless()},
            {"totally_ordered", d.totally_ordered()},
            {"multidegree", multidegree_to_json(g, multidegree(d))}}}};
}

Json assignment_to_json(const TropicalGraph& g, const SlopeAssignment& a) {
  Json slopes = Json::object();
  for (std::size_t e = 0; e < g.num_edges(); ++e) slopes[g.edge(e).id] = a.slopes[e];
  return {{"slopes", slopes},
          {"vector", a.slopes},
          {"sharp", a.sharp},
          {"degenerate_edges", names(g, a.degenerate_edges)},
          {"relationless", a.relationless},
          {"nondegenerate", a.nondegenerate()}};
}

Json preorder_to_json(const TropicalGraph& g, const Preorder& p) {
  Json out = Json::array();
  for (const auto& cls : p) {
    Json c = Json::array();
    for (std::size_t v : cls) c.push_back(g.vertex_id(v));
    out.push_back(c);
  }
  return out;
}

Json fan_to_json(const PLDivisor& d, const SubdivisionFan& fan) {
  const TropicalGraph& g = d.graph();
  const std::size_t nv = g.num_vertices();
  Json cells = Json::array();
  for (const auto& c : fan.cells) {
    std::vector<std::size_t> pos(nv);
    for (std::size_t i = 0; i < c.classes.size(); ++i)
      for (std::size_t v : c.classes[i]) pos[v] = i;
    Json matrix = Json::array();
    for (std::size_t v = 0; v < nv; ++v) {
      Json row = Json::array();
      for (std::size_t w = 0; w < nv; ++w) row.push_back(pos[w] > pos[v] ? 1 : (pos[w] < pos[v] ? -1 : 0));
      matrix.push_back(row);
    }
    Json ineqs = Json::array();
    for (std::size_t i = 0; i < c.classes.size(); ++i) {
      for (std::size_t k = 1; k < c.classes[i].size(); ++k)
        ineqs.push_back({{"lhs", g.vertex_id(c.classes[i][k])}, {"rhs", g.vertex_id(c.classes[i][0])}, {"relation", "="}});
      if (i + 1 < c.classes.size())
        ineqs.push_back(
            {{"lhs", g.vertex_id(c.classes[i + 1][0])}, {"rhs", g.vertex_id(c.classes[i][0])}, {"relation", ">"}});
    }
    Json witness = Json::object();
    for (std::size_t e = 0; e < g.num_edges(); ++e) witness[g.edge(e).id] = rational_to_json(c.witness[e]);
    cells.push_back({{"preorder", preorder_to_json(g, c.classes)},
                     {"preorder_matrix", matrix},
                     {"inequalities", ineqs},
                     {"witness", witness},
                     {"dimension", c.dimension},
                     {"maximal", c.maximal}});
  }
  return {{"base_cone",
           {{"ambient", fan.ambient},
            {"equalities", fan.equalities},
            {"positive_edges", names(g, fan.positive_edges)},
            {"dimension", fan.dimension}}},
          {"cells", cells},
          {"maximal_cells", fan.maximal_count()}};
}

Json division_to_json(const TropicalGraph& g, const Division& dv) {
  Json levels = Json::array(), gaps = Json::array(), level_of = Json::object();
  for (const auto& l : dv.levels) levels.push_back(element_to_json(dv.base, l));
  for (const auto& x : dv.gaps) gaps.push_back(element_to_json(dv.base, x));
  for (std::size_t v = 0; v < g.num_vertices(); ++v) level_of[g.vertex_id(v)] = dv.level_of[v];
  return {{"base", quotient_to_json(dv.base, edge_names(g))}, {"levels", levels}, {"gaps", gaps}, {"level_of", level_of}};
}

Json chain_to_json(const Division& dv, const ChainCurve& c) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < c.node_parameters.size(); ++i)
    nodes.push_back({{"joins", {i, i + 1}}, {"parameter", element_to_json(dv.base, c.node_parameters[i])}});
  return {{"components", c.components},
          {"nodes", nodes},
          {"markings", {{"zero", c.zero_marking_component}, {"infinity", c.infinity_marking_component}}}};
}

Json rubber_to_json(const RubberData& rd) {
  const TropicalGraph& c = rd.subdivided;
  Json level_map = Json::object(), factors = Json::object(), lengths = Json::object(), origin = Json::object();
  Json inserted = Json::array();
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    level_map[c.vertex_id(v)] = rd.level_of[v];
    if (rd.inserted[v]) inserted.push_back(c.vertex_id(v));
  }
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    if (rd.expansion[e] > 0) factors[c.edge(e).id] = rd.expansion[e];
    lengths[c.edge(e).id] = element_to_json(rd.refined_base, rd.piece_lengths[e]);
    origin[c.edge(e).id] = rd.edge_origin[e];
  }
  return {{"subdivided_graph", graph_to_json(c)},
          {"inserted_vertices", inserted},
          {"edge_origin", origin},
          {"level_map", level_map},
          {"expansion_factors", factors},
          {"piece_lengths", lengths},
          {"refined_base", quotient_to_json(rd.refined_base, {})},
          {"lattice_extension_index", rd.extension_index},
          {"flags",
           {{"no_vertex_on_node", rd.no_vertex_on_node},
            {"every_level_covered_by_stable", rd.every_level_covered_by_stable}}}};
}

Json ranks_to_json(const ObstructionRanks& r) {
  return {{"vdim", r.vdim},
          {"h1_rank", r.h1_rank},
          {"primary_obstruction_rank", r.primary_obstruction_rank},
          {"euler_fdagger", r.euler_fdagger}};
}

std::string digest(const Json& j) {
  const std::string text = j.dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

}  // namespace tropjac
