#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "tropjac/io.hpp"

namespace fs = std::filesystem;
using namespace tropjac;

namespace {

constexpr const char* kVersion = "0.3.0";

struct Options {
  std::string path;
  std::string target = "zero";
  std::string slopes;
  std::string out;
  std::string format = "json";
  Int oracle = -1;
  std::uint64_t seed = 20240611;
  Int genus = 0;
  Int legs = 0;
};

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return 2;
    case ErrorCode::DisconnectedGraph:
    case ErrorCode::DanglingReference:
    case ErrorCode::NegativeGenus:
    case ErrorCode::DuplicateId: return 3;
    case ErrorCode::NotATree: return 4;
    case ErrorCode::DegenerateDivisor: return 5;
    case ErrorCode::OutOfSupportedRange:
    case ErrorCode::TooManyEdges:
    case ErrorCode::TooManyVertices:
    case ErrorCode::AmbientTooLarge: return 6;
    default: return 7;
  }
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::ParseError, path + ": " + ex.what());
  }
}

// input JSON plus the graph it describes
struct Input {
  Json doc;
  TropicalGraph graph;
};

Input load_graph(const Options& o) {
  Json j = read_json(o.path);
  spdlog::debug("read {}", o.path);
  return {j, TropicalGraph::validate(parse_graph(j))};
}

PLDivisor load_divisor(const Options& o, Input& in) {
  if (o.slopes.empty()) throw Error(ErrorCode::InvalidArgument, "--slopes is required");
  Json s = read_json(o.slopes);
  in.doc = Json{{"graph", in.doc}, {"slopes", s}};
  return make_divisor(in.graph, parse_slopes(s));
}

Multidegree load_target(const Options& o, Input& in) {
  if (o.target == "zero") return target_multidegree(in.graph, TargetKind::Zero).degree;
  if (o.target == "canonical") return target_multidegree(in.graph, TargetKind::Canonical).degree;
  if (o.target == "log-canonical") return target_multidegree(in.graph, TargetKind::LogCanonical).degree;
  Json t = read_json(o.target);
  in.doc = Json{{"graph", in.doc}, {"target", t}};
  return parse_multidegree(in.graph, t);
}

Json cmd_validate(Input& in) {
  const auto& g = in.graph;
  Json r = {{"ok", true},
            {"vertices", g.num_vertices()},
            {"edges", g.num_edges()},
            {"legs", g.num_legs()},
            {"b1", g.b1()},
            {"genus", g.genus()},
            {"graph", graph_to_json(g)}};
  return r;
}

Json cmd_twist(const Options& o, Input& in) {
  Multidegree target = load_target(o, in);
  PLDivisor d = tree_twist(in.graph, target);
  return {{"target", multidegree_to_json(in.graph, target)}, {"divisor", divisor_to_json(d)}};
}

Json cmd_degree(const Options& o, Input& in) {
  PLDivisor d = load_divisor(o, in);
  return {{"multidegree", multidegree_to_json(in.graph, multidegree(d))}};
}

Json cmd_minmonoid(const Options& o, Input& in) {
  PLDivisor d = load_divisor(o, in);
  return divisor_to_json(d);
}

Json summary(const std::vector<SlopeAssignment>& all) {
  std::size_t nondeg = 0, rel = 0;
  for (const auto& a : all) {
    nondeg += a.nondegenerate();
    rel += a.relationless;
  }
  return {{"count", all.size()}, {"nondegenerate", nondeg}, {"relationless", rel}};
}

Json cmd_enumerate(const Options& o, Input& in) {
  const auto& g = in.graph;
  Multidegree target = load_target(o, in);
  auto all = enumerate_slopes(g, target);
  spdlog::info("{} assignments", all.size());
  Json list = Json::array();
  for (const auto& a : all) list.push_back(assignment_to_json(g, a));
  Json r = {{"target", multidegree_to_json(g, target)},
            {"certified_bound", certified_bound(g, target)},
            {"assignments", list},
            {"summary", summary(all)}};
  if (o.oracle >= 0) {
    auto brute = brute_force_slopes(g, target, o.oracle);
    r["oracle"] = {{"bound", o.oracle}, {"count", brute.size()}, {"equal", brute == all}};
  }
  return r;
}

Json cmd_align(const Options& o, Input& in) {
  PLDivisor d = load_divisor(o, in);
  bool aligned = is_aligned(d);
  Json r = {{"aligned", aligned}, {"values", divisor_to_json(d)["derived"]["values"]}};
  if (d.nondegenerate()) r["fan"] = fan_to_json(d, rub_subdivision(d));
  return r;
}

// the cells a rubber computation runs over: the aligned order, or every maximal cell
std::vector<Preorder> working_cells(const PLDivisor& d) {
  if (!d.nondegenerate()) throw Error(ErrorCode::DegenerateDivisor, "slopes force a degenerate edge");
  std::vector<Preorder> cells;
  for (const auto& c : rub_subdivision(d).cells)
    if (c.maximal) cells.push_back(c.classes);
  return cells;
}

Json cmd_subdivide(const Options& o, Input& in) {
  PLDivisor d = load_divisor(o, in);
  Json cells = Json::array();
  for (const auto& c : working_cells(d))
    cells.push_back({{"preorder", preorder_to_json(d.graph(), c)}, {"rubber", rubber_to_json(subdivide_curve(d, c))}});
  return {{"aligned", is_aligned(d)}, {"cells", cells}};
}

Json cmd_rubber(const Options& o, Input& in) {
  PLDivisor d = load_divisor(o, in);
  const auto& g = d.graph();
  bool aligned = is_aligned(d);
  SubdivisionFan fan = rub_subdivision(d);
  Json cells = Json::array();
  for (const auto& c : working_cells(d)) {
    Division dv = division_of(d, c);
    RubberData rd = subdivide_curve(d, c);
    ObstructionRanks r = obstruction_ranks(rd, g.genus(), static_cast<Int>(g.num_legs()));
    cells.push_back({{"preorder", preorder_to_json(g, c)},
                     {"division", division_to_json(g, dv)},
                     {"chain", chain_to_json(dv, chain_curve(dv))},
                     {"rubber", rubber_to_json(rd)},
                     {"ranks", ranks_to_json(r)}});
  }
  return {{"aligned", aligned}, {"maximal_cells", fan.maximal_count()}, {"fan", fan_to_json(d, fan)}, {"cells", cells}};
}

Json cmd_ranks(const Options& o, Input& in) {
  PLDivisor d = load_divisor(o, in);
  const auto& g = d.graph();
  Json cells = Json::array();
  for (const auto& c : working_cells(d))
    cells.push_back({{"preorder", preorder_to_json(g, c)},
                     {"ranks", ranks_to_json(obstruction_ranks(subdivide_curve(d, c), g.genus(),
                                                               static_cast<Int>(g.num_legs())))}});
  return {{"cells", cells}};
}

Json cmd_catalog(const Options& o) {
  auto graphs = enumerate_stable_graphs(o.genus, o.legs);
  Json index = Json::array();
  if (!o.out.empty()) fs::create_directories(o.out);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    Json gj = graph_to_json(graphs[i]);
    std::string name = "graph_" + std::to_string(i) + ".json";
    if (!o.out.empty()) std::ofstream(fs::path(o.out) / name) << gj.dump(2) << "\n";
    index.push_back({{"file", name},
                     {"vertices", graphs[i].num_vertices()},
                     {"edges", graphs[i].num_edges()},
                     {"digest", digest(gj)}});
  }
  Json r = {{"genus", o.genus}, {"legs", o.legs}, {"count", graphs.size()}, {"graphs", index}};
  if (!o.out.empty()) std::ofstream(fs::path(o.out) / "index.json") << r.dump(2) << "\n";
  return r;
}

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("tropjac");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("TROPJAC_LOG")) spdlog::set_level(spdlog::level::from_str(env));
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();
  Options o;
  CLI::App app{"tropjac: tropical divisors, slope enumeration and rubber data"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.add_option("--seed", o.seed, "seed recorded in the report");

  auto graph_cmd = [&](const char* name, const char* help) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("path", o.path, "graph JSON file")->required();
    sc->add_option("--out", o.out, "write the report here instead of stdout");
    return sc;
  };
  auto* validate = graph_cmd("validate", "check a graph file");
  auto* twist = graph_cmd("twist", "unique slopes on a tree with a target multidegree");
  twist->add_option("--target", o.target, "zero, canonical, log-canonical or a multidegree JSON file");
  auto* degree = graph_cmd("degree", "multidegree of a slope assignment");
  auto* enumerate = graph_cmd("enumerate", "all slope assignments with a target multidegree");
  enumerate->add_option("--target", o.target, "zero, canonical, log-canonical or a multidegree JSON file");
  enumerate->add_option("--oracle", o.oracle, "also run the brute force with this bound");
  auto* minmonoid = graph_cmd("minmonoid", "minimal base monoid of a slope assignment");
  auto* align = graph_cmd("align", "alignment test and subdivision fan");
  auto* subdivide = graph_cmd("subdivide", "subdivided curve for each maximal cell");
  auto* rubber = graph_cmd("rubber", "full rubber pipeline");
  auto* ranks = graph_cmd("ranks", "obstruction rank bookkeeping");
  for (auto* sc : {degree, minmonoid, align, subdivide, rubber, ranks})
    sc->add_option("--slopes", o.slopes, "slopes JSON file")->required();
  for (auto* sc : {validate, twist, degree, enumerate, minmonoid, align, subdivide, rubber, ranks})
    sc->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  auto* catalog = app.add_subcommand("catalog", "stable graphs of type (g, n)");
  catalog->add_option("--genus", o.genus)->required();
  catalog->add_option("--legs", o.legs)->required();
  catalog->add_option("--out", o.out, "directory for one JSON per graph plus index.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  Json report = {{"command", command}, {"tool_version", kVersion}, {"seed", o.seed}};
  try {
    Json results;
    if (command == "catalog") {
      report["input_digest"] = digest(Json{{"genus", o.genus}, {"legs", o.legs}});
      results = cmd_catalog(o);
    } else {
      Input in = load_graph(o);
      if (command == "validate") results = cmd_validate(in);
      else if (command == "twist") results = cmd_twist(o, in);
      else if (command == "degree") results = cmd_degree(o, in);
      else if (command == "enumerate") results = cmd_enumerate(o, in);
      else if (command == "minmonoid") results = cmd_minmonoid(o, in);
      else if (command == "align") results = cmd_align(o, in);
      else if (command == "subdivide") results = cmd_subdivide(o, in);
      else if (command == "rubber") results = cmd_rubber(o, in);
      else if (command == "ranks") results = cmd_ranks(o, in);
      report["input_digest"] = digest(in.doc);
      if (o.format == "dot" && command == "validate") {
        std::cout << graph_to_dot(in.graph);
        return 0;
      }
    }
    report["results"] = std::move(results);
  } catch (const Error& e) {
    spdlog::debug("{}", e.what());
    std::cerr << Json{{"error", std::string(error_name(e.code()))}, {"message", e.what()}}.dump() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    spdlog::critical("{}", e.what());
    return 1;
  }
  report["timing_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const std::string text = report.dump(2) + "\n";
  if (!o.out.empty() && command != "catalog")
    std::ofstream(o.out) << text;
  else
    std::cout << text;
  return 0;
}
