// Acceptance run: one PASS/FAIL line per criterion, exact comparisons,
// wall-clock limits as stated next to each check.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "tropjac/enumerate.hpp"
#include "tropjac/rubber.hpp"

using namespace tropjac;

namespace {

std::uint64_t g_seed = 20240611;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;
int only = 0;

void criterion(int id, const char* name, double limit_ms, const std::function<Outcome()>& body) {
  if (only != 0 && only != id) return;
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (ms > limit_ms) o.require(false, "time limit exceeded");
  if (!o.ok) ++failures;
  std::printf("%s %2d %-34s %10.1f ms (limit %.0f ms)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, ms, limit_ms,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

TropicalGraph theta(Int k) {
  return TropicalGraph::validate(
      {{{"v", 0}, {"w", 0}}, {{"e1", "v", "w"}, {"e2", "v", "w"}}, {{"x1", "v", k}, {"x2", "w", -k}}});
}

Multidegree zeros(const TropicalGraph& g) { return Multidegree::from_values(std::vector<Int>(g.num_vertices(), 0)); }

PLDivisor y_divisor() {
  auto g = TropicalGraph::validate({{{"u", 0}, {"v", 0}, {"w", 0}},
                                    {{"e1", "u", "v"}, {"e2", "u", "w"}},
                                    {{"x1", "u", 2}, {"x2", "v", -1}, {"x3", "w", -1}}});
  return make_divisor(g, IntVector{1, 1});
}

PLDivisor star_divisor() {
  auto g = TropicalGraph::validate({{{"u", 0}, {"v1", 0}, {"v2", 0}, {"v3", 0}},
                                    {{"e1", "u", "v1"}, {"e2", "u", "v2"}, {"e3", "u", "v3"}},
                                    {{"x0", "u", 3}, {"x1", "v1", -1}, {"x2", "v2", -1}, {"x3", "v3", -1}}});
  return make_divisor(g, IntVector{1, 1, 1});
}

PLDivisor triangle(Int s) {
  auto g = TropicalGraph::validate({{{"a", 0}, {"b", 0}, {"c", 0}},
                                    {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "a", "c"}},
                                    {{"x1", "a", 0}}});
  return make_divisor(g, IntVector{1, 1, s});
}

// aligned nondegenerate divisors: theta assignments plus two triangles
std::vector<PLDivisor> aligned_divisors() {
  std::vector<PLDivisor> out;
  for (Int k = 1; k <= 4; ++k) {
    auto g = theta(k);
    for (const auto& a : enumerate_slopes(g, zeros(g)))
      if (a.nondegenerate()) out.push_back(make_divisor(g, a.slopes));
  }
  out.push_back(triangle(1));
  out.push_back(triangle(2));
  return out;
}

// random positive point of the base cone of d
std::optional<RationalVector> sample_cone(const PLDivisor& d, std::mt19937_64& rng) {
  const std::size_t ne = d.graph().num_edges();
  auto rel = d.base().sharpened().relations();
  if (rel.empty()) {
    RationalVector x(ne);
    for (auto& v : x) v = Rational(1 + static_cast<int>(rng() % 60), 1 + static_cast<int>(rng() % 7));
    return x;
  }
  auto kernel = nullspace(to_rational(rel), ne);
  for (int attempt = 0; attempt < 500; ++attempt) {
    RationalVector x(ne, 0);
    for (const auto& k : kernel) {
      Rational c(static_cast<int>(rng() % 81) - 40, 1 + static_cast<int>(rng() % 7));
      for (std::size_t e = 0; e < ne; ++e) x[e] += c * k[e];
    }
    if (std::all_of(x.begin(), x.end(), [](const Rational& v) { return v > 0; })) return x;
  }
  return std::nullopt;
}

// values and strict sign vector computed directly from the potentials
std::vector<int> sample_signs(const PLDivisor& d, const RationalVector& x) {
  std::vector<Rational> val;
  for (const auto& p : d.potentials()) {
    Rational s = 0;
    for (std::size_t e = 0; e < p.size(); ++e) s += p[e] * x[e];
    val.push_back(s);
  }
  std::vector<int> signs;
  for (std::size_t v = 0; v < val.size(); ++v)
    for (std::size_t w = v + 1; w < val.size(); ++w) signs.push_back(val[w] > val[v] ? 1 : (val[w] < val[v] ? -1 : 0));
  return signs;
}

// corpus of rubber data: every maximal and tie cell of the divisors above
// plus random nondegenerate divisors on small graphs
std::vector<std::pair<PLDivisor, RubberData>> rubber_corpus() {
  std::vector<PLDivisor> ds = aligned_divisors();
  ds.push_back(y_divisor());
  ds.push_back(star_divisor());
  std::mt19937_64 rng(g_seed);
  while (ds.size() < 60) {
    std::size_t n = 2 + rng() % 3;
    RawGraph r;
    for (std::size_t v = 0; v < n; ++v) {
      r.vertices.push_back({"v" + std::to_string(v), static_cast<Int>(rng() % 2)});
      if (v) r.edges.push_back({"e" + std::to_string(v), "v" + std::to_string(rng() % v), "v" + std::to_string(v)});
    }
    for (std::size_t k = 0, extra = rng() % 3; k < extra; ++k) {
      std::size_t a = rng() % n, b = (a + 1 + rng() % (n - 1)) % n;
      r.edges.push_back({"f" + std::to_string(k), "v" + std::to_string(a), "v" + std::to_string(b)});
    }
    r.legs.push_back({"x1", "v0", 0});
    auto g = TropicalGraph::validate(r);
    IntVector s(g.num_edges());
    for (auto& v : s) v = static_cast<Int>(rng() % 7) - 3;
    auto d = make_divisor(g, s);
    if (d.nondegenerate()) ds.push_back(d);
  }
  std::vector<std::pair<PLDivisor, RubberData>> out;
  for (const auto& d : ds)
    for (const auto& c : rub_subdivision(d).cells) out.emplace_back(d, subdivide_curve(d, c.classes));
  return out;
}

Outcome c1() {
  Outcome o;
  for (Int k = 0; k <= 8; ++k) {
    auto g = theta(k);
    std::vector<IntVector> rl;
    for (const auto& a : enumerate_slopes(g, zeros(g)))
      if (a.relationless) rl.push_back(a.slopes);
    o.require((k % 2 == 0) == !rl.empty(), "parity fails at k=" + std::to_string(k));
    if (k % 2 == 0) o.require(rl == std::vector<IntVector>{{-k / 2, -k / 2}}, "wrong twist at k=" + std::to_string(k));
    if (k == 1) o.require(rl.empty(), "k=1 count");
    if (k == 2) o.require(rl.size() == 1 && rl[0] == IntVector{-1, -1}, "k=2 twist");
  }
  return o;
}

Outcome c2() {
  Outcome o;
  const std::size_t want[] = {0, 1, 2};
  for (Int k = 1; k <= 3; ++k) {
    auto g = theta(k);
    auto all = enumerate_slopes(g, zeros(g));
    o.require(all == brute_force_slopes(g, zeros(g), certified_bound(g, zeros(g)) + 2), "oracle differs");
    std::size_t n = 0;
    for (const auto& a : all) n += a.nondegenerate();
    o.require(n == want[k - 1], "k=" + std::to_string(k) + " has " + std::to_string(n));
  }
  return o;
}

Outcome c3() {
  Outcome o;
  std::mt19937_64 rng(g_seed);
  std::uniform_int_distribution<Int> w(-2, 2);
  std::size_t runs = 0;
  for (Int genus = 0; genus <= 2; ++genus)
    for (Int n = 0; n <= 4; ++n) {
      if (2 * genus - 2 + n <= 0) continue;
      for (const auto& sg : enumerate_stable_graphs(genus, n)) {
        if (sg.num_edges() > 6) continue;
        for (TargetKind kind : {TargetKind::Zero, TargetKind::Canonical}) {
          const Int want = kind == TargetKind::Zero ? 0 : 2 * genus - 2;
          RawGraph raw = sg.to_raw();
          Int total = 0;
          for (std::size_t i = 0; i < raw.legs.size(); ++i) {
            raw.legs[i].weight = i + 1 == raw.legs.size() ? want - total : w(rng);
            total += raw.legs[i].weight;
          }
          if (total != want) continue;  // no legs to absorb the sum
          auto g = TropicalGraph::validate(raw);
          {
            Multidegree t = target_multidegree(g, kind).degree;
            auto peeled = enumerate_slopes(g, t);
            auto brute = brute_force_slopes(g, t, certified_bound(g, t));
            o.require(peeled == brute, "mismatch on a (" + std::to_string(genus) + "," + std::to_string(n) + ") graph");
            ++runs;
          }
        }
      }
    }
  o.detail = o.ok ? std::to_string(runs) + " comparisons" : o.detail;
  o.require(runs > 0, "no graphs compared");
  return o;
}

Outcome c4() {
  Outcome o;
  std::mt19937_64 rng(g_seed + 4);
  for (int it = 0; it < 200; ++it) {
    std::size_t n = 1 + rng() % 8;
    RawGraph r;
    for (std::size_t v = 0; v < n; ++v) {
      r.vertices.push_back({"v" + std::to_string(v), static_cast<Int>(rng() % 2)});
      if (v) {
        std::string p = "v" + std::to_string(rng() % v), c = "v" + std::to_string(v);
        r.edges.push_back(rng() % 2 ? RawEdge{"e" + std::to_string(v), p, c} : RawEdge{"e" + std::to_string(v), c, p});
      }
      r.legs.push_back({"x" + std::to_string(v), "v" + std::to_string(v), static_cast<Int>(rng() % 7) - 3});
    }
    auto g = TropicalGraph::validate(r);
    // random target with the right total
    std::vector<Int> t(n);
    Int sum = 0;
    for (std::size_t v = 0; v < n; ++v) {
      t[v] = v + 1 == n ? g.leg_weight_total() - sum : (it % 2 ? static_cast<Int>(rng() % 5) - 2 : 0);
      sum += t[v];
    }
    if (it % 2 == 0) {
      t.assign(n, 0);
      t[0] = g.leg_weight_total();
    }
    auto target = Multidegree::from_values(t);
    auto d = tree_twist(g, target);
    o.require(multidegree(d) == target, "target missed");
    Int b = 0;
    for (Int x : edge_target(g, target)) b += std::abs(x);
    auto all = box_slope_vectors(g, target, b);
    o.require(all.size() == 1 && all[0] == d.slopes(), "not unique in the box");
  }
  return o;
}

Outcome c5() {
  Outcome o;
  std::mt19937_64 rng(g_seed + 5);
  for (int it = 0; it < 200; ++it) {
    std::size_t n = 1 + rng() % 7;
    RawGraph r;
    for (std::size_t v = 0; v < n; ++v) {
      r.vertices.push_back({"v" + std::to_string(v), 0});
      if (v) r.edges.push_back({"e" + std::to_string(v), "v" + std::to_string(rng() % v), "v" + std::to_string(v)});
    }
    for (std::size_t k = 0, extra = rng() % 5; k < extra; ++k)
      r.edges.push_back({"f" + std::to_string(k), "v" + std::to_string(rng() % n), "v" + std::to_string(rng() % n)});
    r.legs.push_back({"x1", "v0", static_cast<Int>(rng() % 5) - 2});
    auto g = TropicalGraph::validate(r);
    RationalVector len(g.num_edges());
    for (auto& l : len) l = Rational(1 + static_cast<int>(rng() % 9), 1 + static_cast<int>(rng() % 9));
    std::vector<Int> t(n, 0);
    for (std::size_t v = 0; v + 1 < n; ++v) t[v] = static_cast<Int>(rng() % 5) - 2;
    Int sum = 0;
    for (std::size_t v = 0; v + 1 < n; ++v) sum += t[v];
    t[n - 1] = g.leg_weight_total() - sum;
    auto sol = harmonic_solve(g, len, Multidegree::from_values(t));
    o.require(sol.dimension == 1, "solution space of dimension " + std::to_string(sol.dimension));
    // residual check of the particular solution
    for (std::size_t v = 0; v < n; ++v) {
      Rational lhs = g.leg_weight_at(v);
      for (std::size_t e = 0; e < g.num_edges(); ++e) {
        if (g.is_loop(e)) continue;
        const auto& ed = g.edge(e);
        if (ed.tail == v) lhs += (sol.particular[ed.head] - sol.particular[v]) / len[e];
        if (ed.head == v) lhs += (sol.particular[ed.tail] - sol.particular[v]) / len[e];
      }
      o.require(lhs == t[v], "residual nonzero");
    }
  }
  return o;
}

Outcome c6() {
  Outcome o;
  std::mt19937_64 rng(g_seed + 6);
  auto oracle_count = [&](const PLDivisor& d) {
    std::set<std::vector<int>> seen;
    for (int i = 0; i < 3000; ++i) {
      auto x = sample_cone(d, rng);
      if (!x) continue;
      auto s = sample_signs(d, *x);
      if (std::find(s.begin(), s.end(), 0) == s.end()) seen.insert(s);
    }
    return seen.size();
  };
  auto y = y_divisor();
  auto fy = rub_subdivision(y);
  o.require(fy.maximal_count() == 2, "Y-graph gives " + std::to_string(fy.maximal_count()));
  o.require(oracle_count(y) == 2, "Y-graph sign oracle");
  auto st = star_divisor();
  auto fs = rub_subdivision(st);
  o.require(fs.maximal_count() == 6, "star gives " + std::to_string(fs.maximal_count()));
  o.require(oracle_count(st) == 6, "star sign oracle");
  for (const auto& d : aligned_divisors()) {
    o.require(is_aligned(d), "expected an aligned divisor");
    o.require(rub_subdivision(d).maximal_count() == 1, "aligned divisor with several cells");
  }
  return o;
}

Outcome c7() {
  Outcome o;
  std::mt19937_64 rng(g_seed + 7);
  std::vector<PLDivisor> ds = {y_divisor(), star_divisor()};
  for (const auto& d : aligned_divisors()) ds.push_back(d);
  for (const auto& d : ds) {
    auto fan = rub_subdivision(d);
    int got = 0;
    for (int i = 0; i < 1000; ++i) {
      auto x = sample_cone(d, rng);
      if (!x) continue;
      ++got;
      int closed = 0, open = 0;
      auto p = realized_preorder(d, *x);
      for (const auto& c : fan.cells) {
        closed += in_closed_cell(d, c, *x);
        open += c.classes == p;
      }
      o.require(closed >= 1, "point outside every closed cell");
      o.require(open == 1, "open membership not unique");
    }
    o.require(got == 1000, "could not sample the base cone");
  }
  return o;
}

Outcome c8(const std::vector<std::pair<PLDivisor, RubberData>>& corpus) {
  Outcome o;
  for (const auto& [d, rd] : corpus) {
    const auto& g = d.graph();
    o.require(rd.subdivided.genus() == g.genus(), "genus changed");
    o.require(rd.subdivided.legs().size() == g.legs().size(), "legs changed");
    for (std::size_t i = 0; i < g.legs().size(); ++i)
      o.require(rd.subdivided.legs()[i].weight == g.legs()[i].weight &&
                    rd.subdivided.vertex_id(rd.subdivided.legs()[i].vertex) == g.vertex_id(g.legs()[i].vertex),
                "leg moved");
    o.require(contract(rd).to_raw() == g.to_raw(), "contraction differs");
    o.require(levels_consistent(rd), "levels not reproduced");
  }
  o.detail = o.ok ? std::to_string(corpus.size()) + " subdivisions" : o.detail;
  return o;
}

Outcome c9(const std::vector<std::pair<PLDivisor, RubberData>>& corpus) {
  Outcome o;
  for (const auto& [d, rd] : corpus) {
    Int g = d.graph().genus(), n = static_cast<Int>(d.graph().num_legs());
    auto r = obstruction_ranks(rd, g, n);
    o.require(r.h1_rank == g && rd.subdivided.genus() == g, "h1");
    Int crossings = 0;
    const auto& c = rd.subdivided;
    for (std::size_t e = 0; e < c.num_edges(); ++e)
      if (rd.level_of[c.edge(e).tail] != rd.level_of[c.edge(e).head]) ++crossings;
    o.require(r.primary_obstruction_rank == crossings, "primary rank");
    o.require(r.vdim == 2 * g - 3 + n, "vdim");
    o.require(r.euler_fdagger - r.primary_obstruction_rank == 1 - g, "euler identity");
  }
  return o;
}

Outcome c10() {
  Outcome o;
  bool a = is_relatively_valuative(MonoidHom::make(IntMatrix::from_rows({{1, 0}}, 2)));
  bool b = is_relatively_valuative(MonoidHom::make(IntMatrix::from_rows({{1, 1}}, 2)));
  bool c = is_relatively_valuative(MonoidHom::make(IntMatrix::identity(3)));
  o.require(a && !b && c, "got (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
  return o;
}

Outcome c11() {
  Outcome o;
  o.require(enumerate_stable_graphs(1, 1).size() == 2, "(1,1)");
  o.require(enumerate_stable_graphs(0, 3).size() == 1, "(0,3)");
  o.require(enumerate_stable_graphs(0, 4).size() == 4, "(0,4)");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("TROPJAC_SEED")) g_seed = std::strtoull(env, nullptr, 10);
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]).rfind("--seed=", 0) == 0)
      g_seed = std::strtoull(argv[i] + 7, nullptr, 10);
    else if (std::string(argv[i]).rfind("--only=", 0) == 0)
      only = std::atoi(argv[i] + 7);
  std::printf("seed %llu\n", static_cast<unsigned long long>(g_seed));

  criterion(1, "theta twist parity", 1000, c1);
  criterion(2, "theta nondegenerate counts", 1000, c2);
  criterion(3, "enumeration equals brute force", 120000, c3);
  criterion(4, "tree twist uniqueness", 60000, c4);
  criterion(5, "harmonic uniqueness", 60000, c5);
  criterion(6, "subdivision cell counts", 10000, c6);
  criterion(7, "fan partition", 30000, c7);
  std::vector<std::pair<PLDivisor, RubberData>> corpus;
  auto start = std::chrono::steady_clock::now();
  if (only == 0 || only == 8 || only == 9) corpus = rubber_corpus();
  double build_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::printf("     rubber corpus built in %.1f ms\n", build_ms);
  criterion(8, "subdivision conservation", 30000, [&] { return c8(corpus); });
  criterion(9, "rank identities", 5000, [&] { return c9(corpus); });
  criterion(10, "relative valuativity", 1000, c10);
  criterion(11, "catalog counts", 10000, c11);
  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
