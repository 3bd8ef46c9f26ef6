#include <doctest.h>

#include "fixtures.hpp"
#include "tropjac/linear.hpp"

using namespace tropjac;

namespace {

std::vector<Constraint> random_system(std::mt19937_64& rng, std::size_t vars, bool strict) {
  std::uniform_int_distribution<int> coef(-3, 3), rhs(-4, 4), rel(0, strict ? 5 : 4);
  std::vector<Constraint> cs;
  std::size_t m = 1 + rng() % 5;
  for (std::size_t i = 0; i < m; ++i) {
    Constraint c;
    for (std::size_t j = 0; j < vars; ++j) c.coeffs.push_back(coef(rng));
    int r = rel(rng);
    c.relation = r == 0 ? Relation::Eq : (r == 5 ? Relation::Gt : Relation::Ge);
    c.rhs = rhs(rng);
    cs.push_back(c);
  }
  return cs;
}

// box search over half-integers; finds points of every feasible bounded test system we generate
bool grid_feasible(std::size_t vars, const std::vector<Constraint>& cs, int radius) {
  RationalVector x(vars);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == vars) {
      for (const auto& c : cs)
        if (!satisfies(c, x)) return false;
      return true;
    }
    for (int k = -2 * radius; k <= 2 * radius; ++k) {
      x[i] = Rational(k, 2);
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

TEST_CASE("rank and nullspace") {
  RationalMatrix m = to_rational(std::vector<IntVector>{{1, 2, 3}, {2, 4, 6}});
  CHECK(rank(m) == 1);
  auto ns = nullspace(m, 3);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(1 * v[0] + 2 * v[1] + 3 * v[2] == 0);
  CHECK(primitive_integer({Rational(1, 2), Rational(-3, 4)}) == IntVector{2, -3});
  CHECK_FALSE(solve_particular(to_rational(std::vector<IntVector>{{1, 1}, {1, 1}}), {Rational(1), Rational(2)}, 2));
}

TEST_CASE("simplex and Fourier-Motzkin agree") {
  std::mt19937_64 rng(fixtures::seed() + 3);
  int feasible = 0;
  for (int it = 0; it < 400; ++it) {
    std::size_t vars = 1 + rng() % 3;
    auto cs = random_system(rng, vars, false);
    auto a = simplex_feasible_point(vars, cs);
    auto b = fm_feasible_point(vars, cs);
    CHECK(a.has_value() == b.has_value());
    if (a) {
      ++feasible;
      for (const auto& c : cs) CHECK(satisfies(c, *a));
    }
    if (b)
      for (const auto& c : cs) CHECK(satisfies(c, *b));
  }
  CHECK(feasible > 50);
}

TEST_CASE("strict systems against a grid oracle") {
  std::mt19937_64 rng(fixtures::seed() + 5);
  for (int it = 0; it < 300; ++it) {
    std::size_t vars = 1 + rng() % 2;
    auto cs = random_system(rng, vars, true);
    // box keeps the region bounded so a coarse grid is a sound witness search
    for (std::size_t j = 0; j < vars; ++j)
      for (int s : {1, -1}) {
        Constraint c;
        c.coeffs.assign(vars, 0);
        c.coeffs[j] = s;
        c.rhs = -30;
        cs.push_back(c);
      }
    auto b = fm_feasible_point(vars, cs);
    if (b)
      for (const auto& c : cs) CHECK(satisfies(c, *b));
    if (grid_feasible(vars, cs, 30)) CHECK(b.has_value());
  }
}

TEST_CASE("simplex rejects strict rows") {
  Constraint c{{Rational(1)}, Relation::Gt, 0};
  CHECK_THROWS_AS(simplex_feasible_point(1, {c}), Error);
  auto p = fm_feasible_point(1, {c, Constraint{{Rational(-1)}, Relation::Ge, -1}});
  REQUIRE(p);
  CHECK((*p)[0] > 0);
}
