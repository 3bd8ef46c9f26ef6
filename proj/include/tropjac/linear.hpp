#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "tropjac/integer.hpp"

namespace tropjac {

using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

enum class Relation { Eq, Ge, Gt };

// coeffs . x  (relation)  rhs
struct Constraint {
  RationalVector coeffs;
  Relation relation = Relation::Ge;
  Rational rhs = 0;
};

RationalVector to_rational(const IntVector& v);
RationalMatrix to_rational(const std::vector<IntVector>& rows);

std::size_t rank(RationalMatrix m);
// basis of {x : m x = 0}; columns = cols
std::vector<RationalVector> nullspace(RationalMatrix m, std::size_t cols);
// clears denominators and divides by the content
IntVector primitive_integer(const RationalVector& v);
// one solution of m x = b (free coordinates set to 0), or nullopt if inconsistent
std::optional<RationalVector> solve_particular(RationalMatrix m, const RationalVector& b, std::size_t cols);

bool satisfies(const Constraint& c, const RationalVector& x);

// Exact phase-one simplex with Bland's rule. Strict relations are rejected.
std::optional<RationalVector> simplex_feasible_point(std::size_t num_vars,
                                                     const std::vector<Constraint>& constraints);

// Exact phase one for a y = b, y >= 0 (standard form).
std::optional<RationalVector> simplex_nonnegative(const RationalMatrix& a, const RationalVector& b,
                                                  std::size_t num_vars);

// Fourier-Motzkin elimination with strictness tracking and witness recovery.
std::optional<RationalVector> fm_feasible_point(std::size_t num_vars,
                                                const std::vector<Constraint>& constraints);

}  // namespace tropjac
