#include "tropjac/linear.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tropjac {

RationalVector to_rational(const IntVector& v) {
  RationalVector r;
  r.reserve(v.size());
  for (Int x : v) r.emplace_back(x);
  return r;
}

RationalMatrix to_rational(const std::vector<IntVector>& rows) {
  RationalMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(to_rational(r));
  return m;
}

namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix m) {
  if (m.empty()) return 0;
  return rref(m, m.front().size()).size();
}

std::vector<RationalVector> nullspace(RationalMatrix m, std::size_t cols) {
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve_particular(RationalMatrix m, const RationalVector& b, std::size_t cols) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  auto pivots = rref(m, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RationalVector x(cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols];
  return x;
}

IntVector primitive_integer(const RationalVector& v) {
  using boost::multiprecision::cpp_int;
  cpp_int l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, cpp_int(denominator(x)));
  std::vector<cpp_int> ints;
  cpp_int g = 0;
  for (const auto& x : v) {
    cpp_int n = numerator(x) * (l / denominator(x));
    g = boost::multiprecision::gcd(g, n);
    ints.push_back(n);
  }
  IntVector out;
  for (auto& n : ints) {
    cpp_int q = g == 0 ? n : n / g;
    if (q > std::numeric_limits<Int>::max() || q < std::numeric_limits<Int>::min())
      throw Error(ErrorCode::Overflow, "primitive vector entry");
    out.push_back(static_cast<Int>(q));
  }
  return out;
}

bool satisfies(const Constraint& c, const RationalVector& x) {
  Rational lhs = 0;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) lhs += c.coeffs[i] * x[i];
  switch (c.relation) {
    case Relation::Eq: return lhs == c.rhs;
    case Relation::Ge: return lhs >= c.rhs;
    case Relation::Gt: return lhs > c.rhs;
  }
  return false;
}

namespace {

// Bland pivoting on a tableau whose last m columns before the rhs are an
// artificial identity basis; true iff the artificials can be driven to zero.
bool phase_one(RationalMatrix& t, std::vector<std::size_t>& basis, std::size_t structural) {
  const std::size_t m = t.size();
  const std::size_t width = structural + m;
  const std::size_t rhs = width;
  RationalVector z(width + 1, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < structural; ++j) z[j] -= t[i][j];
  for (std::size_t i = 0; i < m; ++i) z[rhs] -= t[i][rhs];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j)
      if (z[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot occur in phase one
    Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= width; ++j) t[i][j] -= f * t[leave][j];
    }
    if (z[enter] != 0) {
      Rational f = z[enter];
      for (std::size_t j = 0; j <= width; ++j) z[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  return z[rhs] == 0;
}

}  // namespace

std::optional<RationalVector> simplex_nonnegative(const RationalMatrix& a, const RationalVector& b,
                                                  std::size_t num_vars) {
  const std::size_t m = a.size();
  const std::size_t width = num_vars + m;
  RationalMatrix t(m, RationalVector(width + 1, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < num_vars; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][width] = flip ? Rational(-b[i]) : b[i];
    t[i][num_vars + i] = 1;
    basis[i] = num_vars + i;
  }
  if (!phase_one(t, basis, num_vars)) return std::nullopt;
  RationalVector y(num_vars, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < num_vars) y[basis[i]] = t[i][width];
  for (std::size_t i = 0; i < m; ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < num_vars; ++j) lhs += a[i][j] * y[j];
    if (lhs != b[i]) throw std::logic_error("simplex witness violates a row");
  }
  return y;
}

std::optional<RationalVector> simplex_feasible_point(std::size_t num_vars,
                                                     const std::vector<Constraint>& constraints) {
  const std::size_t m = constraints.size();
  std::size_t slacks = 0;
  for (const auto& c : constraints) {
    if (c.relation == Relation::Gt) throw Error(ErrorCode::InvalidArgument, "simplex takes no strict rows");
    if (c.relation == Relation::Ge) ++slacks;
  }
  const std::size_t structural = 2 * num_vars + slacks;
  const std::size_t width = structural + m;  // artificials follow
  const std::size_t rhs = width;
  RationalMatrix t(m, RationalVector(width + 1, 0));
  std::vector<std::size_t> basis(m);

  std::size_t s = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    for (std::size_t j = 0; j < num_vars; ++j) {
      t[i][2 * j] = c.coeffs[j];
      t[i][2 * j + 1] = -c.coeffs[j];
    }
    if (c.relation == Relation::Ge) t[i][2 * num_vars + s++] = -1;
    t[i][rhs] = c.rhs;
    if (t[i][rhs] < 0)
      for (std::size_t j = 0; j < width + 1; ++j) t[i][j] = -t[i][j];
    t[i][structural + i] = 1;
    basis[i] = structural + i;
  }

  if (!phase_one(t, basis, structural)) return std::nullopt;
  RationalVector value(width, 0);
  for (std::size_t i = 0; i < m; ++i) value[basis[i]] = t[i][rhs];
  RationalVector x(num_vars);
  for (std::size_t j = 0; j < num_vars; ++j) x[j] = value[2 * j] - value[2 * j + 1];
  for (const auto& c : constraints)
    if (!satisfies(c, x)) throw std::logic_error("simplex witness violates a constraint");
  return x;
}

namespace {

struct Ineq {
  RationalVector a;  // a . x >= b, or > b when strict
  Rational b;
  bool strict = false;
};

// scales so the first nonzero coefficient has absolute value 1; false if all zero
bool normalize(Ineq& q) {
  for (const auto& v : q.a)
    if (v != 0) {
      Rational s = v < 0 ? Rational(-v) : v;
      for (auto& x : q.a) x /= s;
      q.b /= s;
      return true;
    }
  return false;
}

bool trivially_true(const Ineq& q) { return q.strict ? (0 > q.b) : (0 >= q.b); }

struct Elimination {
  std::size_t var;
  std::vector<Ineq> bounds;
};

struct Substitution {
  std::size_t var;
  RationalVector a;
  Rational b;
};

}  // namespace

std::optional<RationalVector> fm_feasible_point(std::size_t num_vars,
                                                const std::vector<Constraint>& constraints) {
  std::vector<Ineq> ineqs;
  std::vector<Substitution> subs;
  std::vector<Constraint> eqs;
  for (const auto& c : constraints) {
    if (c.relation == Relation::Eq)
      eqs.push_back(c);
    else
      ineqs.push_back({c.coeffs, c.rhs, c.relation == Relation::Gt});
  }

  std::vector<bool> eliminated(num_vars, false);
  for (std::size_t k = 0; k < eqs.size(); ++k) {
    const auto& e = eqs[k];
    std::size_t j = 0;
    while (j < num_vars && e.coeffs[j] == 0) ++j;
    if (j == num_vars) {
      if (e.rhs != 0) return std::nullopt;
      continue;
    }
    Substitution sub{j, e.coeffs, e.rhs};
    eliminated[j] = true;
    auto apply = [&](RationalVector& a, Rational& b) {
      if (a[j] == 0) return;
      Rational f = a[j] / sub.a[j];
      for (std::size_t i = 0; i < num_vars; ++i) a[i] -= f * sub.a[i];
      b -= f * sub.b;
    };
    for (std::size_t l = k + 1; l < eqs.size(); ++l) apply(eqs[l].coeffs, eqs[l].rhs);
    for (auto& q : ineqs) apply(q.a, q.b);
    subs.push_back(std::move(sub));
  }

  auto prune = [](std::vector<Ineq>& list) -> bool {
    std::map<RationalVector, std::size_t> seen;
    std::vector<Ineq> kept;
    for (auto& q : list) {
      if (!normalize(q)) {
        if (!trivially_true(q)) return false;
        continue;
      }
      auto it = seen.find(q.a);
      if (it == seen.end()) {
        seen.emplace(q.a, kept.size());
        kept.push_back(std::move(q));
      } else {
        Ineq& old = kept[it->second];
        if (q.b > old.b || (q.b == old.b && q.strict)) {
          old.b = q.b;
          old.strict = q.strict;
        }
      }
    }
    list = std::move(kept);
    return true;
  };
  if (!prune(ineqs)) return std::nullopt;

  std::vector<Elimination> steps;
  std::vector<bool> done = eliminated;
  for (;;) {
    std::size_t var = num_vars;
    std::size_t best = 0;
    for (std::size_t j = 0; j < num_vars; ++j) {
      if (done[j]) continue;
      std::size_t pos = 0, neg = 0;
      for (const auto& q : ineqs) {
        if (q.a[j] > 0) ++pos;
        if (q.a[j] < 0) ++neg;
      }
      std::size_t cost = pos * neg;
      if (var == num_vars || cost < best) {
        var = j;
        best = cost;
      }
    }
    if (var == num_vars) break;
    done[var] = true;
    Elimination step{var, {}};
    std::vector<Ineq> rest, lower, upper;
    for (auto& q : ineqs) {
      if (q.a[var] > 0)
        lower.push_back(q);
      else if (q.a[var] < 0)
        upper.push_back(q);
      else
        rest.push_back(std::move(q));
    }
    for (const auto& p : lower)
      for (const auto& n : upper) {
        Rational cp = -n.a[var], cn = p.a[var];
        Ineq c;
        c.a.resize(num_vars);
        for (std::size_t i = 0; i < num_vars; ++i) c.a[i] = cp * p.a[i] + cn * n.a[i];
        c.a[var] = 0;
        c.b = cp * p.b + cn * n.b;
        c.strict = p.strict || n.strict;
        rest.push_back(std::move(c));
      }
    step.bounds = std::move(lower);
    step.bounds.insert(step.bounds.end(), upper.begin(), upper.end());
    steps.push_back(std::move(step));
    ineqs = std::move(rest);
    if (!prune(ineqs)) return std::nullopt;
  }
  for (const auto& q : ineqs)
    if (!trivially_true(q)) return std::nullopt;

  RationalVector x(num_vars, 0);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const std::size_t j = it->var;
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& q : it->bounds) {
      Rational r = q.b;
      for (std::size_t i = 0; i < num_vars; ++i)
        if (i != j) r -= q.a[i] * x[i];
      r /= q.a[j];
      if (q.a[j] > 0) {
        if (!lo || r > *lo || (r == *lo && q.strict)) {
          lo_strict = (lo && r == *lo) ? (lo_strict || q.strict) : q.strict;
          lo = r;
        }
      } else {
        if (!hi || r < *hi || (r == *hi && q.strict)) {
          hi_strict = (hi && r == *hi) ? (hi_strict || q.strict) : q.strict;
          hi = r;
        }
      }
    }
    if (lo && hi)
      x[j] = (*lo == *hi) ? *lo : (*lo + *hi) / 2;
    else if (lo)
      x[j] = lo_strict ? *lo + 1 : *lo;
    else if (hi)
      x[j] = hi_strict ? *hi - 1 : *hi;
    else
      x[j] = 0;
  }
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    Rational r = it->b;
    for (std::size_t i = 0; i < num_vars; ++i)
      if (i != it->var) r -= it->a[i] * x[i];
    x[it->var] = r / it->a[it->var];
  }
  for (const auto& c : constraints)
    if (!satisfies(c, x)) throw std::logic_error("Fourier-Motzkin witness violates a constraint");
  return x;
}

}  // namespace tropjac
