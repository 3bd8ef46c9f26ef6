#include "tropjac/lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "tropjac/linear.hpp"

namespace tropjac {

LatticeQuotient LatticeQuotient::make(std::size_t ambient, const std::vector<IntVector>& relations) {
  LatticeQuotient q;
  q.ambient_ = ambient;
  for (const auto& r : relations)
    if (r.size() != ambient) throw Error(ErrorCode::InvalidArgument, "relation length differs from ambient rank");

  HermiteForm h = hermite_normal_form(IntMatrix::from_rows(relations, ambient));
  for (std::size_t i = 0; i < h.rank; ++i) q.relations_.push_back(h.form.row(i));
  q.smith_ = smith_normal_form(IntMatrix::from_rows(q.relations_, ambient));
  q.rank_ = q.smith_.rank;
  for (std::size_t i = 0; i < q.rank_; ++i) {
    Int d = q.smith_.diagonal(i, i);
    q.diagonal_.push_back(d);
    if (d > 1) {
      q.torsion_index_.push_back(i);
      q.moduli_.push_back(d);
    }
  }
  q.free_rank_ = ambient - q.rank_;

  // normalize the free basis so that generator images form a Hermite matrix
  const std::size_t r = q.free_rank_;
  IntMatrix g_t(r, ambient);
  for (std::size_t e = 0; e < ambient; ++e)
    for (std::size_t k = 0; k < r; ++k) g_t(k, e) = q.smith_.right(e, q.rank_ + k);
  HermiteForm gh = hermite_normal_form(g_t);
  q.free_map_ = gh.transform.transpose();
  q.free_map_inverse_ = gh.transform_inverse.transpose();

  for (std::size_t e = 0; e < ambient; ++e) q.generators_.push_back(q.from_snf(q.smith_.right.row(e)));
  q.compute_units();
  return q;
}

Element LatticeQuotient::from_snf(const IntVector& y) const {
  Element el;
  el.free.assign(free_rank_, 0);
  for (std::size_t j = 0; j < free_rank_; ++j) {
    Int s = 0;
    for (std::size_t k = 0; k < free_rank_; ++k)
      s = checked_add(s, checked_mul(y[rank_ + k], free_map_(k, j)));
    el.free[j] = s;
  }
  for (std::size_t t = 0; t < torsion_index_.size(); ++t)
    el.torsion.push_back(mod_floor(y[torsion_index_[t]], moduli_[t]));
  return el;
}

Element LatticeQuotient::reduce(const IntVector& x) const {
  if (x.size() != ambient_) throw Error(ErrorCode::InvalidArgument, "vector length differs from ambient rank");
  IntVector y(ambient_, 0);
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      y[j] = checked_add(y[j], checked_mul(x[i], smith_.right(i, j)));
  }
  return from_snf(y);
}

IntVector LatticeQuotient::lift(const Element& el) const {
  IntVector y(ambient_, 0);
  for (std::size_t t = 0; t < torsion_index_.size(); ++t) y[torsion_index_[t]] = el.torsion.at(t);
  for (std::size_t k = 0; k < free_rank_; ++k) {
    Int s = 0;
    for (std::size_t j = 0; j < free_rank_; ++j)
      s = checked_add(s, checked_mul(el.free.at(j), free_map_inverse_(j, k)));
    y[rank_ + k] = s;
  }
  IntVector x(ambient_, 0);
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (y[i] == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      x[j] = checked_add(x[j], checked_mul(y[i], smith_.right_inverse(i, j)));
  }
  return x;
}

Element LatticeQuotient::zero() const {
  return Element{IntVector(free_rank_, 0), IntVector(moduli_.size(), 0)};
}

Element LatticeQuotient::add(const Element& a, const Element& b) const {
  Element c{tropjac::add(a.free, b.free), {}};
  for (std::size_t t = 0; t < moduli_.size(); ++t)
    c.torsion.push_back(mod_floor(checked_add(a.torsion[t], b.torsion[t]), moduli_[t]));
  return c;
}

Element LatticeQuotient::sub(const Element& a, const Element& b) const { return add(a, negate(b)); }

Element LatticeQuotient::negate(const Element& a) const { return scale(a, -1); }

Element LatticeQuotient::scale(const Element& a, Int k) const {
  Element c{tropjac::scale(a.free, k), {}};
  for (std::size_t t = 0; t < moduli_.size(); ++t)
    c.torsion.push_back(mod_floor(checked_mul(mod_floor(k, moduli_[t]), a.torsion[t]), moduli_[t]));
  return c;
}

bool LatticeQuotient::is_zero(const Element& a) const {
  return tropjac::is_zero(a.free) && tropjac::is_zero(a.torsion);
}

bool LatticeQuotient::sharp() const { return sharpened_ == nullptr; }

const LatticeQuotient& LatticeQuotient::sharpened() const { return sharpened_ ? *sharpened_ : *this; }

// By Tucker's alternative, e is a unit iff y_e = 0 for every y >= 0 orthogonal
// to the relations. The maximal support of that cone is found by repeatedly
// asking for mass outside the support seen so far; the sum of the witnesses is
// then a positive functional on the sharpened quotient.
void LatticeQuotient::compute_units() {
  const std::size_t n = ambient_;
  std::vector<bool> support(n, false);
  RationalVector total(n, 0);
  for (;;) {
    RationalMatrix a;
    RationalVector b;
    for (const auto& r : relations_) {
      RationalVector row(n + 1, 0);
      for (std::size_t e = 0; e < n; ++e) row[e] = r[e];
      a.push_back(std::move(row));
      b.emplace_back(0);
    }
    RationalVector row(n + 1, 0);
    bool open = false;
    for (std::size_t e = 0; e < n; ++e)
      if (!support[e]) {
        row[e] = 1;
        open = true;
      }
    if (!open) break;
    row[n] = -1;
    a.push_back(std::move(row));
    b.emplace_back(1);
    auto y = simplex_nonnegative(a, b, n + 1);
    if (!y) break;
    for (std::size_t e = 0; e < n; ++e)
      if ((*y)[e] > 0) {
        support[e] = true;
        total[e] += (*y)[e];
      }
  }

  degenerate_.assign(n, false);
  bool nonzero_unit = false;
  for (std::size_t e = 0; e < n; ++e) {
    degenerate_[e] = !support[e];
    if (degenerate_[e] && !is_zero(generators_[e])) nonzero_unit = true;
  }

  if (nonzero_unit) {
    std::vector<IntVector> rels = relations_;
    for (std::size_t e = 0; e < n; ++e)
      if (degenerate_[e]) {
        IntVector u(n, 0);
        u[e] = 1;
        rels.push_back(u);
      }
    sharpened_ = std::make_shared<const LatticeQuotient>(make(n, rels));
    return;
  }

  // integer multiple of total; every supported coordinate becomes >= 1
  using boost::multiprecision::cpp_int;
  cpp_int l = 1;
  for (const auto& v : total) l = boost::multiprecision::lcm(l, cpp_int(denominator(v)));
  for (const auto& v : total) {
    cpp_int k = numerator(v) * (l / denominator(v));
    if (k > std::numeric_limits<Int>::max() || k < std::numeric_limits<Int>::min())
      throw Error(ErrorCode::Overflow, "positive functional");
    functional_.push_back(static_cast<Int>(k));
  }
}

std::optional<Element> divide(const LatticeQuotient& q, const Element& x, Int k) {
  if (k <= 0) throw Error(ErrorCode::InvalidArgument, "divisor must be positive");
  Element y;
  for (Int v : x.free) {
    if (v % k != 0) return std::nullopt;
    y.free.push_back(v / k);
  }
  for (std::size_t t = 0; t < x.torsion.size(); ++t) {
    Int m = q.torsion_moduli()[t];
    ExtGcd e = ext_gcd(mod_floor(k, m), m);
    if (x.torsion[t] % e.g != 0) return std::nullopt;
    Int m2 = m / e.g;
    // (k/g) * e.x = 1 mod m/g
    y.torsion.push_back(mod_floor(checked_mul(x.torsion[t] / e.g, mod_floor(e.x, m2)), m2));
  }
  return y;
}

Element sharpen(const LatticeQuotient& q, const Element& x) {
  if (q.sharp()) return x;
  return q.sharpened().reduce(q.lift(x));
}

std::optional<Int> membership_bound(const LatticeQuotient& q, const Element& x) {
  const LatticeQuotient& s = q.sharpened();
  Element xs = sharpen(q, x);
  if (s.is_zero(xs)) return 0;
  Int w = dot(s.positive_functional(), s.lift(xs));
  if (w <= 0) return std::nullopt;
  return w;
}

namespace {

// Integer points k with base + sum_i k_i rows_i >= 0. The rows span a lattice
// meeting the nonnegative orthant only in 0, so the region is a polytope.
class OrthantSearch {
 public:
  explicit OrthantSearch(std::vector<IntVector> rows) : rows_(std::move(rows)) {}

  bool exists(const IntVector& base) const { return search(0, base); }

 private:
  std::vector<IntVector> rows_;

  std::vector<Constraint> system(std::size_t j, const IntVector& base) const {
    std::vector<Constraint> cs;
    for (std::size_t e = 0; e < base.size(); ++e) {
      Constraint c;
      for (std::size_t i = j; i < rows_.size(); ++i) c.coeffs.push_back(rows_[i][e]);
      c.relation = Relation::Ge;
      c.rhs = -base[e];
      cs.push_back(std::move(c));
    }
    return cs;
  }

  // is there a point with the first free variable >= t (sign 1) or <= t (sign -1)
  bool feasible_beyond(std::size_t j, std::vector<Constraint> cs, Int t, int sign) const {
    Constraint c;
    c.coeffs.assign(rows_.size() - j, 0);
    c.coeffs[0] = sign;
    c.relation = Relation::Ge;
    c.rhs = sign * t;
    cs.push_back(std::move(c));
    return simplex_feasible_point(rows_.size() - j, cs).has_value();
  }

  // largest integer t (times sign) still feasible, starting from a feasible start
  Int extreme(std::size_t j, const std::vector<Constraint>& cs, Int start, int sign) const {
    Int good = start, step = 1;
    for (int guard = 0;; ++guard) {
      if (guard > 62) throw std::logic_error("membership region is unbounded");
      Int probe = checked_add(good, sign * step);
      if (!feasible_beyond(j, cs, probe, sign)) break;
      good = probe;
      step = checked_mul(step, 2);
    }
    // the answer lies strictly before good + sign * step
    Int lo = good, hi = good + sign * step;
    while ((hi - lo) * sign > 1) {
      Int mid = lo + (hi - lo) / 2;
      if (feasible_beyond(j, cs, mid, sign))
        lo = mid;
      else
        hi = mid;
    }
    return lo;
  }

  bool search(std::size_t j, const IntVector& base) const {
    if (j == rows_.size()) return std::all_of(base.begin(), base.end(), [](Int v) { return v >= 0; });
    auto cs = system(j, base);
    auto point = simplex_feasible_point(rows_.size() - j, cs);
    if (!point) return false;
    const Rational& p0 = (*point)[0];
    boost::multiprecision::cpp_int fl = numerator(p0) / denominator(p0);
    if (fl * denominator(p0) > numerator(p0)) --fl;
    Int start = static_cast<Int>(fl);
    // floor(p) may leave the region; any integer in it lies within [min, max] anyway
    Int hi = feasible_beyond(j, cs, start, 1) ? extreme(j, cs, start, 1) : start - 1;
    Int lo = feasible_beyond(j, cs, start, -1) ? extreme(j, cs, start, -1) : start + 1;
    if (lo > hi) {
      // the region sits between two integers in this coordinate
      return false;
    }
    for (Int t = lo; t <= hi; ++t) {
      IntVector next = base;
      for (std::size_t e = 0; e < next.size(); ++e) next[e] = checked_add(next[e], checked_mul(t, rows_[j][e]));
      if (search(j + 1, next)) return true;
    }
    return false;
  }
};

}  // namespace

bool monoid_member(const LatticeQuotient& q, const Element& x) {
  if (q.ambient_rank() > LatticeQuotient::kMaxMembershipAmbient)
    throw Error(ErrorCode::AmbientTooLarge, "membership search limited to 16 generators");
  const LatticeQuotient& s = q.sharpened();
  Element target = sharpen(q, x);
  if (s.is_zero(target)) return true;
  if (!membership_bound(q, x)) return false;

  // representations are n = lift + relation with n >= 0 on the surviving
  // generators; degenerate coordinates are unconstrained
  std::vector<std::size_t> keep;
  for (std::size_t e = 0; e < q.ambient_rank(); ++e)
    if (!q.degenerate()[e]) keep.push_back(e);
  auto project = [&](const IntVector& v) {
    IntVector out;
    for (std::size_t e : keep) out.push_back(v[e]);
    return out;
  };
  std::vector<IntVector> rows;
  for (const auto& r : s.relations()) rows.push_back(project(r));
  HermiteForm h = hermite_normal_form(IntMatrix::from_rows(rows, keep.size()));
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < h.rank; ++i) basis.push_back(h.form.row(i));
  return OrthantSearch(std::move(basis)).exists(project(s.lift(target)));
}

bool leq(const LatticeQuotient& q, const Element& x, const Element& y) {
  return monoid_member(q, q.sub(y, x));
}

MonoidHom MonoidHom::make(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) < 0) throw Error(ErrorCode::InvalidArgument, "generator image outside the target cone");
  return MonoidHom{m.cols(), m.rows(), m};
}

ValuativityReport valuativity_report(const MonoidHom& f) {
  const std::size_t s = f.source_rank;
  RationalMatrix rows = to_rational(f.matrix.row_list());
  ValuativityReport rep;
  for (const auto& v : nullspace(rows, s)) rep.kernel_basis.push_back(primitive_integer(v));
  rep.kernel_dimension = rep.kernel_basis.size();
  if (rep.kernel_dimension == 0) {
    rep.valuative = true;
    return rep;
  }

  // coordinates that are positive somewhere on C = ker f ∩ orthant
  RationalMatrix span_rows = rows;
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<Constraint> cs;
    for (const auto& r : rows) cs.push_back({r, Relation::Eq, 0});
    for (std::size_t j = 0; j < s; ++j) {
      RationalVector c(s, 0);
      c[j] = 1;
      cs.push_back({c, Relation::Ge, j == i ? 1 : 0});
    }
    if (!simplex_feasible_point(s, cs)) {
      RationalVector c(s, 0);
      c[i] = 1;
      span_rows.push_back(c);
    }
  }
  rep.cone_span_dimension = s - rank(span_rows);
  rep.lineality_dimension = 0;  // ker f ∩ orthant ∩ -orthant = 0
  rep.valuative = rep.cone_span_dimension == rep.kernel_dimension &&
                  rep.kernel_dimension - rep.lineality_dimension <= 1;
  return rep;
}

bool is_relatively_valuative(const MonoidHom& f) { return valuativity_report(f).valuative; }

}  // namespace tropjac
