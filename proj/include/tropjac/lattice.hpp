#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tropjac/matrix.hpp"

namespace tropjac {

// Canonical coordinates of a class in Z^E / K: free part, then torsion
// coordinates each reduced into [0, modulus).
struct Element {
  IntVector free;
  IntVector torsion;
  auto operator<=>(const Element&) const = default;
};

class LatticeQuotient {
 public:
  static constexpr int kMaxMembershipAmbient = 16;

  // Z^ambient modulo the span of the relation vectors.
  static LatticeQuotient make(std::size_t ambient, const std::vector<IntVector>& relations);

  std::size_t ambient_rank() const { return ambient_; }
  // Hermite basis of the relation lattice (nonzero rows only)
  const std::vector<IntVector>& relations() const { return relations_; }
  const IntVector& snf_diagonal() const { return diagonal_; }
  const SmithForm& smith() const { return smith_; }
  std::size_t free_rank() const { return free_rank_; }
  const IntVector& torsion_moduli() const { return moduli_; }

  Element reduce(const IntVector& x) const;
  Element generator(std::size_t e) const { return generators_.at(e); }
  const std::vector<Element>& generators() const { return generators_; }
  // some ambient vector whose class is x
  IntVector lift(const Element& x) const;

  Element zero() const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element scale(const Element& a, Int k) const;
  bool is_zero(const Element& a) const;

  // generators that are units of the image monoid (zero after sharpening)
  const std::vector<bool>& degenerate() const { return degenerate_; }
  bool sharp() const;
  // quotient by the unit group; *this when already sharp
  const LatticeQuotient& sharpened() const;
  // ambient integer functional vanishing on the relations and >= 1 on every
  // non-degenerate coordinate; sharp quotients only
  const IntVector& positive_functional() const { return functional_; }

 private:
  std::size_t ambient_ = 0;
  std::vector<IntVector> relations_;
  SmithForm smith_;
  IntVector diagonal_;
  std::size_t rank_ = 0;
  std::size_t free_rank_ = 0;
  IntVector moduli_;
  std::vector<std::size_t> torsion_index_;  // SNF positions with modulus > 1
  IntMatrix free_map_;                      // y_free -> canonical free coordinates
  IntMatrix free_map_inverse_;
  std::vector<Element> generators_;
  std::vector<bool> degenerate_;
  IntVector functional_;
  std::shared_ptr<const LatticeQuotient> sharpened_;

  Element from_snf(const IntVector& y) const;
  void compute_units();
};

// true iff x = sum n_e * generator(e) with n_e >= 0
bool monoid_member(const LatticeQuotient& q, const Element& x);
bool leq(const LatticeQuotient& q, const Element& x, const Element& y);
// Certified bound on sum n_e for any representation of x in the sharpened
// quotient; nullopt when x is certainly not a member.
std::optional<Int> membership_bound(const LatticeQuotient& q, const Element& x);
// some y with k * y = x, if one exists
std::optional<Element> divide(const LatticeQuotient& q, const Element& x, Int k);
// x mapped into the sharpened quotient
Element sharpen(const LatticeQuotient& q, const Element& x);

struct MonoidHom {
  std::size_t source_rank = 0;
  std::size_t target_rank = 0;
  IntMatrix matrix;  // target_rank x source_rank

  static MonoidHom make(const IntMatrix& m);
};

struct ValuativityReport {
  bool valuative = false;
  std::vector<IntVector> kernel_basis;
  std::size_t kernel_dimension = 0;
  std::size_t cone_span_dimension = 0;
  std::size_t lineality_dimension = 0;
};

ValuativityReport valuativity_report(const MonoidHom& f);
bool is_relatively_valuative(const MonoidHom& f);

}  // namespace tropjac
