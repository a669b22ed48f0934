#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "measalg/ext_rational.hpp"
#include "measalg/space.hpp"

namespace measalg {

class AlgebraElement;

/// Measure algebra of a finite space: sets modulo null sets. Each class is
/// represented by its non-null atoms, so equality is a mask comparison.
class MeasureAlgebra : public std::enable_shared_from_this<MeasureAlgebra> {
 public:
  static std::shared_ptr<const MeasureAlgebra> build(SpacePtr space);

  const SpacePtr& space() const noexcept { return space_; }
  /// Non-null atoms in canonical order.
  const std::vector<std::size_t>& nonnull_atoms() const noexcept { return nonnull_atoms_; }
  AtomMask nonnull_mask() const noexcept { return nonnull_mask_; }
  /// Non-null atoms of finite weight; generators of the fin ideal.
  AtomMask finite_mask() const noexcept { return finite_mask_; }

  std::size_t rank() const noexcept { return nonnull_atoms_.size(); }
  /// 2^rank; only meaningful for rank < 64.
  std::uint64_t element_count() const noexcept { return std::uint64_t{1} << rank(); }

  AlgebraElement zero() const;
  AlgebraElement unit() const;
  /// Element from a space-level atom mask; null atoms are dropped.
  AlgebraElement element(AtomMask atoms) const;
  /// Element whose bit i selects nonnull_atoms()[i].
  AlgebraElement element_from_compact(std::uint64_t compact) const;
  /// Inverse of element_from_compact for masks over `nonnull_atoms()`.
  std::uint64_t to_compact(AtomMask atoms) const;

 private:
  MeasureAlgebra() = default;

  SpacePtr space_;
  std::vector<std::size_t> nonnull_atoms_;
  AtomMask nonnull_mask_ = 0;
  AtomMask finite_mask_ = 0;
};

using AlgebraPtr = std::shared_ptr<const MeasureAlgebra>;

AlgebraPtr build_algebra(SpacePtr space);

class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr algebra, AtomMask atoms);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  /// Canonical representative: a subset of the algebra's non-null atoms.
  AtomMask atoms() const noexcept { return atoms_; }
  bool is_zero() const noexcept { return atoms_ == 0; }

  friend bool operator==(const AlgebraElement& lhs, const AlgebraElement& rhs);

 private:
  AlgebraPtr algebra_;
  AtomMask atoms_;
};

bool same_algebra(const MeasureAlgebra& a, const MeasureAlgebra& b);

/// Lexicographic order on the sorted atom-index lists of two masks.
bool canonical_less(AtomMask lhs, AtomMask rhs);

AlgebraElement project(const AlgebraPtr& algebra, const MeasurableSet& set);
ExtRational mu_bar(const AlgebraElement& elem);

AlgebraElement elem_meet(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement elem_join(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement elem_complement(const AlgebraElement& a);
AlgebraElement elem_symmdiff(const AlgebraElement& a, const AlgebraElement& b);

bool is_fin(const AlgebraElement& elem);

/// mu_bar(a xor b); NotInFinIdeal unless both arguments have finite measure.
Rational rho(const AlgebraElement& a, const AlgebraElement& b);
/// mu_bar((a xor b) and c); a pseudometric for each fixed c in the fin ideal.
Rational rho_c(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c);

/// Atom-constant function, defined up to null sets: one coefficient per
/// non-null atom of `space`, in canonical order.
class L1Function {
 public:
  L1Function(AlgebraPtr algebra, std::vector<Rational> coefficients);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }

  friend L1Function operator*(const Rational& scalar, const L1Function& f);
  friend bool operator==(const L1Function& lhs, const L1Function& rhs);

 private:
  AlgebraPtr algebra_;
  std::vector<Rational> coefficients_;
};

/// Indicator function of the element; NotInFinIdeal outside the fin ideal.
L1Function chi_embed(const AlgebraElement& elem);
/// Sum over non-null atoms of |f - g| * weight.
ExtRational l1_distance(const L1Function& f, const L1Function& g);

}  // namespace measalg
