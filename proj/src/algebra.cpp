#include "measalg/algebra.hpp"

#include <bit>
#include <stdexcept>

#include "measalg/errors.hpp"

namespace measalg {
namespace {

void require_same(const AlgebraElement& a, const AlgebraElement& b) {
  if (!same_algebra(*a.algebra(), *b.algebra())) {
    throw Error(ErrorKind::ForeignElement, "operands belong to different algebras");
  }
}

void require_fin(const AlgebraElement& a, const char* what) {
  if (!is_fin(a)) throw Error(ErrorKind::NotInFinIdeal, what);
}

}  // namespace

std::shared_ptr<const MeasureAlgebra> MeasureAlgebra::build(SpacePtr space) {
  auto alg = std::shared_ptr<MeasureAlgebra>(new MeasureAlgebra());
  for (std::size_t a = 0; a < space->num_atoms(); ++a) {
    const auto& w = space->weights()[a];
    if (w.is_zero()) continue;
    alg->nonnull_atoms_.push_back(a);
    alg->nonnull_mask_ |= atom_bit(a);
    if (w.is_finite()) alg->finite_mask_ |= atom_bit(a);
  }
  alg->space_ = std::move(space);
  return alg;
}

AlgebraPtr build_algebra(SpacePtr space) { return MeasureAlgebra::build(std::move(space)); }

AlgebraElement MeasureAlgebra::zero() const { return {shared_from_this(), 0}; }

AlgebraElement MeasureAlgebra::unit() const { return {shared_from_this(), nonnull_mask_}; }

AlgebraElement MeasureAlgebra::element(AtomMask atoms) const {
  return {shared_from_this(), atoms & nonnull_mask_};
}

AlgebraElement MeasureAlgebra::element_from_compact(std::uint64_t compact) const {
  AtomMask atoms = 0;
  for (std::size_t i = 0; i < nonnull_atoms_.size() && compact != 0; ++i, compact >>= 1) {
    if (compact & 1) atoms |= atom_bit(nonnull_atoms_[i]);
  }
  return {shared_from_this(), atoms};
}

std::uint64_t MeasureAlgebra::to_compact(AtomMask atoms) const {
  std::uint64_t compact = 0;
  for (std::size_t i = 0; i < nonnull_atoms_.size(); ++i) {
    if (atoms & atom_bit(nonnull_atoms_[i])) compact |= std::uint64_t{1} << i;
  }
  return compact;
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra, AtomMask atoms)
    : algebra_(std::move(algebra)), atoms_(atoms) {
  if ((atoms_ & ~algebra_->nonnull_mask()) != 0) {
    throw std::invalid_argument("AlgebraElement: representative contains a null atom");
  }
}

bool operator==(const AlgebraElement& lhs, const AlgebraElement& rhs) {
  return lhs.atoms_ == rhs.atoms_ && same_algebra(*lhs.algebra_, *rhs.algebra_);
}

bool same_algebra(const MeasureAlgebra& a, const MeasureAlgebra& b) {
  return &a == &b || same_space(*a.space(), *b.space());
}

bool canonical_less(AtomMask lhs, AtomMask rhs) {
  if (lhs == rhs) return false;
  const auto diff = lhs ^ rhs;
  const int d = std::countr_zero(diff);
  const AtomMask above = d >= 63 ? 0 : (~AtomMask{0} << (d + 1));
  // The list holding d is smaller unless the other list stops before d.
  if (lhs & atom_bit(static_cast<std::size_t>(d))) return (rhs & above) != 0;
  return (lhs & above) == 0;
}

AlgebraElement project(const AlgebraPtr& algebra, const MeasurableSet& set) {
  if (!same_space(*algebra->space(), *set.space())) {
    throw Error(ErrorKind::ForeignSet, "set belongs to a different space");
  }
  return algebra->element(set.atoms());
}

ExtRational mu_bar(const AlgebraElement& elem) {
  return atom_measure(*elem.algebra()->space(), elem.atoms());
}

AlgebraElement elem_meet(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b);
  return {a.algebra(), a.atoms() & b.atoms()};
}

AlgebraElement elem_join(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b);
  return {a.algebra(), a.atoms() | b.atoms()};
}

AlgebraElement elem_complement(const AlgebraElement& a) {
  return {a.algebra(), a.algebra()->nonnull_mask() & ~a.atoms()};
}

AlgebraElement elem_symmdiff(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b);
  return {a.algebra(), a.atoms() ^ b.atoms()};
}

bool is_fin(const AlgebraElement& elem) {
  return (elem.atoms() & ~elem.algebra()->finite_mask()) == 0;
}

Rational rho(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b);
  require_fin(a, "rho: first argument");
  require_fin(b, "rho: second argument");
  return mu_bar(elem_symmdiff(a, b)).value();
}

Rational rho_c(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c) {
  require_same(a, b);
  require_same(a, c);
  require_fin(c, "rho_c: localizing element");
  return mu_bar(elem_meet(elem_symmdiff(a, b), c)).value();
}

L1Function::L1Function(AlgebraPtr algebra, std::vector<Rational> coefficients)
    : algebra_(std::move(algebra)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != algebra_->rank()) {
    throw Error(ErrorKind::ArityMismatch, "L1Function coefficient count");
  }
}

L1Function operator*(const Rational& scalar, const L1Function& f) {
  std::vector<Rational> scaled;
  scaled.reserve(f.coefficients_.size());
  for (const auto& c : f.coefficients_) scaled.emplace_back(scalar * c);
  return {f.algebra_, std::move(scaled)};
}

bool operator==(const L1Function& lhs, const L1Function& rhs) {
  return same_algebra(*lhs.algebra_, *rhs.algebra_) && lhs.coefficients_ == rhs.coefficients_;
}

L1Function chi_embed(const AlgebraElement& elem) {
  require_fin(elem, "chi_embed");
  const auto& alg = elem.algebra();
  std::vector<Rational> coeffs;
  coeffs.reserve(alg->rank());
  for (auto atom : alg->nonnull_atoms()) {
    coeffs.emplace_back((elem.atoms() & atom_bit(atom)) ? 1 : 0);
  }
  return {alg, std::move(coeffs)};
}

ExtRational l1_distance(const L1Function& f, const L1Function& g) {
  if (!same_algebra(*f.algebra(), *g.algebra())) {
    throw Error(ErrorKind::ForeignFunction, "functions live on different spaces");
  }
  const auto& alg = *f.algebra();
  ExtRational total;
  for (std::size_t i = 0; i < alg.rank(); ++i) {
    const Rational diff = abs(f.coefficients()[i] - g.coefficients()[i]);
    total += ExtRational(diff) * alg.space()->weights()[alg.nonnull_atoms()[i]];
  }
  return total;
}

}  // namespace measalg
