#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "measalg/algebra.hpp"
#include "measalg/ext_rational.hpp"
#include "measalg/space.hpp"

namespace measalg {

/// Point map between two finite measure spaces, checked for measurability
/// at construction. Each source atom lands inside exactly one target atom.
class MeasurableMap {
 public:
  /// `point_fn[i]` is the target point index of source point i.
  static MeasurableMap make(SpacePtr source, SpacePtr target, std::vector<std::size_t> point_fn);
  static MeasurableMap make(SpacePtr source, SpacePtr target,
                            const std::unordered_map<std::string, std::string>& fn);

  const SpacePtr& source() const noexcept { return source_; }
  const SpacePtr& target() const noexcept { return target_; }
  const std::vector<std::size_t>& point_fn() const noexcept { return point_fn_; }
  /// Target atom containing the image of each source atom.
  const std::vector<std::size_t>& atom_image() const noexcept { return atom_image_; }
  /// Source atoms whose union is the preimage of each target atom.
  const std::vector<AtomMask>& atom_preimages() const noexcept { return atom_preimages_; }

  /// Preimage of a target measurable set.
  MeasurableSet preimage(const MeasurableSet& target_set) const;

 private:
  MeasurableMap() = default;

  SpacePtr source_;
  SpacePtr target_;
  std::vector<std::size_t> point_fn_;
  std::vector<std::size_t> atom_image_;
  std::vector<AtomMask> atom_preimages_;
};

struct PushforwardMeasure {
  SpacePtr target;
  std::vector<ExtRational> mass;  // per target atom

  ExtRational total() const;
};

PushforwardMeasure pushforward(const MeasurableMap& map);

/// Atomwise absolute continuity: no push-forward mass on a null target atom.
bool is_inverse_nil_preserving(const MeasurableMap& map);
/// Null-ideal form: the preimage of every null target set is null.
/// Enumerates null target sets; falls back to the union of all null atoms
/// when there are more than `enumeration_cap` of them.
bool preimages_of_null_sets_are_null(const MeasurableMap& map, std::size_t enumeration_cap = 16);

struct WellDefinedness {
  bool well_defined = true;
  /// Target sets A, A2 equal modulo null sets with non-null preimage
  /// difference; A is the one later in mask order.
  std::optional<std::pair<MeasurableSet, MeasurableSet>> witness;
};

/// Exhaustive check that A ~ A2 (mod null) implies preimage(A) ~ preimage(A2).
/// BudgetExceeded when the target has more than `max_atoms` atoms.
WellDefinedness check_well_definedness(const MeasurableMap& map, std::size_t max_atoms = 20);

/// Boolean homomorphism from the target algebra to the source algebra,
/// determined by the image of each non-null atom of the domain.
class BooleanHom {
 public:
  /// Unchecked beyond shape: `atom_action` has one entry per domain-space
  /// atom, zero for null atoms, and each value is a codomain element mask.
  /// Test fixtures use this to build deliberately broken homomorphisms.
  static BooleanHom from_atom_action(AlgebraPtr domain, AlgebraPtr codomain,
                                     std::vector<AtomMask> atom_action);

  const AlgebraPtr& domain() const noexcept { return domain_; }
  const AlgebraPtr& codomain() const noexcept { return codomain_; }
  const std::vector<AtomMask>& atom_action() const noexcept { return atom_action_; }

  AlgebraElement apply(const AlgebraElement& elem) const;

 private:
  BooleanHom() = default;

  AlgebraPtr domain_;
  AlgebraPtr codomain_;
  std::vector<AtomMask> atom_action_;
};

/// phi^bullet; NotInverseNilPreserving when the map does not descend.
BooleanHom induced_homomorphism(const MeasurableMap& map);
BooleanHom induced_homomorphism(const MeasurableMap& map, AlgebraPtr target_algebra,
                                AlgebraPtr source_algebra);
AlgebraElement apply_hom(const BooleanHom& hom, const AlgebraElement& elem);

/// Identity homomorphism of an algebra.
BooleanHom identity_hom(const AlgebraPtr& algebra);

/// Infimal constant C with push <= C * mu, or Unbounded.
class CompressionResult {
 public:
  static CompressionResult bounded(Rational value);
  static CompressionResult unbounded();

  bool is_bounded() const noexcept { return bounded_; }
  /// Throws std::logic_error when unbounded.
  const Rational& value() const;
  /// Zero constant: the sup is over an empty or null family.
  bool degenerate() const noexcept { return bounded_ && sgn(value_) == 0; }
  /// "p/q" or "unbounded".
  std::string to_string() const;

  friend bool operator==(const CompressionResult& lhs, const CompressionResult& rhs);

 private:
  bool bounded_ = true;
  Rational value_{0};
};

CompressionResult compression(const MeasurableMap& map);

/// Per-target-atom density of the push-forward w.r.t. the target measure.
std::vector<ExtRational> radon_nikodym(const MeasurableMap& map);

/// Sup of mu1(phi*(a)) / mu2(a) over single atoms of the target fin ideal.
CompressionResult lipschitz_fast(const MeasurableMap& map);

struct BruteForceResult {
  CompressionResult constant;
  /// Some maximizing pair has b = [empty]; false when no positive max exists.
  bool attained_at_empty = false;
  /// First maximizing pair (a, b) with b < a, pairs ordered by (b, a) in
  /// canonical element order.
  std::optional<std::pair<AlgebraElement, AlgebraElement>> witness;
  /// Element of the target fin ideal whose image leaves the source fin ideal.
  std::optional<AlgebraElement> fin_violation;

  friend bool operator==(const BruteForceResult& lhs, const BruteForceResult& rhs);
};

enum class BruteForceStrategy { Auto, Reference, Parallel };

inline constexpr std::size_t kDefaultBudget = 12;

/// Sup of rho1(phi*(a), phi*(b)) / rho2(a, b) over all pairs of distinct
/// target fin-ideal elements, by exhaustive enumeration. BudgetExceeded
/// when the target has more than `budget` non-null atoms.
BruteForceResult lipschitz_bruteforce(const MeasurableMap& map,
                                      std::size_t budget = kDefaultBudget,
                                      BruteForceStrategy strategy = BruteForceStrategy::Auto);

struct LawViolation {
  std::string law;
  std::string witness;
};

struct LawReport {
  std::vector<LawViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Exhaustively checks that the homomorphism preserves zero, unit, joins,
/// meets and complements on its domain algebra.
LawReport check_hom_laws(const BooleanHom& hom, std::size_t max_rank = 12);
/// Additionally checks agreement with preimages under `map` on every
/// target measurable set.
LawReport check_hom_laws(const BooleanHom& hom, const MeasurableMap& map,
                         std::size_t max_rank = 12);

/// "{0,2}"-style rendering of an element's atom indices.
std::string format_atoms(AtomMask atoms);

}  // namespace measalg
