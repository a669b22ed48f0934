#include "measalg/morphism.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "measalg/errors.hpp"
#include "measalg/kernels.hpp"

namespace measalg {

// --- MeasurableMap ---------------------------------------------------------

MeasurableMap MeasurableMap::make(SpacePtr source, SpacePtr target,
                                  std::vector<std::size_t> point_fn) {
  if (point_fn.size() != source->num_points()) {
    throw Error(ErrorKind::ArityMismatch, "point function covers " +
                                              std::to_string(point_fn.size()) + " of " +
                                              std::to_string(source->num_points()) + " points");
  }
  for (auto p : point_fn) {
    if (p >= target->num_points()) {
      throw Error(ErrorKind::UnknownPoint, "target point index " + std::to_string(p));
    }
  }

  MeasurableMap map;
  map.atom_image_.resize(source->num_atoms());
  map.atom_preimages_.assign(target->num_atoms(), 0);
  for (std::size_t a = 0; a < source->num_atoms(); ++a) {
    const auto& members = source->atoms()[a];
    const auto image = target->atom_of_point(point_fn[members.front()]);
    for (auto p : members) {
      const auto other = target->atom_of_point(point_fn[p]);
      if (other != image) {
        throw Error(ErrorKind::NotMeasurable,
                    "source atom " + std::to_string(a) + " splits: " +
                        source->points()[members.front()] + " lands in target atom " +
                        std::to_string(image) + ", " + source->points()[p] + " in " +
                        std::to_string(other));
      }
    }
    map.atom_image_[a] = image;
    map.atom_preimages_[image] |= atom_bit(a);
  }
  map.source_ = std::move(source);
  map.target_ = std::move(target);
  map.point_fn_ = std::move(point_fn);
  return map;
}

MeasurableMap MeasurableMap::make(SpacePtr source, SpacePtr target,
                                  const std::unordered_map<std::string, std::string>& fn) {
  for (const auto& [from, to] : fn) {
    if (!source->point_index(from)) throw Error(ErrorKind::UnknownPoint, from);
    if (!target->point_index(to)) throw Error(ErrorKind::UnknownPoint, to);
  }
  std::vector<std::size_t> point_fn;
  point_fn.reserve(source->num_points());
  for (const auto& label : source->points()) {
    const auto it = fn.find(label);
    if (it == fn.end()) {
      throw Error(ErrorKind::ArityMismatch, "point function undefined at " + label);
    }
    point_fn.push_back(*target->point_index(it->second));
  }
  return make(std::move(source), std::move(target), std::move(point_fn));
}

MeasurableSet MeasurableMap::preimage(const MeasurableSet& target_set) const {
  if (!same_space(*target_, *target_set.space())) {
    throw Error(ErrorKind::ForeignSet, "preimage of a set outside the target");
  }
  AtomMask out = 0;
  for_each_atom(target_set.atoms(), [&](std::size_t b) { out |= atom_preimages_[b]; });
  return {source_, out};
}

// --- pushforward and absolute continuity ----------------------------------

ExtRational PushforwardMeasure::total() const {
  ExtRational sum;
  for (const auto& m : mass) sum += m;
  return sum;
}

PushforwardMeasure pushforward(const MeasurableMap& map) {
  PushforwardMeasure out{map.target(), {}};
  out.mass.reserve(map.target()->num_atoms());
  for (auto pre : map.atom_preimages()) out.mass.push_back(atom_measure(*map.source(), pre));
  return out;
}

bool is_inverse_nil_preserving(const MeasurableMap& map) {
  const auto push = pushforward(map);
  const auto& weights = map.target()->weights();
  for (std::size_t b = 0; b < weights.size(); ++b) {
    if (weights[b].is_zero() && !push.mass[b].is_zero()) return false;
  }
  return true;
}

bool preimages_of_null_sets_are_null(const MeasurableMap& map, std::size_t enumeration_cap) {
  const auto& source = *map.source();
  const AtomMask nulls = map.target()->null_atoms();
  auto preimage_null = [&](AtomMask target_atoms) {
    return is_null(source, map.preimage(MeasurableSet(map.target(), target_atoms)));
  };
  if (static_cast<std::size_t>(std::popcount(nulls)) > enumeration_cap) {
    return preimage_null(nulls);
  }
  AtomMask sub = 0;
  do {
    if (!preimage_null(sub)) return false;
    sub = (sub - nulls) & nulls;
  } while (sub != 0);
  return true;
}

WellDefinedness check_well_definedness(const MeasurableMap& map, std::size_t max_atoms) {
  const auto& target = map.target();
  const std::size_t m = target->num_atoms();
  if (m > max_atoms) {
    throw Error(ErrorKind::BudgetExceeded, "well-definedness check over " + std::to_string(m) +
                                               " target atoms (limit " +
                                               std::to_string(max_atoms) + ")");
  }
  const AtomMask nulls = target->null_atoms();
  WellDefinedness out;
  if (nulls == 0) return out;
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t a = 0; a < count; ++a) {
    const MeasurableSet first(target, a);
    const MeasurableSet pre_first = map.preimage(first);
    for (AtomMask n = nulls; n != 0; n = (n - 1) & nulls) {
      const MeasurableSet second(target, a ^ n);
      const auto diff = set_symmetric_difference(pre_first, map.preimage(second));
      if (!is_null(*map.source(), diff)) {
        out.well_defined = false;
        if (first.atoms() > second.atoms()) {
          out.witness.emplace(first, second);
        } else {
          out.witness.emplace(second, first);
        }
        return out;
      }
    }
  }
  return out;
}

// --- induced homomorphism ---------------------------------------------------

BooleanHom BooleanHom::from_atom_action(AlgebraPtr domain, AlgebraPtr codomain,
                                        std::vector<AtomMask> atom_action) {
  if (atom_action.size() != domain->space()->num_atoms()) {
    throw std::invalid_argument("BooleanHom: one action entry per domain atom required");
  }
  for (std::size_t b = 0; b < atom_action.size(); ++b) {
    if ((atom_action[b] & ~codomain->nonnull_mask()) != 0) {
      throw std::invalid_argument("BooleanHom: image contains a null codomain atom");
    }
    if ((domain->nonnull_mask() & atom_bit(b)) == 0 && atom_action[b] != 0) {
      throw std::invalid_argument("BooleanHom: null domain atom with non-zero image");
    }
  }
  BooleanHom hom;
  hom.domain_ = std::move(domain);
  hom.codomain_ = std::move(codomain);
  hom.atom_action_ = std::move(atom_action);
  return hom;
}

AlgebraElement BooleanHom::apply(const AlgebraElement& elem) const {
  if (!same_algebra(*elem.algebra(), *domain_)) {
    throw Error(ErrorKind::ForeignElement, "element outside the homomorphism's domain");
  }
  AtomMask out = 0;
  for_each_atom(elem.atoms(), [&](std::size_t b) { out |= atom_action_[b]; });
  return {codomain_, out};
}

BooleanHom induced_homomorphism(const MeasurableMap& map) {
  return induced_homomorphism(map, build_algebra(map.target()), build_algebra(map.source()));
}

BooleanHom induced_homomorphism(const MeasurableMap& map, AlgebraPtr target_algebra,
                                AlgebraPtr source_algebra) {
  if (!same_space(*target_algebra->space(), *map.target()) ||
      !same_space(*source_algebra->space(), *map.source())) {
    throw Error(ErrorKind::SpaceMismatch, "algebras do not belong to the map's spaces");
  }
  if (!preimages_of_null_sets_are_null(map)) {
    throw Error(ErrorKind::NotInverseNilPreserving,
                "a null target set has a non-null preimage");
  }
  std::vector<AtomMask> action(map.target()->num_atoms(), 0);
  for_each_atom(target_algebra->nonnull_mask(), [&](std::size_t b) {
    action[b] = source_algebra->element(map.atom_preimages()[b]).atoms();
  });
  return BooleanHom::from_atom_action(std::move(target_algebra), std::move(source_algebra),
                                      std::move(action));
}

AlgebraElement apply_hom(const BooleanHom& hom, const AlgebraElement& elem) {
  return hom.apply(elem);
}

BooleanHom identity_hom(const AlgebraPtr& algebra) {
  std::vector<AtomMask> action(algebra->space()->num_atoms(), 0);
  for_each_atom(algebra->nonnull_mask(), [&](std::size_t b) { action[b] = atom_bit(b); });
  return BooleanHom::from_atom_action(algebra, algebra, std::move(action));
}

// --- compression -------------------------------------------------------------

CompressionResult CompressionResult::bounded(Rational value) {
  value.canonicalize();
  if (sgn(value) < 0) throw std::invalid_argument("negative compression constant");
  CompressionResult r;
  r.value_ = std::move(value);
  return r;
}

CompressionResult CompressionResult::unbounded() {
  CompressionResult r;
  r.bounded_ = false;
  return r;
}

const Rational& CompressionResult::value() const {
  if (!bounded_) throw std::logic_error("CompressionResult::value() on Unbounded");
  return value_;
}

std::string CompressionResult::to_string() const {
  return bounded_ ? rational_to_string(value_) : std::string("unbounded");
}

bool operator==(const CompressionResult& lhs, const CompressionResult& rhs) {
  if (lhs.bounded_ != rhs.bounded_) return false;
  return !lhs.bounded_ || lhs.value_ == rhs.value_;
}

CompressionResult compression(const MeasurableMap& map) {
  const auto push = pushforward(map);
  const auto& weights = map.target()->weights();
  Rational best = 0;
  for (std::size_t b = 0; b < weights.size(); ++b) {
    const auto& mass = push.mass[b];
    const auto& mu = weights[b];
    if (mass.is_zero() || mu.is_infinite()) continue;
    if (mu.is_zero() || mass.is_infinite()) return CompressionResult::unbounded();
    const Rational ratio = mass.value() / mu.value();
    if (ratio > best) best = ratio;
  }
  return CompressionResult::bounded(best);
}

std::vector<ExtRational> radon_nikodym(const MeasurableMap& map) {
  if (!is_inverse_nil_preserving(map)) {
    throw Error(ErrorKind::NotInverseNilPreserving, "density undefined");
  }
  const auto push = pushforward(map);
  const auto& weights = map.target()->weights();
  std::vector<ExtRational> density;
  density.reserve(weights.size());
  for (std::size_t b = 0; b < weights.size(); ++b) {
    const auto& mass = push.mass[b];
    const auto& mu = weights[b];
    if (mass.is_zero()) {
      density.emplace_back(0);
    } else if (mu.is_infinite()) {
      density.push_back(mass.is_infinite() ? ExtRational::infinity() : ExtRational(0));
    } else {
      density.push_back(divide(mass, mu));
    }
  }
  return density;
}

CompressionResult lipschitz_fast(const MeasurableMap& map) {
  std::optional<BooleanHom> hom;
  try {
    hom.emplace(induced_homomorphism(map));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotInverseNilPreserving) throw;
    return CompressionResult::unbounded();
  }
  const auto& domain = hom->domain();
  Rational best = 0;
  bool escapes = false;
  // A non-zero fin element is a join of finite atoms, and a ratio of sums
  // never exceeds the largest termwise ratio, so single atoms suffice.
  for_each_atom(domain->finite_mask(), [&](std::size_t b) {
    if (escapes) return;
    const AlgebraElement atom = domain->element(atom_bit(b));
    const ExtRational image_measure = mu_bar(hom->apply(atom));
    if (image_measure.is_infinite()) {
      escapes = true;
      return;
    }
    const Rational ratio = image_measure.value() / mu_bar(atom).value();
    if (ratio > best) best = ratio;
  });
  if (escapes) return CompressionResult::unbounded();
  return CompressionResult::bounded(best);
}

bool operator==(const BruteForceResult& lhs, const BruteForceResult& rhs) {
  return lhs.constant == rhs.constant && lhs.attained_at_empty == rhs.attained_at_empty &&
         lhs.witness == rhs.witness && lhs.fin_violation == rhs.fin_violation;
}

BruteForceResult lipschitz_bruteforce(const MeasurableMap& map, std::size_t budget,
                                      BruteForceStrategy strategy) {
  const auto target_algebra = build_algebra(map.target());
  if (target_algebra->rank() > budget) {
    throw Error(ErrorKind::BudgetExceeded,
                std::to_string(target_algebra->rank()) + " non-null target atoms (budget " +
                    std::to_string(budget) + ")");
  }
  BruteForceResult unbounded{CompressionResult::unbounded(), false, std::nullopt, std::nullopt};

  std::optional<BooleanHom> hom;
  try {
    hom.emplace(induced_homomorphism(map, target_algebra, build_algebra(map.source())));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotInverseNilPreserving) throw;
    return unbounded;
  }

  // The sup is only over the fin ideal, and only makes sense if the images
  // stay there.
  std::vector<std::size_t> fin_atoms;
  for_each_atom(target_algebra->finite_mask(), [&](std::size_t a) { fin_atoms.push_back(a); });
  const std::uint64_t count = std::uint64_t{1} << fin_atoms.size();
  std::optional<AtomMask> first_escape;
  for (std::uint64_t k = 0; k < count; ++k) {
    AtomMask atoms = 0;
    for (std::size_t i = 0; i < fin_atoms.size(); ++i) {
      if (k & (std::uint64_t{1} << i)) atoms |= atom_bit(fin_atoms[i]);
    }
    if (!is_fin(hom->apply(target_algebra->element(atoms))) &&
        (!first_escape || canonical_less(atoms, *first_escape))) {
      first_escape = atoms;
    }
  }
  if (first_escape) {
    unbounded.fin_violation = target_algebra->element(*first_escape);
    return unbounded;
  }

  if (strategy != BruteForceStrategy::Reference) {
    if (auto fast = kernels::pair_sup_parallel(*hom)) return *fast;
  }
  // Reference requested, or the scaled integers did not fit.
  return kernels::pair_sup_reference(*hom);
}

// --- law checks --------------------------------------------------------------

std::string format_atoms(AtomMask atoms) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each_atom(atoms, [&](std::size_t a) {
    if (!first) os << ',';
    os << a;
    first = false;
  });
  os << '}';
  return os.str();
}

namespace {

class LawCollector {
 public:
  explicit LawCollector(LawReport& report) : report_(report) {}

  // Records only the first witness per law.
  void fail(const std::string& law, const std::string& witness) {
    for (const auto& v : report_.violations) {
      if (v.law == law) return;
    }
    report_.violations.push_back({law, witness});
  }

 private:
  LawReport& report_;
};

}  // namespace

LawReport check_hom_laws(const BooleanHom& hom, std::size_t max_rank) {
  const auto& domain = *hom.domain();
  const auto& codomain = *hom.codomain();
  if (domain.rank() > max_rank) {
    throw Error(ErrorKind::BudgetExceeded, "law check over rank " + std::to_string(domain.rank()));
  }
  LawReport report;
  LawCollector laws(report);

  if (!hom.apply(domain.zero()).is_zero()) laws.fail("zero", "a=[empty]");
  if (hom.apply(domain.unit()) != codomain.unit()) {
    laws.fail("unit", "a=" + format_atoms(domain.unit().atoms()));
  }
  const std::uint64_t count = domain.element_count();
  std::vector<AlgebraElement> elems;
  std::vector<AlgebraElement> images;
  elems.reserve(count);
  images.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    elems.push_back(domain.element_from_compact(k));
    images.push_back(hom.apply(elems.back()));
  }
  for (std::uint64_t i = 0; i < count; ++i) {
    if (hom.apply(elem_complement(elems[i])) != elem_complement(images[i])) {
      laws.fail("complement", "a=" + format_atoms(elems[i].atoms()));
    }
    for (std::uint64_t j = 0; j < count; ++j) {
      const std::string witness =
          "a=" + format_atoms(elems[i].atoms()) + " b=" + format_atoms(elems[j].atoms());
      if (hom.apply(elem_join(elems[i], elems[j])) != elem_join(images[i], images[j])) {
        laws.fail("join", witness);
      }
      if (hom.apply(elem_meet(elems[i], elems[j])) != elem_meet(images[i], images[j])) {
        laws.fail("meet", witness);
      }
    }
  }
  return report;
}

LawReport check_hom_laws(const BooleanHom& hom, const MeasurableMap& map, std::size_t max_rank) {
  LawReport report = check_hom_laws(hom, max_rank);
  const auto& target = map.target();
  if (target->num_atoms() > max_rank + 8) {
    throw Error(ErrorKind::BudgetExceeded, "preimage law over " +
                                               std::to_string(target->num_atoms()) + " atoms");
  }
  const std::uint64_t count = std::uint64_t{1} << target->num_atoms();
  for (std::uint64_t k = 0; k < count; ++k) {
    const MeasurableSet set(target, k);
    const auto expected = project(hom.codomain(), map.preimage(set));
    if (hom.apply(project(hom.domain(), set)) != expected) {
      LawCollector(report).fail("preimage", "A=" + format_atoms(k));
      break;
    }
  }
  return report;
}

}  // namespace measalg
