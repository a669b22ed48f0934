#include <bit>
#include <cstdint>
#include <vector>

#include "measalg/kernels.hpp"

namespace measalg::kernels {
namespace {

using i128 = __int128;

constexpr std::int64_t kScaledLimit = std::int64_t{1} << 62;

// Weights of the atoms in `mask` as integers over one common denominator.
struct ScaledWeights {
  mpz_class denominator;
  std::vector<std::int64_t> value;  // indexed by atom, zero outside mask
};

std::optional<ScaledWeights> scale(const FiniteMeasureSpace& space, AtomMask mask) {
  ScaledWeights out{1, std::vector<std::int64_t>(space.num_atoms(), 0)};
  for_each_atom(mask, [&](std::size_t a) {
    mpz_class den = space.weights()[a].value().get_den();
    mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), den.get_mpz_t());
  });
  mpz_class total = 0;
  bool fits = true;
  for_each_atom(mask, [&](std::size_t a) {
    const Rational& w = space.weights()[a].value();
    mpz_class scaled = w.get_num() * (out.denominator / w.get_den());
    total += scaled;
    if (total >= kScaledLimit) {
      fits = false;
      return;
    }
    out.value[a] = scaled.get_si();
  });
  if (!fits) return std::nullopt;
  return out;
}

// Sign of num1/den1 - num2/den2 for positive denominators.
int compare_ratio(std::int64_t num1, std::int64_t den1, std::int64_t num2, std::int64_t den2) {
  const i128 lhs = static_cast<i128>(num1) * den2;
  const i128 rhs = static_cast<i128>(num2) * den1;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

struct Candidate {
  bool valid = false;
  std::int64_t num = 0;  // scaled source-side distance
  std::int64_t den = 1;  // scaled target-side distance
  std::uint64_t b = 0;
  std::uint64_t a = 0;

  // Larger ratio wins; ties go to the earlier (b, a) pair.
  void consider(const Candidate& other) {
    if (!other.valid) return;
    if (!valid) {
      *this = other;
      return;
    }
    const int c = compare_ratio(other.num, other.den, num, den);
    const bool earlier =
        canonical_less(other.b, b) || (other.b == b && canonical_less(other.a, a));
    if (c > 0 || (c == 0 && earlier)) *this = other;
  }
};

struct Best {
  Candidate overall;
  Candidate with_empty;  // pairs whose smaller element is [empty]

  void offer(std::int64_t num, std::int64_t den, std::uint64_t b, std::uint64_t a) {
    const Candidate c{true, num, den, b, a};
    overall.consider(c);
    if (b == 0) with_empty.consider(c);
  }

  void merge(const Best& other) {
    overall.consider(other.overall);
    with_empty.consider(other.with_empty);
  }
};

}  // namespace

std::optional<BruteForceResult> pair_sup_parallel(const BooleanHom& hom) {
  const auto& domain = *hom.domain();
  const auto& codomain = *hom.codomain();

  std::vector<std::size_t> fin_atoms;
  for_each_atom(domain.finite_mask(), [&](std::size_t a) { fin_atoms.push_back(a); });
  const std::size_t n = fin_atoms.size();
  const std::uint64_t count = std::uint64_t{1} << n;

  AtomMask image_support = 0;
  for (auto atom : fin_atoms) image_support |= hom.atom_action()[atom];
  if ((image_support & ~codomain.finite_mask()) != 0) return std::nullopt;

  const auto target = scale(*domain.space(), domain.finite_mask());
  const auto source = scale(*codomain.space(), image_support);
  if (!target || !source) return std::nullopt;

  // Image of every element and target measure of every element.
  std::vector<AtomMask> image(count, 0);
  std::vector<std::int64_t> target_measure(count, 0);
  for (std::uint64_t k = 1; k < count; ++k) {
    const auto low = static_cast<std::size_t>(std::countr_zero(k));
    const std::uint64_t rest = k & (k - 1);
    image[k] = image[rest] | hom.atom_action()[fin_atoms[low]];
    target_measure[k] = target_measure[rest] + target->value[fin_atoms[low]];
  }
  const auto& source_weight = source->value;

  Best global;
#pragma omp parallel
  {
    Best local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t bi = 0; bi < static_cast<std::int64_t>(count); ++bi) {
      const auto b = static_cast<std::uint64_t>(bi);
      for (std::uint64_t a = 0; a < count; ++a) {
        if (!canonical_less(b, a)) continue;
        std::int64_t num = 0;
        for_each_atom(image[a] ^ image[b], [&](std::size_t atom) { num += source_weight[atom]; });
        local.offer(num, target_measure[a ^ b], b, a);
      }
    }
#pragma omp critical(measalg_pair_sup_merge)
    global.merge(local);
  }

  BruteForceResult result{CompressionResult::bounded(0), false, std::nullopt, std::nullopt};
  const Candidate& best = global.overall;
  if (!best.valid) return result;

  auto element = [&](std::uint64_t compact) {
    AtomMask atoms = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (compact & (std::uint64_t{1} << i)) atoms |= atom_bit(fin_atoms[i]);
    }
    return domain.element(atoms);
  };
  // num/den is (rho1 * D1) / (rho2 * D2).
  Rational value(mpz_class(best.num) * target->denominator,
                 mpz_class(best.den) * source->denominator);
  value.canonicalize();
  result.constant = CompressionResult::bounded(value);
  const Candidate& empty = global.with_empty;
  result.attained_at_empty =
      best.num > 0 && empty.valid && compare_ratio(empty.num, empty.den, best.num, best.den) == 0;
  result.witness.emplace(element(best.a), element(best.b));
  return result;
}

}  // namespace measalg::kernels
