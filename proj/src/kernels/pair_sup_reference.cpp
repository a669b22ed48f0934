#include <bit>
#include <cstdint>
#include <vector>

#include "measalg/kernels.hpp"

namespace measalg::kernels {

BruteForceResult pair_sup_reference(const BooleanHom& hom) {
  const auto& domain = hom.domain();
  std::vector<std::size_t> fin_atoms;
  for_each_atom(domain->finite_mask(), [&](std::size_t a) { fin_atoms.push_back(a); });
  const std::uint64_t count = std::uint64_t{1} << fin_atoms.size();

  auto element = [&](std::uint64_t compact) {
    AtomMask atoms = 0;
    for (std::size_t i = 0; i < fin_atoms.size(); ++i) {
      if (compact & (std::uint64_t{1} << i)) atoms |= atom_bit(fin_atoms[i]);
    }
    return domain->element(atoms);
  };

  bool have_best = false;
  Rational best;
  Rational best_empty = -1;
  std::uint64_t best_b = 0;
  std::uint64_t best_a = 0;

  for (std::uint64_t b = 0; b < count; ++b) {
    const AlgebraElement eb = element(b);
    const AlgebraElement img_b = apply_hom(hom, eb);
    for (std::uint64_t a = 0; a < count; ++a) {
      if (!canonical_less(b, a)) continue;
      const AlgebraElement ea = element(a);
      const Rational ratio = rho(apply_hom(hom, ea), img_b) / rho(ea, eb);
      if (b == 0 && ratio > best_empty) best_empty = ratio;
      const bool earlier = canonical_less(b, best_b) || (b == best_b && canonical_less(a, best_a));
      if (!have_best || ratio > best || (ratio == best && earlier)) {
        have_best = true;
        best = ratio;
        best_b = b;
        best_a = a;
      }
    }
  }

  BruteForceResult result{CompressionResult::bounded(0), false, std::nullopt, std::nullopt};
  if (!have_best) return result;
  result.constant = CompressionResult::bounded(best);
  result.attained_at_empty = sgn(best) > 0 && best_empty == best;
  result.witness.emplace(element(best_a), element(best_b));
  return result;
}

}  // namespace measalg::kernels
