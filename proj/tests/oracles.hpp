#pragma once

// Independent test-only oracles. They work on measurable sets of the
// original spaces (never on algebra elements or atom densities), so they
// share no code path with the implementations they check.

#include <cstdint>

#include "measalg/morphism.hpp"

namespace oracles {

using namespace measalg;

/// Point-by-point preimage measure of a target set given by an atom mask.
inline ExtRational preimage_measure(const MeasurableMap& map, AtomMask target_atoms) {
  const auto& src = *map.source();
  const auto& tgt = *map.target();
  std::vector<bool> hit(src.num_atoms(), false);
  for (std::size_t p = 0; p < src.num_points(); ++p) {
    if (target_atoms & atom_bit(tgt.atom_of_point(map.point_fn()[p]))) {
      hit[src.atom_of_point(p)] = true;
    }
  }
  ExtRational total;
  for (std::size_t a = 0; a < hit.size(); ++a) {
    if (hit[a]) total += src.weights()[a];
  }
  return total;
}

inline ExtRational set_measure(const FiniteMeasureSpace& space, AtomMask atoms) {
  ExtRational total;
  for (std::size_t a = 0; a < space.num_atoms(); ++a) {
    if (atoms & atom_bit(a)) total += space.weights()[a];
  }
  return total;
}

/// Infimal C with push(A) <= C mu(A) over every target measurable set A.
inline CompressionResult compression_by_sets(const MeasurableMap& map) {
  const auto& tgt = *map.target();
  Rational best = 0;
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << tgt.num_atoms()); ++set) {
    const ExtRational push = preimage_measure(map, set);
    const ExtRational mu = set_measure(tgt, set);
    if (push.is_zero() || mu.is_infinite()) continue;
    if (mu.is_zero() || push.is_infinite()) return CompressionResult::unbounded();
    const Rational ratio = push.value() / mu.value();
    if (ratio > best) best = ratio;
  }
  return CompressionResult::bounded(best);
}

/// Sup over target sets A, B with mu(A xor B) finite of
/// mu1(preimage A xor preimage B) / mu2(A xor B), computed from preimages
/// of both sets separately.
inline CompressionResult lipschitz_by_set_pairs(const MeasurableMap& map) {
  const auto& src = *map.source();
  const auto& tgt = *map.target();
  const std::uint64_t count = std::uint64_t{1} << tgt.num_atoms();
  auto preimage_atoms = [&](std::uint64_t set) {
    AtomMask out = 0;
    for (std::size_t p = 0; p < src.num_points(); ++p) {
      if (set & atom_bit(tgt.atom_of_point(map.point_fn()[p]))) out |= atom_bit(src.atom_of_point(p));
    }
    return out;
  };
  Rational best = 0;
  for (std::uint64_t a = 0; a < count; ++a) {
    for (std::uint64_t b = 0; b < count; ++b) {
      const ExtRational den = set_measure(tgt, a ^ b);
      if (den.is_infinite()) continue;
      const ExtRational num = set_measure(src, preimage_atoms(a) ^ preimage_atoms(b));
      if (num.is_zero()) continue;
      if (den.is_zero() || num.is_infinite()) return CompressionResult::unbounded();
      const Rational ratio = num.value() / den.value();
      if (ratio > best) best = ratio;
    }
  }
  return CompressionResult::bounded(best);
}

}  // namespace oracles
