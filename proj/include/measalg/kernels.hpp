#pragma once

#include <optional>

#include "measalg/morphism.hpp"

// Pair-enumeration kernels behind lipschitz_bruteforce. Both enumerate every
// unordered pair {a, b} of distinct elements of the domain's fin ideal and
// return the maximal rho-ratio under the homomorphism. Callers must first
// establish that the homomorphism maps the fin ideal into the fin ideal.
namespace measalg::kernels {

/// Serial reference: evaluates rho through the public algebra API with
/// GMP rationals on every pair.
BruteForceResult pair_sup_reference(const BooleanHom& hom);

/// OpenMP kernel on common-denominator 64-bit integers. Returns nullopt
/// when the scaled measures do not fit, so the caller can fall back.
std::optional<BruteForceResult> pair_sup_parallel(const BooleanHom& hom);

}  // namespace measalg::kernels
