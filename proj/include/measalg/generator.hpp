#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include "measalg/morphism.hpp"

namespace measalg {

/// Seeded source of integers, reproducible across platforms: mt19937_64
/// seeded through std::seed_seq (both fully specified by the standard),
/// with bounded draws by rejection sampling instead of the
/// implementation-defined std distributions.
class InstanceRng {
 public:
  /// Stream `stream` of the generator keyed by `seed`; streams are
  /// independent, so trial i can be generated without trials 0..i-1.
  explicit InstanceRng(std::uint64_t seed, std::uint64_t stream = 0);

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  /// True with probability percent / 100.
  bool percent(unsigned percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

struct GeneratorConfig {
  std::size_t min_atoms = 1;
  std::size_t max_atoms = 8;
  std::size_t max_points_per_atom = 2;
  std::uint64_t max_numerator = 16;    // p in [0, max_numerator]
  std::uint64_t max_denominator = 16;  // q in [1, max_denominator]
  unsigned null_percent = 10;
  unsigned infinite_percent = 5;
};

/// Random space with labels "<prefix>0", "<prefix>1", ...
SpacePtr random_space(InstanceRng& rng, const GeneratorConfig& config, const std::string& prefix);

/// Random measurable map: each source atom picks a target atom, then each
/// of its points picks a point of that atom.
MeasurableMap random_map(InstanceRng& rng, const SpacePtr& source, const SpacePtr& target);

/// Random map between two fresh random spaces. With `force_null_target`
/// at least one target atom has weight zero.
MeasurableMap random_instance(InstanceRng& rng, const GeneratorConfig& config,
                              bool force_null_target = false);

/// f: X1 -> X2 and g: X2 -> X3 over fresh random spaces.
std::pair<MeasurableMap, MeasurableMap> random_composable_pair(InstanceRng& rng,
                                                               const GeneratorConfig& config);

}  // namespace measalg
