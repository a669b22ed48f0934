#include "measalg/generator.hpp"

#include <limits>

namespace measalg {

InstanceRng::InstanceRng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

std::uint64_t InstanceRng::below(std::uint64_t bound) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - kMax % bound;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return draw % bound;
}

SpacePtr random_space(InstanceRng& rng, const GeneratorConfig& config, const std::string& prefix) {
  const auto atom_count = rng.between(config.min_atoms, config.max_atoms);
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> atoms;
  std::vector<ExtRational> weights;
  for (std::uint64_t a = 0; a < atom_count; ++a) {
    const auto size = rng.between(1, config.max_points_per_atom);
    std::vector<std::string> block;
    for (std::uint64_t i = 0; i < size; ++i) {
      points.push_back(prefix + std::to_string(points.size()));
      block.push_back(points.back());
    }
    atoms.push_back(std::move(block));
    if (rng.percent(config.infinite_percent)) {
      weights.push_back(ExtRational::infinity());
    } else if (rng.percent(config.null_percent)) {
      weights.emplace_back(0);
    } else {
      const auto p = rng.between(0, config.max_numerator);
      const auto q = rng.between(1, config.max_denominator);
      weights.emplace_back(Rational(mpz_class(static_cast<unsigned long>(p)),
                                    mpz_class(static_cast<unsigned long>(q))));
    }
  }
  return make_space(std::move(points), atoms, std::move(weights));
}

MeasurableMap random_map(InstanceRng& rng, const SpacePtr& source, const SpacePtr& target) {
  std::vector<std::size_t> fn(source->num_points());
  for (const auto& atom : source->atoms()) {
    const auto& block = target->atoms()[rng.below(target->num_atoms())];
    for (auto p : atom) fn[p] = block[rng.below(block.size())];
  }
  return MeasurableMap::make(source, target, std::move(fn));
}

MeasurableMap random_instance(InstanceRng& rng, const GeneratorConfig& config,
                              bool force_null_target) {
  const SpacePtr source = random_space(rng, config, "x");
  SpacePtr target = random_space(rng, config, "y");
  if (force_null_target && target->null_atoms() == 0) {
    std::vector<std::vector<std::string>> atoms;
    for (const auto& atom : target->atoms()) {
      auto& block = atoms.emplace_back();
      for (auto p : atom) block.push_back(target->points()[p]);
    }
    auto weights = target->weights();
    weights[rng.below(weights.size())] = ExtRational(0);
    target = make_space(target->points(), atoms, std::move(weights));
  }
  return random_map(rng, source, target);
}

std::pair<MeasurableMap, MeasurableMap> random_composable_pair(InstanceRng& rng,
                                                               const GeneratorConfig& config) {
  const SpacePtr x1 = random_space(rng, config, "x");
  const SpacePtr x2 = random_space(rng, config, "y");
  const SpacePtr x3 = random_space(rng, config, "z");
  MeasurableMap f = random_map(rng, x1, x2);
  MeasurableMap g = random_map(rng, x2, x3);
  return {std::move(f), std::move(g)};
}

}  // namespace measalg
