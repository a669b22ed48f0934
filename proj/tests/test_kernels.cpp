#include <doctest.h>

#include "fixtures.hpp"
#include "measalg/generator.hpp"
#include "measalg/kernels.hpp"

using namespace measalg;
using fixtures::q;

namespace {

bool brute_safe(const MeasurableMap& map) {
  return is_inverse_nil_preserving(map) && !lipschitz_bruteforce(map).fin_violation;
}

}  // namespace

TEST_CASE("parallel kernel matches the serial reference") {
  GeneratorConfig config;
  config.max_atoms = 8;
  int compared = 0;
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    InstanceRng rng(77, trial);
    const auto map = random_instance(rng, config);
    if (!brute_safe(map)) continue;
    const auto hom = induced_homomorphism(map);
    const auto reference = kernels::pair_sup_reference(hom);
    const auto parallel = kernels::pair_sup_parallel(hom);
    REQUIRE(parallel);
    CHECK(*parallel == reference);
    CHECK(lipschitz_bruteforce(map, kDefaultBudget, BruteForceStrategy::Reference) == reference);
    ++compared;
  }
  CHECK(compared > 100);
}

TEST_CASE("parallel kernel reports overflow and the front end falls back") {
  // Coprime denominators near 2^31 push the common denominator past 2^62.
  const auto target = make_space({"a", "b", "c"}, {{"a"}, {"b"}, {"c"}},
                                 {ExtRational(Rational(1, 2147483647)),
                                  ExtRational(Rational(1, 2147483629)),
                                  ExtRational(Rational(1, 2147483563))});
  const auto source = make_space({"x", "y", "z"}, {{"x"}, {"y"}, {"z"}},
                                 {ExtRational(Rational(1, 2147483587)),
                                  ExtRational(Rational(1, 2147483579)), q(2)});
  const auto map = MeasurableMap::make(source, target, {{"x", "a"}, {"y", "b"}, {"z", "c"}});
  const auto hom = induced_homomorphism(map);
  CHECK_FALSE(kernels::pair_sup_parallel(hom));
  const auto reference = kernels::pair_sup_reference(hom);
  CHECK(lipschitz_bruteforce(map, kDefaultBudget, BruteForceStrategy::Auto) == reference);
  CHECK(reference.constant == compression(map));
}

TEST_CASE("kernels on the named fixture") {
  const auto hom = induced_homomorphism(fixtures::phi());
  const auto reference = kernels::pair_sup_reference(hom);
  CHECK(reference.constant == CompressionResult::bounded(Rational(5, 6)));
  CHECK(kernels::pair_sup_parallel(hom) == reference);
}
