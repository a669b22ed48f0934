// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
// throughout. Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "measalg/commands.hpp"
#include "measalg/errors.hpp"
#include "measalg/generator.hpp"

using namespace measalg;
using fixtures::q;

namespace {

constexpr std::uint64_t kSeed = 20240611;

/// Collects failures; the first few are echoed under the criterion line.
struct Failures {
  std::vector<std::string> items;
  void add(std::string what) { items.push_back(std::move(what)); }
  void expect(bool ok, const std::string& what) {
    if (!ok) add(what);
  }
};

MeasurableMap seeded_instance(std::uint64_t stream, bool force_null = false) {
  InstanceRng rng(kSeed, stream);
  return random_instance(rng, GeneratorConfig{}, force_null);
}

std::vector<MeasurableMap> main_instances() {
  std::vector<MeasurableMap> out;
  for (std::uint64_t i = 0; i < 200; ++i) out.push_back(seeded_instance(i));
  return out;
}

/// 20 spaces whose algebras have at most 5 non-null atoms.
std::vector<SpacePtr> small_spaces() {
  std::vector<SpacePtr> out = {fixtures::s1(), fixtures::s2(), fixtures::s3()};
  GeneratorConfig config;
  config.max_atoms = 5;
  config.infinite_percent = 15;
  for (std::uint64_t i = 0; out.size() < 20; ++i) {
    InstanceRng rng(kSeed + 4, i);
    out.push_back(random_space(rng, config, "x"));
  }
  return out;
}

std::vector<AlgebraElement> elements(const AlgebraPtr& alg) {
  std::vector<AlgebraElement> out;
  for (std::uint64_t k = 0; k < alg->element_count(); ++k) out.push_back(alg->element_from_compact(k));
  return out;
}

std::string describe(const MeasurableMap& map) {
  std::ostringstream os;
  os << map.source()->num_atoms() << "->" << map.target()->num_atoms() << " atoms";
  return os.str();
}

// 1 and 3 share their runs.
struct MainRun {
  bool completed = false;
  Failures equivalence;
  Failures extremality;
};

MainRun run_main(const std::vector<MeasurableMap>& instances) {
  MainRun run;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& map = instances[i];
    const auto tag = "instance " + std::to_string(i) + " (" + describe(map) + ")";
    const auto c = compression(map);
    const auto fast = lipschitz_fast(map);
    const auto brute = lipschitz_bruteforce(map);
    run.equivalence.expect(c == fast && fast == brute.constant,
                           tag + ": " + c.to_string() + " / " + fast.to_string() + " / " +
                               brute.constant.to_string());
    // Independent set-level oracles for both sides of the identity.
    run.equivalence.expect(oracles::compression_by_sets(map) == c, tag + ": compression oracle");
    run.equivalence.expect(oracles::lipschitz_by_set_pairs(map) == brute.constant,
                           tag + ": pair oracle");
    const auto& k = brute.constant;
    if (k.is_bounded() && sgn(k.value()) > 0) {
      run.extremality.expect(brute.attained_at_empty, tag + ": maximum not at b = empty");
    }
  }
  run.completed = true;
  return run;
}

Failures criterion_descent(const std::vector<MeasurableMap>& instances) {
  Failures f;
  std::vector<MeasurableMap> all = instances;
  for (std::uint64_t i = 0; i < 50; ++i) all.push_back(seeded_instance(1000 + i, true));
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& map = all[i];
    const bool atomwise = is_inverse_nil_preserving(map);
    const bool null_form = preimages_of_null_sets_are_null(map);
    const bool well_defined = check_well_definedness(map).well_defined;
    bool induced = true;
    try {
      induced_homomorphism(map);
    } catch (const measalg::Error& e) {
      if (e.kind() != ErrorKind::NotInverseNilPreserving) throw;
      induced = false;
    }
    f.expect(atomwise == null_form && null_form == well_defined && well_defined == induced,
             "instance " + std::to_string(i) + " (" + describe(map) + ")");
  }
  return f;
}

Failures criterion_isometry() {
  Failures f;
  std::size_t index = 0;
  for (const auto& space : small_spaces()) {
    const auto alg = build_algebra(space);
    for (const auto& a : elements(alg)) {
      if (!is_fin(a)) continue;
      for (const auto& b : elements(alg)) {
        if (!is_fin(b)) continue;
        f.expect(l1_distance(chi_embed(a), chi_embed(b)) == ExtRational(rho(a, b)),
                 "space " + std::to_string(index) + " pair " + format_atoms(a.atoms()) + "," +
                     format_atoms(b.atoms()));
      }
    }
    ++index;
  }
  return f;
}

Failures criterion_laws() {
  Failures f;
  std::size_t index = 0;
  for (const auto& space : small_spaces()) {
    const auto tag = "space " + std::to_string(index++);
    const auto alg = build_algebra(space);
    std::vector<AlgebraElement> fin;
    for (const auto& a : elements(alg)) {
      if (is_fin(a)) fin.push_back(a);
    }
    for (const auto& a : fin) {
      for (const auto& b : fin) {
        const Rational d = rho(a, b);
        const auto pair = tag + " " + format_atoms(a.atoms()) + "," + format_atoms(b.atoms());
        f.expect(d >= 0 && (sgn(d) == 0) == (a == b) && d == rho(b, a), pair + ": metric");
        for (const auto& c : fin) {
          f.expect(rho(a, c) <= d + rho(b, c), pair + ": triangle");
          f.expect(rho(elem_join(a, c), elem_join(b, c)) <= d, pair + ": join 1-Lipschitz");
          f.expect(rho(elem_meet(a, c), elem_meet(b, c)) <= d, pair + ": meet 1-Lipschitz");
          f.expect(rho(elem_symmdiff(a, c), elem_symmdiff(b, c)) == d, pair + ": symmdiff");
        }
        const auto na = elem_complement(a);
        const auto nb = elem_complement(b);
        if (is_fin(na) && is_fin(nb)) f.expect(rho(na, nb) == d, pair + ": complement");
      }
    }
    const std::uint64_t sets = std::uint64_t{1} << space->num_atoms();
    for (std::uint64_t x = 0; x < sets; ++x) {
      const MeasurableSet sx(space, x);
      f.expect(project(alg, set_complement(sx)) == elem_complement(project(alg, sx)),
               tag + ": project complement");
      for (std::uint64_t y = 0; y < sets; ++y) {
        const MeasurableSet sy(space, y);
        f.expect(project(alg, set_union(sx, sy)) == elem_join(project(alg, sx), project(alg, sy)),
                 tag + ": project join");
        f.expect(project(alg, set_intersection(sx, sy)) ==
                     elem_meet(project(alg, sx), project(alg, sy)),
                 tag + ": project meet");
      }
    }
  }
  GeneratorConfig config;
  config.max_atoms = 5;
  for (std::uint64_t i = 0; i < 100; ++i) {
    InstanceRng rng(kSeed + 5, i);
    const auto map = random_instance(rng, config);
    if (!is_inverse_nil_preserving(map)) continue;
    const auto report = check_hom_laws(induced_homomorphism(map), map);
    for (const auto& v : report.violations) {
      f.add("map " + std::to_string(i) + ": " + v.law + " at " + v.witness);
    }
  }
  return f;
}

Failures criterion_functor() {
  Failures f;
  int descended = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    InstanceRng rng(kSeed + 6, i);
    const auto [first, second] = random_composable_pair(rng, GeneratorConfig{});
    const auto tag = "pair " + std::to_string(i);
    f.expect(compression_submultiplicativity(first, second), tag + ": submultiplicativity");
    for (const auto* space : {&first.source(), &first.target(), &second.target()}) {
      f.expect(check_identity_law(*space).ok(), tag + ": identity");
    }
    if (is_inverse_nil_preserving(first) && is_inverse_nil_preserving(second)) {
      ++descended;
      for (const auto& v : contravariance_check(first, second).violations) {
        f.add(tag + ": " + v.law + " at " + v.witness);
      }
    }
  }
  f.expect(descended > 0, "no pair descended to the algebras");
  return f;
}

Failures criterion_constant_maps() {
  Failures f;
  const auto source = make_discrete_metric_space({"x1", "x2", "x3"}, {q(1), q(1, 2), q(3, 2)},
                                                 {Rational(1), Rational(2), Rational(1)});
  const ExtRational total = source->base()->total_measure();
  for (const auto& w : {q(1), q(3), q(1, 7), q(0)}) {
    const auto target = make_discrete_metric_space({"y1", "y2"}, {w, q(1)}, {Rational(4)});
    const auto map = fixtures::constant_map(source->base(), target->base(), "y1");
    const auto tag = "w=" + w.to_string();
    f.expect(lipschitz_point(map, *source, *target) == CompressionResult::bounded(0),
             tag + ": lipschitz_point");
    const auto expected = w.is_zero() ? CompressionResult::unbounded()
                                      : CompressionResult::bounded(total.value() / w.value());
    f.expect(compression(map) == expected, tag + ": compression " + compression(map).to_string());
    f.expect(pushforward(map).mass[0] == total, tag + ": point mass");
  }
  return f;
}

Failures criterion_fin_ideal() {
  Failures f;
  std::vector<MeasurableMap> fixtures_with_inf = {
      fixtures::infinite_source_map(ExtRational::infinity())};
  GeneratorConfig config;
  config.max_atoms = 5;
  config.infinite_percent = 35;
  for (std::uint64_t i = 0; i < 200; ++i) {
    InstanceRng rng(kSeed + 8, i);
    fixtures_with_inf.push_back(random_instance(rng, config));
  }
  std::size_t checked = 0;
  for (std::size_t i = 0; i < fixtures_with_inf.size(); ++i) {
    const auto& map = fixtures_with_inf[i];
    if (map.source()->infinite_atoms() == 0 || !compression(map).is_bounded()) continue;
    ++checked;
    const auto hom = induced_homomorphism(map);
    for (const auto& a : elements(hom.domain())) {
      if (is_fin(a)) {
        f.expect(is_fin(hom.apply(a)), "fixture " + std::to_string(i) + " at " +
                                           format_atoms(a.atoms()));
      }
    }
  }
  f.expect(checked >= 10, "only " + std::to_string(checked) + " bounded fixtures with infinite atoms");

  // Converse: unbounded compression and a fin element whose image is not fin.
  const auto unbounded = fixtures::infinite_source_map(q(1));
  f.expect(!compression(unbounded).is_bounded(), "converse fixture is bounded");
  const auto hom = induced_homomorphism(unbounded);
  const auto v2 = hom.domain()->element(atom_bit(1));
  f.expect(is_fin(v2) && !is_fin(hom.apply(v2)), "converse fixture keeps fin");
  f.expect(lipschitz_bruteforce(unbounded).fin_violation.has_value(),
           "brute force does not report the fin violation");
  return f;
}

Failures criterion_determinism() {
  Failures f;
  cli::TheoremCheckOptions options;
  options.trials = 100;
  options.seed = kSeed;
  const auto first = cli::cmd_theorem_check(options);
  const auto second = cli::cmd_theorem_check(options);
  f.expect(first.exit_code == cli::kOk, "exit code " + std::to_string(first.exit_code));
  f.expect(first.to_json().dump(2) == second.to_json().dump(2), "json reports differ");
  f.expect(first.to_text() == second.to_text(), "text reports differ");
  return f;
}

bool report(int number, const char* name, const std::function<Failures()>& run) {
  const auto start = std::chrono::steady_clock::now();
  Failures failures;
  try {
    failures = run();
  } catch (const std::exception& e) {
    failures.add(std::string("exception: ") + e.what());
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  const bool ok = failures.items.empty();
  std::printf("%s criterion %d: %s (%lld ms)\n", ok ? "PASS" : "FAIL", number, name,
              static_cast<long long>(ms));
  for (std::size_t i = 0; i < failures.items.size() && i < 5; ++i) {
    std::printf("    %s\n", failures.items[i].c_str());
  }
  if (failures.items.size() > 5) std::printf("    ... %zu more\n", failures.items.size() - 5);
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main() {
  const auto instances = main_instances();
  MainRun main_run;
  bool ok = true;
  ok &= report(1, "compression = lipschitz_fast = lipschitz_bruteforce", [&] {
    main_run = run_main(instances);
    return main_run.equivalence;
  });
  ok &= report(2, "descent characterizations agree", [&] { return criterion_descent(instances); });
  ok &= report(3, "maximal ratio attained against the empty element",
               [&] {
                 if (!main_run.completed) throw std::runtime_error("criterion 1 did not run");
                 return main_run.extremality;
               });
  ok &= report(4, "chi is an isometry", criterion_isometry);
  ok &= report(5, "metric and homomorphism laws", criterion_laws);
  ok &= report(6, "functor laws and submultiplicativity", criterion_functor);
  ok &= report(7, "constant maps", criterion_constant_maps);
  ok &= report(8, "fin ideal preservation", criterion_fin_ideal);
  ok &= report(9, "theorem-check reports are reproducible", criterion_determinism);
  return ok ? 0 : 1;
}
