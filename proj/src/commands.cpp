#include "measalg/commands.hpp"

#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "measalg/category.hpp"
#include "measalg/errors.hpp"
#include "measalg/generator.hpp"

namespace measalg::cli {
namespace {

using io::Json;

const char* field_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicatePoint: return "points";
    case ErrorKind::PartitionGap:
    case ErrorKind::PartitionOverlap:
    case ErrorKind::EmptyAtom:
    case ErrorKind::TooManyAtoms:
    case ErrorKind::UnknownPoint: return "atoms";
    case ErrorKind::NegativeWeight:
    case ErrorKind::ArityMismatch: return "weights";
    case ErrorKind::NotMeasurable: return "fn";
    case ErrorKind::InvalidMetric: return "dist";
    default: return "";
  }
}

Json error_json(const Error& e, const std::string& file) {
  Json out;
  out["file"] = file;
  out["error"] = std::string(to_string(e.kind()));
  out["field"] = field_of(e.kind());
  out["reason"] = e.detail();
  return out;
}

void add_input(RunReport& report, const std::string& path) {
  Json entry;
  entry["path"] = path;
  try {
    entry["sha256"] = sha256_hex(io::read_file(path));
  } catch (const Error&) {
    entry["sha256"] = nullptr;
  }
  report.inputs.push_back(std::move(entry));
}

// Runs `body`, turning library errors into exit codes 2 and 3.
template <typename Body>
RunReport guarded(RunReport report, const std::string& file, Body&& body) {
  try {
    body(report);
  } catch (const Error& e) {
    report.results["error"] = error_json(e, file);
    report.exit_code = e.kind() == ErrorKind::BudgetExceeded ? kBudgetExceeded : kInputError;
  }
  if (report.exit_code == kOk && !report.violations.empty()) report.exit_code = kViolation;
  return report;
}

Json sigma_finite_json(const MeasurableMap& map) {
  return {{"source", map.source()->sigma_finite()}, {"target", map.target()->sigma_finite()}};
}

// Sub-instance on the kept atoms; nullopt if a kept source atom would lose
// its image.
std::optional<MeasurableMap> restrict_map(const MeasurableMap& map, AtomMask keep_source,
                                          AtomMask keep_target) {
  auto restrict_space = [](const FiniteMeasureSpace& space, AtomMask keep) {
    std::vector<std::string> points;
    std::vector<std::vector<std::string>> atoms;
    std::vector<ExtRational> weights;
    for (std::size_t p = 0; p < space.num_points(); ++p) {
      if (keep & atom_bit(space.atom_of_point(p))) points.push_back(space.points()[p]);
    }
    for_each_atom(keep, [&](std::size_t a) {
      auto& block = atoms.emplace_back();
      for (auto p : space.atoms()[a]) block.push_back(space.points()[p]);
      weights.push_back(space.weights()[a]);
    });
    return make_space(std::move(points), atoms, std::move(weights));
  };
  bool images_kept = true;
  for_each_atom(keep_source, [&](std::size_t a) {
    if (!(keep_target & atom_bit(map.atom_image()[a]))) images_kept = false;
  });
  if (!images_kept) return std::nullopt;
  const auto source = restrict_space(*map.source(), keep_source);
  const auto target = restrict_space(*map.target(), keep_target);
  std::unordered_map<std::string, std::string> fn;
  for (std::size_t p = 0; p < map.source()->num_points(); ++p) {
    if (keep_source & atom_bit(map.source()->atom_of_point(p))) {
      fn.emplace(map.source()->points()[p], map.target()->points()[map.point_fn()[p]]);
    }
  }
  return MeasurableMap::make(source, target, fn);
}

Json theorem_json(const TheoremOutcome& outcome) {
  Json out;
  out["compression"] = outcome.compression.to_string();
  out["lipschitz_fast"] = outcome.fast.to_string();
  out["lipschitz_bruteforce"] = outcome.brute.constant.to_string();
  out["agree"] = outcome.agree();
  out["degenerate"] = outcome.compression.degenerate();
  out["attained_at_empty"] = outcome.brute.attained_at_empty;
  if (outcome.brute.witness) {
    out["witness"] = {{"a", io::element_to_json(outcome.brute.witness->first)},
                      {"b", io::element_to_json(outcome.brute.witness->second)}};
  } else if (outcome.brute.fin_violation) {
    out["witness"] = {{"fin_violation", io::element_to_json(*outcome.brute.fin_violation)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

}  // namespace

// --- report rendering --------------------------------------------------------

Json RunReport::to_json() const {
  Json doc;
  doc["command"] = command;
  doc["inputs"] = inputs;
  doc["results"] = results;
  Json v = Json::array();
  for (const auto& violation : violations) {
    v.push_back({{"law", violation.law}, {"witness", violation.witness}});
  }
  doc["violations"] = std::move(v);
  doc["exit_code"] = exit_code;
  return doc;
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << "command: " << command << '\n';
  for (const auto& input : inputs) {
    os << "input: " << input["path"].get<std::string>() << '\n';
  }
  for (const auto& [key, value] : results.items()) {
    os << key << ": " << value.dump() << '\n';
  }
  for (const auto& v : violations) os << "VIOLATION " << v.law << ": " << v.witness << '\n';
  os << "exit_code: " << exit_code << '\n';
  return os.str();
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < length; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return os.str();
}

// --- theorem evaluation ------------------------------------------------------

bool TheoremOutcome::agree() const {
  return compression == fast && fast == brute.constant;
}

bool TheoremOutcome::empty_extremal() const {
  const auto& c = brute.constant;
  if (!c.is_bounded() || sgn(c.value()) == 0) return true;
  return brute.attained_at_empty;
}

TheoremOutcome evaluate_theorem(const MeasurableMap& map, std::size_t budget,
                                const TheoremOracles& oracles) {
  return {oracles.compression(map), oracles.lipschitz_fast(map),
          oracles.lipschitz_bruteforce(map, budget)};
}

MeasurableMap minimize_instance(const MeasurableMap& map,
                                const std::function<bool(const MeasurableMap&)>& failing) {
  MeasurableMap current = map;
  bool changed = true;
  while (changed) {
    changed = false;
    const AtomMask all_source = current.source()->all_atoms();
    const AtomMask all_target = current.target()->all_atoms();
    for (std::size_t a = 0; a < current.source()->num_atoms() && !changed; ++a) {
      auto smaller = restrict_map(current, all_source & ~atom_bit(a), all_target);
      if (smaller && failing(*smaller)) {
        current = std::move(*smaller);
        changed = true;
      }
    }
    for (std::size_t b = 0; b < current.target()->num_atoms() && !changed; ++b) {
      if (current.atom_preimages()[b] != 0) continue;
      auto smaller = restrict_map(current, all_source, all_target & ~atom_bit(b));
      if (smaller && failing(*smaller)) {
        current = std::move(*smaller);
        changed = true;
      }
    }
  }
  return current;
}

// --- commands ----------------------------------------------------------------

RunReport cmd_validate(const std::vector<std::string>& paths) {
  RunReport report;
  report.command = "validate";
  Json files = Json::array();
  bool any_error = false;
  for (const auto& path : paths) {
    add_input(report, path);
    Json entry;
    entry["path"] = path;
    try {
      const Json doc = io::load_json_file(path);
      if (doc.is_object() && doc.contains("fn")) {
        const auto loaded = io::map_from_json(doc, std::filesystem::path(path).parent_path());
        entry["kind"] = "map";
        entry["valid"] = true;
        entry["canonical"] = io::map_to_json(loaded.map, loaded.source_metric.get(),
                                             loaded.target_metric.get());
      } else {
        const auto loaded = io::space_from_json(doc);
        entry["kind"] = "space";
        entry["valid"] = true;
        entry["sigma_finite"] = loaded.space->sigma_finite();
        entry["canonical"] = loaded.metric ? io::space_to_json(*loaded.metric)
                                           : io::space_to_json(*loaded.space);
      }
    } catch (const Error& e) {
      any_error = true;
      entry["valid"] = false;
      entry["diagnostic"] = error_json(e, path);
    }
    files.push_back(std::move(entry));
  }
  report.results["files"] = std::move(files);
  report.exit_code = any_error ? kInputError : kOk;
  return report;
}

RunReport cmd_classify(const std::string& map_path) {
  RunReport report;
  report.command = "classify";
  add_input(report, map_path);
  return guarded(std::move(report), map_path, [&](RunReport& r) {
    const auto loaded = io::load_map_file(map_path);
    const auto c = loaded.has_metrics()
                       ? classify(loaded.map, *loaded.source_metric, *loaded.target_metric)
                       : classify(loaded.map);
    r.results = io::classification_to_json(c);
    r.results["sigma_finite"] = sigma_finite_json(loaded.map);
  });
}

RunReport cmd_theorem_check(const TheoremCheckOptions& options, const TheoremOracles& oracles) {
  RunReport report;
  report.command = "theorem-check";
  if (options.map_path) add_input(report, *options.map_path);
  return guarded(std::move(report), options.map_path.value_or(""), [&](RunReport& r) {
    if (options.map_path) {
      const auto loaded = io::load_map_file(*options.map_path);
      const auto outcome = evaluate_theorem(loaded.map, options.budget, oracles);
      r.results["instance"] = theorem_json(outcome);
      r.results["instance"]["sigma_finite"] = sigma_finite_json(loaded.map);
      if (!outcome.agree()) {
        r.violations.push_back({"main_theorem", io::map_to_json(loaded.map).dump()});
      }
      if (!outcome.empty_extremal()) {
        r.violations.push_back({"empty_extremality", io::map_to_json(loaded.map).dump()});
      }
    }
    if (options.trials == 0) return;

    struct TrialResult {
      std::optional<TheoremOutcome> outcome;
      std::optional<Error> error;
    };
    const GeneratorConfig config;
    std::vector<TrialResult> trials(options.trials);
    std::vector<std::optional<MeasurableMap>> instances(options.trials);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(options.trials); ++i) {
      try {
        InstanceRng rng(options.seed, static_cast<std::uint64_t>(i));
        instances[i].emplace(random_instance(rng, config));
        trials[i].outcome.emplace(evaluate_theorem(*instances[i], options.budget, oracles));
      } catch (const Error& e) {
        trials[i].error.emplace(e);
      }
    }

    std::size_t agreements = 0;
    std::size_t unbounded = 0;
    std::size_t bounded_positive = 0;
    std::size_t attained_at_empty = 0;
    for (std::size_t i = 0; i < trials.size(); ++i) {
      if (trials[i].error) throw *trials[i].error;
      const auto& outcome = *trials[i].outcome;
      const auto& c = outcome.brute.constant;
      if (!c.is_bounded()) ++unbounded;
      if (c.is_bounded() && sgn(c.value()) > 0) {
        ++bounded_positive;
        if (outcome.brute.attained_at_empty) ++attained_at_empty;
      }
      if (outcome.agree()) {
        ++agreements;
      } else if (!r.results.contains("counterexample")) {
        const auto minimized = minimize_instance(*instances[i], [&](const MeasurableMap& m) {
          try {
            return !evaluate_theorem(m, options.budget, oracles).agree();
          } catch (const Error&) {
            return false;
          }
        });
        Json cex;
        cex["trial"] = i;
        cex["map"] = io::map_to_json(minimized);
        cex["values"] = theorem_json(evaluate_theorem(minimized, options.budget, oracles));
        r.results["counterexample"] = std::move(cex);
        r.violations.push_back({"main_theorem", "trial " + std::to_string(i) + ": " +
                                                    io::map_to_json(minimized).dump()});
      }
      if (!outcome.empty_extremal()) {
        r.violations.push_back({"empty_extremality", "trial " + std::to_string(i)});
      }
    }
    Json summary;
    summary["count"] = options.trials;
    summary["seed"] = options.seed;
    summary["agreements"] = agreements;
    summary["unbounded"] = unbounded;
    summary["bounded_positive"] = bounded_positive;
    summary["attained_at_empty"] = attained_at_empty;
    r.results["trials"] = std::move(summary);
  });
}

RunReport cmd_functor_check(const std::string& f_path, const std::string& g_path) {
  RunReport report;
  report.command = "functor-check";
  add_input(report, f_path);
  add_input(report, g_path);
  std::string current = f_path;
  return guarded(std::move(report), current, [&](RunReport& r) {
    const auto f = io::load_map_file(f_path);
    current = g_path;
    const auto g = io::load_map_file(g_path);
    const auto laws = contravariance_check(f.map, g.map);
    const bool submultiplicative = compression_submultiplicativity(f.map, g.map);
    const auto gf = compose(g.map, f.map);
    r.results["contravariance"] = laws.ok();
    r.results["compression_f"] = compression(f.map).to_string();
    r.results["compression_g"] = compression(g.map).to_string();
    r.results["compression_gf"] = compression(gf).to_string();
    r.results["submultiplicative"] = submultiplicative;
    for (const auto& v : laws.violations) r.violations.push_back(v);
    if (!submultiplicative) {
      r.violations.push_back({"submultiplicativity", "C(g.f)=" + compression(gf).to_string()});
    }
  });
}

}  // namespace measalg::cli
