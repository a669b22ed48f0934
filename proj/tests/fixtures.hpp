#pragma once

// Small named spaces and maps shared by the unit and acceptance suites.
//   S1: p1..p4, atoms A={p1,p2} B={p3} C={p4}, weights 1/2, 1/3, 0
//   S2: q1, q2, atoms D={q1} E={q2}, weights 1, 2
//   S3: r1, r2, singleton atoms, weights 1, 2

#include "measalg/category.hpp"
#include "measalg/morphism.hpp"

namespace fixtures {

using namespace measalg;

inline ExtRational q(long num, long den = 1) { return ExtRational(Rational(num, den)); }

inline SpacePtr s1() {
  return make_space({"p1", "p2", "p3", "p4"}, {{"p1", "p2"}, {"p3"}, {"p4"}},
                    {q(1, 2), q(1, 3), q(0)});
}

inline SpacePtr s2() { return make_space({"q1", "q2"}, {{"q1"}, {"q2"}}, {q(1), q(2)}); }

inline SpacePtr s3() { return make_space({"r1", "r2"}, {{"r1"}, {"r2"}}, {q(1), q(2)}); }

inline constexpr std::size_t kA = 0, kB = 1, kC = 2;
inline constexpr std::size_t kD = 0, kE = 1;

/// p1,p2,p3 -> q1, p4 -> q2.
inline MeasurableMap phi() {
  return MeasurableMap::make(s1(), s2(), {{"p1", "q1"}, {"p2", "q1"}, {"p3", "q1"}, {"p4", "q2"}});
}

/// q1 -> p4 (null atom C), q2 -> p1. Not inverse-nil-preserving.
inline MeasurableMap psi() {
  return MeasurableMap::make(s2(), s1(), {{"q1", "p4"}, {"q2", "p1"}});
}

/// Constant map from S3 onto `point` of `target`.
inline MeasurableMap constant_map(const SpacePtr& source, const SpacePtr& target,
                                  const std::string& point) {
  std::unordered_map<std::string, std::string> fn;
  for (const auto& p : source->points()) fn.emplace(p, point);
  return MeasurableMap::make(source, target, fn);
}

/// Weight-1 atom, infinite atom, and a map sending the infinite atom to a
/// target atom of the given weight.
inline MeasurableMap infinite_source_map(const ExtRational& target_weight) {
  auto source = make_space({"u1", "u2"}, {{"u1"}, {"u2"}}, {q(1), ExtRational::infinity()});
  auto target = make_space({"v1", "v2"}, {{"v1"}, {"v2"}}, {q(1), target_weight});
  return MeasurableMap::make(source, target, {{"u1", "v1"}, {"u2", "v2"}});
}

}  // namespace fixtures
