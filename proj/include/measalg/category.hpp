#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "measalg/morphism.hpp"

namespace measalg {

/// Finite measure space with a rational metric on its points.
class FiniteMetricMeasureSpace {
 public:
  /// `upper` lists d(i, j) for i < j in point order, row by row.
  /// InvalidMetric unless the table is a metric.
  static std::shared_ptr<const FiniteMetricMeasureSpace> make(SpacePtr base,
                                                              std::vector<Rational> upper);

  const SpacePtr& base() const noexcept { return base_; }
  const Rational& dist(std::size_t i, std::size_t j) const;
  std::vector<Rational> upper_triangular() const;

 private:
  FiniteMetricMeasureSpace() = default;

  SpacePtr base_;
  std::vector<Rational> table_;  // full n x n, row-major
};

using MetricSpacePtr = std::shared_ptr<const FiniteMetricMeasureSpace>;

/// Metric measure space with one atom per point (the Borel algebra of a
/// finite metric space). `weights[i]` is the mass of point i.
MetricSpacePtr make_discrete_metric_space(std::vector<std::string> points,
                                          std::vector<ExtRational> weights,
                                          std::vector<Rational> upper);

/// Max over distinct points of d2(f x, f y) / d1(x, y); zero when the
/// source has fewer than two points or the map is constant.
CompressionResult lipschitz_point(const MeasurableMap& map, const FiniteMetricMeasureSpace& source,
                                  const FiniteMetricMeasureSpace& target);

/// Multiply all distances by `factor` > 0; the measure is untouched.
MetricSpacePtr rescale_space(const FiniteMetricMeasureSpace& space, const Rational& factor);

struct ShortRescaling {
  Rational source_factor;  // multiply source distances by this
  Rational target_factor;  // or target distances by this
};

struct MorphismClassification {
  bool measurable = true;
  bool inverse_nil_preserving = false;
  CompressionResult compression;
  // Present only when both spaces carry a metric.
  std::optional<CompressionResult> lipschitz_point;
  std::optional<bool> short_map;
  std::optional<bool> bounded_deformation;
  std::optional<ShortRescaling> rescale_to_short;
};

MorphismClassification classify(const MeasurableMap& map);
MorphismClassification classify(const MeasurableMap& map, const FiniteMetricMeasureSpace& source,
                                const FiniteMetricMeasureSpace& target);

MeasurableMap identity_map(const SpacePtr& space);
/// g after f; SpaceMismatch unless f's target equals g's source.
MeasurableMap compose(const MeasurableMap& g, const MeasurableMap& f);

/// outer after inner, as homomorphisms: a -> outer(inner(a)).
BooleanHom compose_homs(const BooleanHom& outer, const BooleanHom& inner);

/// Exhaustive check of (g o f)^bullet = f^bullet o g^bullet and of the
/// identity law on the three spaces involved. NotInverseNilPreserving
/// when f, g or g o f has no induced homomorphism.
LawReport contravariance_check(const MeasurableMap& f, const MeasurableMap& g);
/// Compares `composite` with `f_hom` after `g_hom` on every domain element.
LawReport check_contravariance(const BooleanHom& composite, const BooleanHom& f_hom,
                               const BooleanHom& g_hom);
/// id^bullet agrees with the identity homomorphism on every element.
LawReport check_identity_law(const SpacePtr& space);

/// C(g o f) <= C(f) * C(g), an Unbounded factor making the bound vacuous.
bool compression_submultiplicativity(const MeasurableMap& f, const MeasurableMap& g);

}  // namespace measalg
