#include "measalg/category.hpp"

#include <numeric>

#include "measalg/errors.hpp"

namespace measalg {
namespace {

constexpr std::size_t kMaxLawRank = 20;

void require_base(const MeasurableMap& map, const FiniteMetricMeasureSpace& source,
                  const FiniteMetricMeasureSpace& target) {
  if (!same_space(*map.source(), *source.base()) || !same_space(*map.target(), *target.base())) {
    throw Error(ErrorKind::SpaceMismatch, "metric spaces do not match the map");
  }
}

}  // namespace

std::shared_ptr<const FiniteMetricMeasureSpace> FiniteMetricMeasureSpace::make(
    SpacePtr base, std::vector<Rational> upper) {
  const std::size_t n = base->num_points();
  if (upper.size() != n * (n - (n > 0 ? 1 : 0)) / 2) {
    throw Error(ErrorKind::InvalidMetric, "expected " + std::to_string(n * (n ? n - 1 : 0) / 2) +
                                              " distances, got " + std::to_string(upper.size()));
  }
  auto space = std::shared_ptr<FiniteMetricMeasureSpace>(new FiniteMetricMeasureSpace());
  space->table_.assign(n * n, Rational(0));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      upper[k].canonicalize();
      if (sgn(upper[k]) <= 0) {
        throw Error(ErrorKind::InvalidMetric, "non-positive distance between " +
                                                  base->points()[i] + " and " + base->points()[j]);
      }
      space->table_[i * n + j] = upper[k];
      space->table_[j * n + i] = upper[k];
    }
  }
  const auto& d = space->table_;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (d[x * n + z] > d[x * n + y] + d[y * n + z]) {
          throw Error(ErrorKind::InvalidMetric, "triangle inequality fails at " +
                                                    base->points()[x] + ", " + base->points()[y] +
                                                    ", " + base->points()[z]);
        }
      }
    }
  }
  space->base_ = std::move(base);
  return space;
}

const Rational& FiniteMetricMeasureSpace::dist(std::size_t i, std::size_t j) const {
  return table_.at(i * base_->num_points() + j);
}

std::vector<Rational> FiniteMetricMeasureSpace::upper_triangular() const {
  const std::size_t n = base_->num_points();
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(table_[i * n + j]);
  }
  return out;
}

MetricSpacePtr make_discrete_metric_space(std::vector<std::string> points,
                                          std::vector<ExtRational> weights,
                                          std::vector<Rational> upper) {
  std::vector<std::vector<std::string>> singletons;
  singletons.reserve(points.size());
  for (const auto& p : points) singletons.push_back({p});
  return FiniteMetricMeasureSpace::make(make_space(std::move(points), singletons, std::move(weights)),
                                        std::move(upper));
}

CompressionResult lipschitz_point(const MeasurableMap& map, const FiniteMetricMeasureSpace& source,
                                  const FiniteMetricMeasureSpace& target) {
  require_base(map, source, target);
  const auto& fn = map.point_fn();
  Rational best = 0;
  for (std::size_t x = 0; x < fn.size(); ++x) {
    for (std::size_t y = x + 1; y < fn.size(); ++y) {
      const Rational ratio = target.dist(fn[x], fn[y]) / source.dist(x, y);
      if (ratio > best) best = ratio;
    }
  }
  return CompressionResult::bounded(best);
}

MetricSpacePtr rescale_space(const FiniteMetricMeasureSpace& space, const Rational& factor) {
  if (sgn(factor) <= 0) throw Error(ErrorKind::NonPositiveFactor, rational_to_string(factor));
  auto upper = space.upper_triangular();
  for (auto& d : upper) d *= factor;
  return FiniteMetricMeasureSpace::make(space.base(), std::move(upper));
}

MorphismClassification classify(const MeasurableMap& map) {
  MorphismClassification out;
  out.measurable = true;  // MeasurableMap cannot hold anything else
  out.inverse_nil_preserving = is_inverse_nil_preserving(map);
  out.compression = compression(map);
  return out;
}

MorphismClassification classify(const MeasurableMap& map, const FiniteMetricMeasureSpace& source,
                                const FiniteMetricMeasureSpace& target) {
  MorphismClassification out = classify(map);
  const auto lip = lipschitz_point(map, source, target);
  out.lipschitz_point = lip;
  out.short_map = lip.value() <= 1;
  out.bounded_deformation = lip.is_bounded() && out.compression.is_bounded();
  if (lip.value() > 1) {
    out.rescale_to_short = ShortRescaling{lip.value(), Rational(1 / lip.value())};
  } else {
    out.rescale_to_short = ShortRescaling{1, 1};
  }
  return out;
}

MeasurableMap identity_map(const SpacePtr& space) {
  std::vector<std::size_t> fn(space->num_points());
  std::iota(fn.begin(), fn.end(), std::size_t{0});
  return MeasurableMap::make(space, space, std::move(fn));
}

MeasurableMap compose(const MeasurableMap& g, const MeasurableMap& f) {
  if (!same_space(*f.target(), *g.source())) {
    throw Error(ErrorKind::SpaceMismatch, "target of f differs from source of g");
  }
  std::vector<std::size_t> fn;
  fn.reserve(f.point_fn().size());
  for (auto y : f.point_fn()) fn.push_back(g.point_fn()[y]);
  return MeasurableMap::make(f.source(), g.target(), std::move(fn));
}

BooleanHom compose_homs(const BooleanHom& outer, const BooleanHom& inner) {
  if (!same_algebra(*inner.codomain(), *outer.domain())) {
    throw Error(ErrorKind::SpaceMismatch, "homomorphisms are not composable");
  }
  std::vector<AtomMask> action(inner.atom_action().size(), 0);
  for_each_atom(inner.domain()->nonnull_mask(), [&](std::size_t b) {
    action[b] = outer.apply(outer.domain()->element(inner.atom_action()[b])).atoms();
  });
  return BooleanHom::from_atom_action(inner.domain(), outer.codomain(), std::move(action));
}

LawReport check_contravariance(const BooleanHom& composite, const BooleanHom& f_hom,
                               const BooleanHom& g_hom) {
  const auto& domain = *composite.domain();
  if (domain.rank() > kMaxLawRank) {
    throw Error(ErrorKind::BudgetExceeded, "contravariance check over rank " +
                                               std::to_string(domain.rank()));
  }
  LawReport report;
  for (std::uint64_t k = 0; k < domain.element_count(); ++k) {
    const AlgebraElement a = domain.element_from_compact(k);
    const AlgebraElement direct = composite.apply(a);
    const AlgebraElement via = f_hom.apply(g_hom.apply(g_hom.domain()->element(a.atoms())));
    if (direct.atoms() != via.atoms() || !same_algebra(*direct.algebra(), *via.algebra())) {
      report.violations.push_back({"contravariance", "a=" + format_atoms(a.atoms()) +
                                                         " (g.f)*a=" + format_atoms(direct.atoms()) +
                                                         " f*(g*a)=" + format_atoms(via.atoms())});
      break;
    }
  }
  return report;
}

LawReport check_identity_law(const SpacePtr& space) {
  const auto algebra = build_algebra(space);
  if (algebra->rank() > kMaxLawRank) {
    throw Error(ErrorKind::BudgetExceeded, "identity check over rank " +
                                               std::to_string(algebra->rank()));
  }
  const BooleanHom induced = induced_homomorphism(identity_map(space), algebra, algebra);
  LawReport report;
  for (std::uint64_t k = 0; k < algebra->element_count(); ++k) {
    const AlgebraElement a = algebra->element_from_compact(k);
    if (induced.apply(a) != a) {
      report.violations.push_back({"identity", "a=" + format_atoms(a.atoms())});
      break;
    }
  }
  return report;
}

LawReport contravariance_check(const MeasurableMap& f, const MeasurableMap& g) {
  const MeasurableMap gf = compose(g, f);
  const auto a1 = build_algebra(f.source());
  const auto a2 = build_algebra(f.target());
  const auto a3 = build_algebra(g.target());
  const BooleanHom f_hom = induced_homomorphism(f, a2, a1);
  const BooleanHom g_hom = induced_homomorphism(g, a3, a2);
  const BooleanHom gf_hom = induced_homomorphism(gf, a3, a1);

  LawReport report = check_contravariance(gf_hom, f_hom, g_hom);
  for (const auto& space : {f.source(), f.target(), g.target()}) {
    for (auto& v : check_identity_law(space).violations) report.violations.push_back(std::move(v));
  }
  return report;
}

bool compression_submultiplicativity(const MeasurableMap& f, const MeasurableMap& g) {
  const auto gf = compose(g, f);
  const auto cf = compression(f);
  const auto cg = compression(g);
  if (!cf.is_bounded() || !cg.is_bounded()) return true;
  const auto cgf = compression(gf);
  return cgf.is_bounded() && cgf.value() <= cf.value() * cg.value();
}

}  // namespace measalg
