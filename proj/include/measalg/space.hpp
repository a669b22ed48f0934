#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "measalg/ext_rational.hpp"

namespace measalg {

/// Bitset over the atoms of one space; bit i is atom i in canonical order.
using AtomMask = std::uint64_t;
inline constexpr std::size_t kMaxAtoms = 64;

inline AtomMask atom_bit(std::size_t atom) { return AtomMask{1} << atom; }
inline AtomMask full_mask(std::size_t atom_count) {
  return atom_count >= kMaxAtoms ? ~AtomMask{0} : atom_bit(atom_count) - 1;
}

/// Calls fn(atom_index) for each set bit, in increasing order.
template <typename Fn>
void for_each_atom(AtomMask mask, Fn&& fn) {
  while (mask != 0) {
    const auto atom = static_cast<std::size_t>(std::countr_zero(mask));
    fn(atom);
    mask &= mask - 1;
  }
}

/// Finite point set with a partition-generated sigma-algebra and a measure
/// given by per-atom weights. Atoms are ordered by their smallest member
/// label; members keep the order of the point list.
class FiniteMeasureSpace {
 public:
  const std::vector<std::string>& points() const noexcept { return points_; }
  /// Point indices of each atom.
  const std::vector<std::vector<std::size_t>>& atoms() const noexcept { return atoms_; }
  const std::vector<ExtRational>& weights() const noexcept { return weights_; }

  std::size_t num_points() const noexcept { return points_.size(); }
  std::size_t num_atoms() const noexcept { return atoms_.size(); }
  std::size_t atom_of_point(std::size_t point) const { return atom_of_point_.at(point); }
  std::optional<std::size_t> point_index(std::string_view label) const;

  AtomMask all_atoms() const noexcept { return full_mask(atoms_.size()); }
  AtomMask null_atoms() const noexcept { return null_atoms_; }
  AtomMask infinite_atoms() const noexcept { return infinite_atoms_; }

  /// False when some atom has infinite weight.
  bool sigma_finite() const noexcept { return infinite_atoms_ == 0; }
  ExtRational total_measure() const;

  friend bool operator==(const FiniteMeasureSpace& lhs, const FiniteMeasureSpace& rhs);

 private:
  friend std::shared_ptr<const FiniteMeasureSpace> make_space(
      std::vector<std::string>, const std::vector<std::vector<std::string>>&,
      std::vector<ExtRational>);

  FiniteMeasureSpace() = default;

  std::vector<std::string> points_;
  std::vector<std::vector<std::size_t>> atoms_;
  std::vector<ExtRational> weights_;
  std::vector<std::size_t> atom_of_point_;
  AtomMask null_atoms_ = 0;
  AtomMask infinite_atoms_ = 0;
};

using SpacePtr = std::shared_ptr<const FiniteMeasureSpace>;

/// Validates and canonicalizes. `partition[i]` carries weight `weights[i]`;
/// the returned space may order atoms differently.
SpacePtr make_space(std::vector<std::string> points,
                    const std::vector<std::vector<std::string>>& partition,
                    std::vector<ExtRational> weights);

/// Same object or structurally equal.
bool same_space(const FiniteMeasureSpace& a, const FiniteMeasureSpace& b);

/// A union of atoms of one space.
class MeasurableSet {
 public:
  MeasurableSet(SpacePtr space, AtomMask atoms);

  const SpacePtr& space() const noexcept { return space_; }
  AtomMask atoms() const noexcept { return atoms_; }
  bool empty() const noexcept { return atoms_ == 0; }

  friend bool operator==(const MeasurableSet& lhs, const MeasurableSet& rhs) {
    return lhs.atoms_ == rhs.atoms_ && same_space(*lhs.space_, *rhs.space_);
  }

 private:
  SpacePtr space_;
  AtomMask atoms_;
};

MeasurableSet empty_set(const SpacePtr& space);
MeasurableSet whole_space(const SpacePtr& space);
/// Throws NotMeasurable if the points split an atom, UnknownPoint on a bad label.
MeasurableSet set_from_points(const SpacePtr& space, std::span<const std::string> labels);

ExtRational measure(const FiniteMeasureSpace& space, const MeasurableSet& set);
/// Sum of the weights of the atoms in `mask`, no ownership check.
ExtRational atom_measure(const FiniteMeasureSpace& space, AtomMask mask);

bool is_measurable(const FiniteMeasureSpace& space, std::span<const std::string> labels);
bool is_null(const FiniteMeasureSpace& space, const MeasurableSet& set);

MeasurableSet set_union(const MeasurableSet& a, const MeasurableSet& b);
MeasurableSet set_intersection(const MeasurableSet& a, const MeasurableSet& b);
MeasurableSet set_complement(const MeasurableSet& a);
MeasurableSet set_symmetric_difference(const MeasurableSet& a, const MeasurableSet& b);

}  // namespace measalg
