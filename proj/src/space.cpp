#include "measalg/space.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "measalg/errors.hpp"

namespace measalg {
namespace {

void require_owned(const FiniteMeasureSpace& space, const MeasurableSet& set) {
  if (!same_space(space, *set.space())) {
    throw Error(ErrorKind::ForeignSet, "set belongs to a different space");
  }
}

void require_same(const MeasurableSet& a, const MeasurableSet& b) {
  if (!same_space(*a.space(), *b.space())) {
    throw Error(ErrorKind::ForeignSet, "operands belong to different spaces");
  }
}

}  // namespace

std::optional<std::size_t> FiniteMeasureSpace::point_index(std::string_view label) const {
  const auto it = std::find(points_.begin(), points_.end(), label);
  if (it == points_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

ExtRational FiniteMeasureSpace::total_measure() const {
  return atom_measure(*this, all_atoms());
}

bool operator==(const FiniteMeasureSpace& lhs, const FiniteMeasureSpace& rhs) {
  return lhs.points_ == rhs.points_ && lhs.atoms_ == rhs.atoms_ &&
         lhs.weights_ == rhs.weights_;
}

SpacePtr make_space(std::vector<std::string> points,
                    const std::vector<std::vector<std::string>>& partition,
                    std::vector<ExtRational> weights) {
  if (partition.size() != weights.size()) {
    throw Error(ErrorKind::ArityMismatch, std::to_string(partition.size()) + " atoms but " +
                                              std::to_string(weights.size()) + " weights");
  }
  if (partition.size() > kMaxAtoms) {
    throw Error(ErrorKind::TooManyAtoms,
                std::to_string(partition.size()) + " > " + std::to_string(kMaxAtoms));
  }
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!index.emplace(points[i], i).second) {
      throw Error(ErrorKind::DuplicatePoint, points[i]);
    }
  }

  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> block_of(points.size(), kUnassigned);
  std::vector<std::vector<std::size_t>> blocks(partition.size());
  for (std::size_t b = 0; b < partition.size(); ++b) {
    if (partition[b].empty()) {
      throw Error(ErrorKind::EmptyAtom, "block " + std::to_string(b));
    }
    for (const auto& label : partition[b]) {
      const auto it = index.find(label);
      if (it == index.end()) throw Error(ErrorKind::UnknownPoint, label);
      if (block_of[it->second] != kUnassigned) {
        throw Error(ErrorKind::PartitionOverlap, label);
      }
      block_of[it->second] = b;
      blocks[b].push_back(it->second);
    }
    std::sort(blocks[b].begin(), blocks[b].end());
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (block_of[i] == kUnassigned) throw Error(ErrorKind::PartitionGap, points[i]);
  }

  // Canonical order: by smallest member label.
  std::vector<std::string> min_label(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    min_label[b] = points[blocks[b].front()];
    for (auto p : blocks[b]) min_label[b] = std::min(min_label[b], points[p]);
  }
  std::vector<std::size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return min_label[x] < min_label[y]; });

  auto space = std::shared_ptr<FiniteMeasureSpace>(new FiniteMeasureSpace());
  space->points_ = std::move(points);
  space->atom_of_point_.assign(space->points_.size(), 0);
  for (std::size_t a = 0; a < order.size(); ++a) {
    const auto b = order[a];
    for (auto p : blocks[b]) space->atom_of_point_[p] = a;
    space->atoms_.push_back(std::move(blocks[b]));
    space->weights_.push_back(std::move(weights[b]));
    if (space->weights_.back().is_zero()) space->null_atoms_ |= atom_bit(a);
    if (space->weights_.back().is_infinite()) space->infinite_atoms_ |= atom_bit(a);
  }
  return space;
}

bool same_space(const FiniteMeasureSpace& a, const FiniteMeasureSpace& b) {
  return &a == &b || a == b;
}

MeasurableSet::MeasurableSet(SpacePtr space, AtomMask atoms)
    : space_(std::move(space)), atoms_(atoms) {
  if ((atoms_ & ~space_->all_atoms()) != 0) {
    throw std::out_of_range("MeasurableSet: atom index beyond space");
  }
}

MeasurableSet empty_set(const SpacePtr& space) { return {space, 0}; }

MeasurableSet whole_space(const SpacePtr& space) { return {space, space->all_atoms()}; }

namespace {

// Atoms fully covered by the labels, plus the atoms only partly covered.
std::pair<AtomMask, AtomMask> classify_points(const FiniteMeasureSpace& space,
                                              std::span<const std::string> labels) {
  std::vector<std::size_t> hits(space.num_atoms(), 0);
  std::vector<bool> seen(space.num_points(), false);
  for (const auto& label : labels) {
    const auto idx = space.point_index(label);
    if (!idx) throw Error(ErrorKind::UnknownPoint, label);
    if (seen[*idx]) continue;
    seen[*idx] = true;
    ++hits[space.atom_of_point(*idx)];
  }
  AtomMask full = 0;
  AtomMask partial = 0;
  for (std::size_t a = 0; a < space.num_atoms(); ++a) {
    if (hits[a] == space.atoms()[a].size()) {
      full |= atom_bit(a);
    } else if (hits[a] != 0) {
      partial |= atom_bit(a);
    }
  }
  return {full, partial};
}

}  // namespace

MeasurableSet set_from_points(const SpacePtr& space, std::span<const std::string> labels) {
  const auto [full, partial] = classify_points(*space, labels);
  if (partial != 0) {
    const auto atom = static_cast<std::size_t>(std::countr_zero(partial));
    throw Error(ErrorKind::NotMeasurable,
                "point set splits atom " + std::to_string(atom));
  }
  return {space, full};
}

ExtRational atom_measure(const FiniteMeasureSpace& space, AtomMask mask) {
  ExtRational total;
  for_each_atom(mask, [&](std::size_t a) { total += space.weights()[a]; });
  return total;
}

ExtRational measure(const FiniteMeasureSpace& space, const MeasurableSet& set) {
  require_owned(space, set);
  return atom_measure(space, set.atoms());
}

bool is_measurable(const FiniteMeasureSpace& space, std::span<const std::string> labels) {
  return classify_points(space, labels).second == 0;
}

bool is_null(const FiniteMeasureSpace& space, const MeasurableSet& set) {
  return measure(space, set).is_zero();
}

MeasurableSet set_union(const MeasurableSet& a, const MeasurableSet& b) {
  require_same(a, b);
  return {a.space(), a.atoms() | b.atoms()};
}

MeasurableSet set_intersection(const MeasurableSet& a, const MeasurableSet& b) {
  require_same(a, b);
  return {a.space(), a.atoms() & b.atoms()};
}

MeasurableSet set_complement(const MeasurableSet& a) {
  return {a.space(), a.space()->all_atoms() & ~a.atoms()};
}

MeasurableSet set_symmetric_difference(const MeasurableSet& a, const MeasurableSet& b) {
  require_same(a, b);
  return {a.space(), a.atoms() ^ b.atoms()};
}

}  // namespace measalg
