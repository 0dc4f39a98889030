#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "dragonfly/rng.hpp"
#include "dragonfly/types.hpp"

namespace dfa {

using ObjectiveVector = Vec;

/// u dominates v (minimization): u <= v everywhere and u < v somewhere.
/// Throws on length mismatch.
bool dominates(std::span<const double> u, std::span<const double> v);

struct ArchiveEntry {
  Vec position;
  ObjectiveVector objectives;
};

enum class InsertOutcome { accepted, rejected };

/// Segment id -> indices of the archive entries it holds, ordered by id.
using Segmentation = std::map<std::size_t, std::vector<std::size_t>>;

/// Bounded store of mutually non-dominated solutions with grid crowding.
///
/// Objective space is cut into n_segments equal bins per objective over the
/// bounding box of the current entries. The segment id is the row-major index
/// of the bin tuple, first objective most significant.
class ParetoArchive {
 public:
  ParetoArchive(std::size_t capacity, std::size_t n_segments);

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t n_segments() const noexcept { return n_segments_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<ArchiveEntry>& entries() const noexcept { return entries_; }

  /// Rejected iff some resident dominates the candidate. Otherwise residents
  /// dominated by the candidate are removed, the candidate is appended, and the
  /// archive is truncated back to capacity.
  InsertOutcome insert(ArchiveEntry candidate, RngStream& rng);

  Segmentation segment() const;

  /// Position of an entry from a segment drawn with probability proportional
  /// to 1 / (count + 1). Throws on an empty archive.
  const Vec& select_food(RngStream& rng) const;
  /// Position of a uniform member of the most crowded segment (ties to the
  /// lowest id). Throws on an empty archive.
  const Vec& select_enemy(RngStream& rng) const;

  /// While size > limit remove a uniform member of the most crowded segment,
  /// re-segmenting after each removal.
  void truncate(RngStream& rng) { truncate_to(capacity_, rng); }
  void truncate_to(std::size_t limit, RngStream& rng);

  /// Entries as "x0..x{d-1},f0..f{k-1}" rows with a header line.
  void write_csv(std::ostream& out) const;

 private:
  std::size_t capacity_;
  std::size_t n_segments_;
  std::vector<ArchiveEntry> entries_;
};

/// Exact 2-objective hypervolume of the points dominating `reference`.
double hypervolume_2d(std::span<const ObjectiveVector> points, std::span<const double> reference);

}  // namespace dfa
