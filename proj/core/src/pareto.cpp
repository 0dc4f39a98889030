#include "dragonfly/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

namespace dfa {

bool dominates(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw std::invalid_argument("dominates: objective length mismatch");
  bool strictly = false;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] > v[k]) return false;
    if (u[k] < v[k]) strictly = true;
  }
  return strictly;
}

ParetoArchive::ParetoArchive(std::size_t capacity, std::size_t n_segments)
    : capacity_(capacity), n_segments_(n_segments) {
  if (n_segments_ == 0) throw std::invalid_argument("ParetoArchive: n_segments must be positive");
}

InsertOutcome ParetoArchive::insert(ArchiveEntry candidate, RngStream& rng) {
  for (const auto& c : candidate.objectives)
    if (!std::isfinite(c)) throw std::invalid_argument("ParetoArchive: non-finite objective");
  for (const auto& e : entries_)
    if (dominates(e.objectives, candidate.objectives)) return InsertOutcome::rejected;

  std::erase_if(entries_,
                [&](const ArchiveEntry& e) { return dominates(candidate.objectives, e.objectives); });
  entries_.push_back(std::move(candidate));
  truncate(rng);
  return InsertOutcome::accepted;
}

Segmentation ParetoArchive::segment() const {
  Segmentation segments;
  if (entries_.empty()) return segments;
  const std::size_t k = entries_.front().objectives.size();
  Vec lo(k, std::numeric_limits<double>::infinity());
  Vec hi(k, -std::numeric_limits<double>::infinity());
  for (const auto& e : entries_) {
    for (std::size_t m = 0; m < k; ++m) {
      lo[m] = std::min(lo[m], e.objectives[m]);
      hi[m] = std::max(hi[m], e.objectives[m]);
    }
  }
  const auto n = static_cast<double>(n_segments_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    std::size_t id = 0;
    for (std::size_t m = 0; m < k; ++m) {
      std::size_t bin = 0;
      const double width = hi[m] - lo[m];
      if (width > 0.0) {
        // Interior boundaries belong to the lower bin; the minimum to bin 0.
        const double pos = std::ceil((entries_[i].objectives[m] - lo[m]) / width * n) - 1.0;
        bin = static_cast<std::size_t>(std::clamp(pos, 0.0, n - 1.0));
      }
      id = id * n_segments_ + bin;
    }
    segments[id].push_back(i);
  }
  return segments;
}

const Vec& ParetoArchive::select_food(RngStream& rng) const {
  if (entries_.empty()) throw std::logic_error("select_food: empty archive");
  const Segmentation segments = segment();
  double total = 0.0;
  for (const auto& [id, members] : segments) total += 1.0 / static_cast<double>(members.size() + 1);
  double pick = rng.uniform() * total;
  const std::vector<std::size_t>* chosen = &segments.rbegin()->second;
  for (const auto& [id, members] : segments) {
    pick -= 1.0 / static_cast<double>(members.size() + 1);
    if (pick < 0.0) {
      chosen = &members;
      break;
    }
  }
  return entries_[(*chosen)[rng.below(chosen->size())]].position;
}

namespace {
const std::vector<std::size_t>& most_crowded(const Segmentation& segments) {
  const std::vector<std::size_t>* best = nullptr;
  for (const auto& [id, members] : segments)
    if (best == nullptr || members.size() > best->size()) best = &members;
  return *best;
}
}  // namespace

const Vec& ParetoArchive::select_enemy(RngStream& rng) const {
  if (entries_.empty()) throw std::logic_error("select_enemy: empty archive");
  const Segmentation segments = segment();
  const auto& members = most_crowded(segments);
  return entries_[members[rng.below(members.size())]].position;
}

void ParetoArchive::truncate_to(std::size_t limit, RngStream& rng) {
  while (entries_.size() > limit) {
    const Segmentation segments = segment();
    const auto& members = most_crowded(segments);
    const std::size_t victim = members[rng.below(members.size())];
    entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(victim));
  }
}

void ParetoArchive::write_csv(std::ostream& out) const {
  if (entries_.empty()) return;
  const std::size_t d = entries_.front().position.size();
  const std::size_t k = entries_.front().objectives.size();
  for (std::size_t j = 0; j < d; ++j) out << (j ? "," : "") << 'x' << j;
  for (std::size_t m = 0; m < k; ++m) out << ",f" << m;
  out << '\n';
  for (const auto& e : entries_) {
    for (std::size_t j = 0; j < d; ++j) out << (j ? "," : "") << fmt::format("{:.16e}", e.position[j]);
    for (double v : e.objectives) out << ',' << fmt::format("{:.16e}", v);
    out << '\n';
  }
}

double hypervolume_2d(std::span<const ObjectiveVector> points, std::span<const double> reference) {
  if (reference.size() != 2) throw std::invalid_argument("hypervolume_2d: reference must be 2-D");
  std::vector<std::pair<double, double>> front;
  for (const auto& p : points) {
    if (p.size() != 2) throw std::invalid_argument("hypervolume_2d: points must be 2-D");
    if (p[0] < reference[0] && p[1] < reference[1]) front.emplace_back(p[0], p[1]);
  }
  std::sort(front.begin(), front.end());
  double volume = 0.0;
  double ceiling = reference[1];
  for (const auto& [a, b] : front) {
    if (b >= ceiling) continue;
    volume += (reference[0] - a) * (ceiling - b);
    ceiling = b;
  }
  return volume;
}

}  // namespace dfa
