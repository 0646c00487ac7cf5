#include "lyrica/thumbnail.hpp"

#include <numeric>
#include <stdexcept>

namespace lyrica {

std::vector<SegmentFamily> segment_families(const Ssm& ssm,
                                            std::span<const std::size_t> segment_lengths,
                                            double tau) {
  if (ssm.granularity() != Granularity::Segment) {
    throw std::invalid_argument("segment_families needs a segment-level SSM");
  }
  if (segment_lengths.size() != ssm.size()) {
    throw std::invalid_argument("segment_families: one length per segment required");
  }
  const std::size_t total = std::accumulate(segment_lengths.begin(), segment_lengths.end(), std::size_t{0});

  std::vector<SegmentFamily> families;
  families.reserve(ssm.size());
  for (std::size_t anchor = 0; anchor < ssm.size(); ++anchor) {
    SegmentFamily family;
    family.anchor = anchor;
    std::size_t covered = 0;
    for (std::size_t j = 0; j < ssm.size(); ++j) {
      if (j == anchor || ssm(anchor, j) >= tau) {
        family.members.push_back(j);
        covered += segment_lengths[j];
      }
    }
    family.coverage = total > 0 ? static_cast<double>(covered) / static_cast<double>(total) : 0.0;
    if (family.members.size() > 1) {
      double sum = 0.0;
      std::size_t pairs = 0;
      for (std::size_t a = 0; a < family.members.size(); ++a) {
        for (std::size_t b = a + 1; b < family.members.size(); ++b) {
          sum += ssm(family.members[a], family.members[b]);
          ++pairs;
        }
      }
      family.cohesion = sum / static_cast<double>(pairs);
    }
    families.push_back(std::move(family));
  }
  return families;
}

std::vector<SegmentFamily> segment_families(const Song& song, double tau) {
  if (song.segments.empty()) return {};
  const auto lengths = song.segment_lengths();
  return segment_families(segment_ssm(song), lengths, tau);
}

std::vector<double> segment_fitness(std::span<const SegmentFamily> families) {
  std::vector<double> fitness;
  fitness.reserve(families.size());
  for (const auto& family : families) {
    const double denom = family.cohesion + family.coverage;
    if (family.members.size() < 2 || denom <= 0.0) {
      fitness.push_back(0.0);
    } else {
      fitness.push_back(2.0 * family.cohesion * family.coverage / denom);
    }
  }
  return fitness;
}

std::vector<double> segment_fitness(const Song& song, double tau) {
  return segment_fitness(segment_families(song, tau));
}

std::size_t chorus_candidate(std::span<const double> fitness) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < fitness.size(); ++i) {
    if (fitness[i] > fitness[best]) best = i;
  }
  return best;
}

std::size_t chorus_candidate(const Song& song, double tau) {
  return chorus_candidate(segment_fitness(song, tau));
}

}  // namespace lyrica
