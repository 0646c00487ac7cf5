#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lyrica/corpus.hpp"
#include "lyrica/ssm.hpp"

namespace lyrica {

inline constexpr double kDefaultFamilyThreshold = 0.6;

/// Segments similar enough to an anchor segment to count as its repetitions.
struct SegmentFamily {
  std::size_t anchor = 0;
  /// Sorted; always contains the anchor.
  std::vector<std::size_t> members;
  /// Lines covered by the members over all lines of the song.
  double coverage = 0.0;
  /// Mean pairwise similarity among members (1 for a singleton).
  double cohesion = 1.0;
};

/// One family per segment: members are the j with ssm(anchor, j) >= tau.
/// `segment_lengths` gives the line count of every segment.
std::vector<SegmentFamily> segment_families(const Ssm& segment_ssm,
                                            std::span<const std::size_t> segment_lengths,
                                            double tau = kDefaultFamilyThreshold);
std::vector<SegmentFamily> segment_families(const Song& song, double tau = kDefaultFamilyThreshold);

/// Harmonic mean of cohesion and coverage; 0 for segments that do not repeat.
std::vector<double> segment_fitness(std::span<const SegmentFamily> families);
std::vector<double> segment_fitness(const Song& song, double tau = kDefaultFamilyThreshold);

/// Fittest segment, lowest index on ties. Songs without segments yield 0.
std::size_t chorus_candidate(std::span<const double> fitness);
std::size_t chorus_candidate(const Song& song, double tau = kDefaultFamilyThreshold);

}  // namespace lyrica
