#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lyrica/corpus.hpp"

namespace lyrica {

enum class Granularity { Line, Segment };

std::string_view to_string(Granularity granularity);
Granularity parse_granularity(std::string_view text);

/// Square symmetric similarity matrix with unit diagonal and entries in [0, 1].
class Ssm {
 public:
  Ssm() = default;
  /// Identity matrix of size n.
  Ssm(Granularity granularity, std::size_t n);

  std::size_t size() const { return n_; }
  Granularity granularity() const { return granularity_; }

  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return {values_.data() + i * n_, n_}; }

  /// Sets (i, j) and (j, i). Throws std::invalid_argument outside [0, 1].
  void set(std::size_t i, std::size_t j, double value);

  friend bool operator==(const Ssm&, const Ssm&) = default;

 private:
  Granularity granularity_ = Granularity::Line;
  std::size_t n_ = 0;
  std::vector<double> values_;
};

/// Levenshtein distance with unit costs over code points.
std::size_t edit_distance(std::u32string_view a, std::u32string_view b);

/// Edit distance over max(|a|, |b|) code points; 0 when both are empty.
double normalized_edit_distance(std::string_view a, std::string_view b);

/// 1 - normalized_edit_distance.
double similarity(std::string_view a, std::string_view b);

/// Pairwise case-folded similarity of arbitrary text units.
Ssm similarity_matrix(std::span<const std::string> units, Granularity granularity);

/// Line-level SSM over the song's flattened lines. Throws DataError for a song
/// without lines.
Ssm line_ssm(const Song& song);

/// Segment-level SSM; each segment is compared as its lines joined by '\n'.
Ssm segment_ssm(const Song& song);

/// Text format: "n <granularity>" followed by n rows of n values with four
/// fractional digits.
void write_ssm(std::ostream& out, const Ssm& ssm);
Ssm read_ssm(std::istream& in);

}  // namespace lyrica
