#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lyrica/corpus.hpp"
#include "lyrica/ssm.hpp"
#include "lyrica/thumbnail.hpp"
#include "lyrica/topics.hpp"

namespace lyrica {

/// Line scorers that can be combined into a summary.
enum class Scorer : unsigned { Rank = 1u, Topic = 2u, Fit = 4u };

class ScorerSet {
 public:
  constexpr ScorerSet() = default;
  constexpr ScorerSet(std::initializer_list<Scorer> scorers) {
    for (auto s : scorers) bits_ |= static_cast<unsigned>(s);
  }
  static constexpr ScorerSet all() { return {Scorer::Rank, Scorer::Topic, Scorer::Fit}; }

  constexpr bool contains(Scorer s) const { return (bits_ & static_cast<unsigned>(s)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr void insert(Scorer s) { bits_ |= static_cast<unsigned>(s); }

  friend constexpr bool operator==(ScorerSet, ScorerSet) = default;

 private:
  unsigned bits_ = 0;
};

/// Parses a comma-separated list such as "rank,topic,fit".
ScorerSet parse_scorers(std::string_view text);
std::string to_string(ScorerSet scorers);

struct RankOptions {
  double damping = 0.85;
  int max_iterations = 100;
  double tolerance = 1e-8;
};

/// TextRank-style centrality: power iteration on the row-normalised line
/// similarity graph without self-loops. Lines without edges spread their mass
/// uniformly.
std::vector<double> rank_scores(const Ssm& line_ssm, const RankOptions& options = {});

/// score(line) = sum_k p(k | song) * geometric mean over the line's known
/// tokens of p(token | k). Lines without known tokens score 0.
std::vector<double> topic_scores(const Song& song, const LdaModel& model, const InferOptions& options = {});

/// Every line inherits the fitness of its segment.
std::vector<double> fitness_scores(const Song& song, double tau = kDefaultFamilyThreshold);

/// Min-max scaling to [0, 1]; constant vectors map to 0.5.
std::vector<double> normalize_scores(std::span<const double> scores);

struct SummaryOptions {
  std::size_t lines = 4;
  double family_threshold = kDefaultFamilyThreshold;
  InferOptions inference;
  RankOptions rank;
};

struct Summary {
  /// Strictly increasing line indices into Song::lines().
  std::vector<std::size_t> line_indices;
  std::vector<std::string> lines;
};

/// Picks the k best distinct lines by the mean of the normalised raw score
/// vectors and returns them in song order. Exact duplicate lines collapse to
/// their first occurrence; ties favour earlier lines.
Summary select_summary(std::span<const std::string> lines, std::span<const std::vector<double>> raw_scores,
                       std::size_t k);

/// Throws std::invalid_argument when Topic is requested without a model or
/// the scorer set is empty.
Summary summarize(const Song& song, ScorerSet scorers, const LdaModel* topics,
                  const SummaryOptions& options = {});

}  // namespace lyrica
