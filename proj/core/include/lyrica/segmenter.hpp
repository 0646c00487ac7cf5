#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lyrica/corpus.hpp"
#include "lyrica/linear_model.hpp"
#include "lyrica/ssm.hpp"

namespace lyrica {

struct BorderFeatureConfig {
  std::array<std::size_t, 3> windows{1, 2, 4};
  /// Minimum similarity for an entry to count as part of a repetition stripe.
  double tau_rep = 0.7;

  friend bool operator==(const BorderFeatureConfig&, const BorderFeatureConfig&) = default;
};

inline constexpr std::size_t kBorderFeatureCount = 11;

/// Layout: for each window w (in config order) the mean similarity above,
/// below and across the border; then the stripe score; then b / n. The
/// intercept lives in the model bias.
using BorderFeatures = std::array<double, kBorderFeatureCount>;

/// Features for the border between line b-1 and line b (1 <= b <= n-1).
/// Windows are truncated at the matrix edges.
BorderFeatures extract_border_features(const Ssm& ssm, std::size_t border,
                                       const BorderFeatureConfig& config = {});

/// Features for every candidate border 1..n-1, in order.
std::vector<BorderFeatures> extract_all_border_features(const Ssm& ssm,
                                                        const BorderFeatureConfig& config = {});

struct SegmenterModel {
  BorderFeatureConfig features;
  LinearModel model;
  double theta = 0.5;

  friend bool operator==(const SegmenterModel&, const SegmenterModel&) = default;
};

struct SegmenterTrainOptions {
  BorderFeatureConfig features;
  std::uint64_t seed = 17;
  int iterations = 400;
  double l2 = 1e-3;
  double holdout_fraction = 0.1;
};

/// Line positions where a new segment starts (never 0).
std::vector<std::size_t> gold_borders(const Song& song);

/// Logistic border classifier over all inter-line gaps of all songs with at
/// least two lines. The threshold maximises border F1 on a seeded held-out
/// split (0.5 when the split is empty).
SegmenterModel train_segmenter(const Corpus& corpus, const SegmenterTrainOptions& options = {});

std::vector<double> border_probabilities(const SegmenterModel& model, const Ssm& ssm);

/// Sorted positions in 1..n-1 whose probability reaches theta.
std::vector<std::size_t> predict_borders(const SegmenterModel& model, const Ssm& ssm);

/// Precision, recall and F1 in percent.
struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Border-level counts; pooled by addition before computing ratios.
struct BorderCounts {
  std::size_t true_positives = 0;
  std::size_t predicted = 0;
  std::size_t gold = 0;

  BorderCounts& operator+=(const BorderCounts& other);
  Prf prf() const;
};

BorderCounts count_borders(const std::vector<std::size_t>& predicted,
                           const std::vector<std::size_t>& gold);
Prf evaluate_segmentation(const std::vector<std::size_t>& predicted,
                          const std::vector<std::size_t>& gold);

struct SegmentationReport {
  BorderCounts overall;
  /// Songs without a genre are pooled under "(none)".
  std::map<std::string, BorderCounts> by_genre;
};

SegmentationReport evaluate_segmenter(const SegmenterModel& model, const Corpus& corpus);

void save_segmenter(const std::filesystem::path& path, const SegmenterModel& model);
SegmenterModel load_segmenter(const std::filesystem::path& path);
std::string segmenter_to_json(const SegmenterModel& model);
SegmenterModel segmenter_from_json(const std::string& text);

}  // namespace lyrica
