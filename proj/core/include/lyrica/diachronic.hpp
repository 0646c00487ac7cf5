#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lyrica/corpus.hpp"
#include "lyrica/topics.hpp"

namespace lyrica {

enum class LabelSource { Gold, Predicted, Mixed };

std::string_view to_string(LabelSource source);

/// The Parental Advisory Label was first distributed in 1985; decades that
/// start before it carry a caveat flag in explicitness series.
inline constexpr int kAdvisoryLabelYear = 1985;

template <typename T>
struct DecadeEntry {
  int decade = 0;
  T value{};
  /// Songs contributing to the value (always >= 1).
  std::size_t count = 0;
  LabelSource source = LabelSource::Gold;
  bool before_advisory_label = false;
};

/// Entries sorted by decade; decades without contributing songs are omitted.
template <typename T>
struct DecadeSeries {
  std::vector<DecadeEntry<T>> entries;
};

/// One series per topic: the mean per-song probability of that topic over the
/// dated songs of each decade. `per_song` is aligned with the corpus; songs
/// without a distribution are skipped. Sums run in corpus order.
std::vector<DecadeSeries<double>> topic_importance_by_decade(const Corpus& corpus,
                                                             std::span<const std::optional<TopicDistribution>> per_song);

struct SourcedLabel {
  Explicitness label = Explicitness::Unknown;
  LabelSource source = LabelSource::Gold;
};

std::vector<SourcedLabel> gold_explicit_labels(const Corpus& corpus);
std::vector<SourcedLabel> predicted_explicit_labels(std::span<const std::optional<bool>> predicted);
/// Gold where known, otherwise the prediction.
std::vector<SourcedLabel> merge_explicit_labels(const Corpus& corpus, std::span<const std::optional<bool>> predicted);

/// Share of explicit songs among songs labelled explicit or clean, per decade.
DecadeSeries<double> explicitness_by_decade(const Corpus& corpus, std::span<const SourcedLabel> labels);

/// Component-wise mean valence/arousal per decade, gold values preferred over
/// `predicted` (aligned with the corpus; may be empty).
DecadeSeries<VAPoint> emotion_by_decade(const Corpus& corpus, std::span<const std::optional<VAPoint>> predicted = {});

/// decade,value,count,source
void write_series_csv(std::ostream& out, const DecadeSeries<double>& series);
/// decade,valence,arousal,count,source
void write_series_csv(std::ostream& out, const DecadeSeries<VAPoint>& series);
/// decade,topic,value,count
void write_topic_series_csv(std::ostream& out, std::span<const DecadeSeries<double>> series);

}  // namespace lyrica
