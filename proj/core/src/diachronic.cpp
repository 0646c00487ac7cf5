#include "lyrica/diachronic.hpp"

#include <map>
#include <ostream>
#include <stdexcept>

#include "lyrica/text.hpp"

namespace lyrica {

std::string_view to_string(LabelSource source) {
  switch (source) {
    case LabelSource::Gold:
      return "gold";
    case LabelSource::Predicted:
      return "predicted";
    case LabelSource::Mixed:
      break;
  }
  return "mixed";
}

namespace {

void check_alignment(const Corpus& corpus, std::size_t n, std::string_view what) {
  if (n != corpus.size()) {
    throw std::invalid_argument(std::string(what) + ": expected one entry per corpus song");
  }
}

LabelSource combine(std::optional<LabelSource> current, LabelSource next) {
  if (!current) return next;
  return *current == next ? next : LabelSource::Mixed;
}

}  // namespace

std::vector<DecadeSeries<double>> topic_importance_by_decade(
    const Corpus& corpus, std::span<const std::optional<TopicDistribution>> per_song) {
  check_alignment(corpus, per_song.size(), "topic_importance_by_decade");
  std::size_t topics = 0;
  struct Acc {
    std::vector<double> sum;
    std::size_t count = 0;
  };
  std::map<int, Acc> by_decade;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto decade = decade_of(corpus[i]);
    if (!decade || !per_song[i]) continue;
    const auto& dist = *per_song[i];
    if (topics == 0) topics = dist.size();
    if (dist.size() != topics) throw std::invalid_argument("topic distributions differ in length");
    auto& acc = by_decade[*decade];
    if (acc.sum.empty()) acc.sum.assign(topics, 0.0);
    for (std::size_t k = 0; k < topics; ++k) acc.sum[k] += dist[k];
    ++acc.count;
  }
  std::vector<DecadeSeries<double>> series(topics);
  for (const auto& [decade, acc] : by_decade) {
    for (std::size_t k = 0; k < topics; ++k) {
      DecadeEntry<double> entry;
      entry.decade = decade;
      entry.value = acc.sum[k] / static_cast<double>(acc.count);
      entry.count = acc.count;
      entry.source = LabelSource::Predicted;
      series[k].entries.push_back(entry);
    }
  }
  return series;
}

std::vector<SourcedLabel> gold_explicit_labels(const Corpus& corpus) {
  std::vector<SourcedLabel> out;
  out.reserve(corpus.size());
  for (const auto& song : corpus) out.push_back({song.explicit_gold, LabelSource::Gold});
  return out;
}

std::vector<SourcedLabel> predicted_explicit_labels(std::span<const std::optional<bool>> predicted) {
  std::vector<SourcedLabel> out;
  out.reserve(predicted.size());
  for (const auto& p : predicted) {
    out.push_back({!p ? Explicitness::Unknown : (*p ? Explicitness::Explicit : Explicitness::Clean),
                   LabelSource::Predicted});
  }
  return out;
}

std::vector<SourcedLabel> merge_explicit_labels(const Corpus& corpus, std::span<const std::optional<bool>> predicted) {
  check_alignment(corpus, predicted.size(), "merge_explicit_labels");
  auto out = predicted_explicit_labels(predicted);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (corpus[i].explicit_gold != Explicitness::Unknown) out[i] = {corpus[i].explicit_gold, LabelSource::Gold};
  }
  return out;
}

DecadeSeries<double> explicitness_by_decade(const Corpus& corpus, std::span<const SourcedLabel> labels) {
  check_alignment(corpus, labels.size(), "explicitness_by_decade");
  struct Acc {
    std::size_t explicit_songs = 0;
    std::size_t labelled = 0;
    std::optional<LabelSource> source;
  };
  std::map<int, Acc> by_decade;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto decade = decade_of(corpus[i]);
    if (!decade || labels[i].label == Explicitness::Unknown) continue;
    auto& acc = by_decade[*decade];
    ++acc.labelled;
    if (labels[i].label == Explicitness::Explicit) ++acc.explicit_songs;
    acc.source = combine(acc.source, labels[i].source);
  }
  DecadeSeries<double> series;
  for (const auto& [decade, acc] : by_decade) {
    DecadeEntry<double> entry;
    entry.decade = decade;
    entry.value = static_cast<double>(acc.explicit_songs) / static_cast<double>(acc.labelled);
    entry.count = acc.labelled;
    entry.source = *acc.source;
    entry.before_advisory_label = decade < kAdvisoryLabelYear;
    series.entries.push_back(entry);
  }
  return series;
}

DecadeSeries<VAPoint> emotion_by_decade(const Corpus& corpus, std::span<const std::optional<VAPoint>> predicted) {
  if (!predicted.empty()) check_alignment(corpus, predicted.size(), "emotion_by_decade");
  struct Acc {
    double valence = 0.0;
    double arousal = 0.0;
    std::size_t count = 0;
    std::optional<LabelSource> source;
  };
  std::map<int, Acc> by_decade;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto decade = decade_of(corpus[i]);
    if (!decade) continue;
    std::optional<VAPoint> point;
    LabelSource source = LabelSource::Gold;
    if (corpus[i].va_gold) {
      point = corpus[i].va_gold;
    } else if (!predicted.empty() && predicted[i]) {
      point = predicted[i];
      source = LabelSource::Predicted;
    }
    if (!point) continue;
    auto& acc = by_decade[*decade];
    acc.valence += point->valence;
    acc.arousal += point->arousal;
    ++acc.count;
    acc.source = combine(acc.source, source);
  }
  DecadeSeries<VAPoint> series;
  for (const auto& [decade, acc] : by_decade) {
    DecadeEntry<VAPoint> entry;
    entry.decade = decade;
    entry.value = {acc.valence / static_cast<double>(acc.count), acc.arousal / static_cast<double>(acc.count)};
    entry.count = acc.count;
    entry.source = *acc.source;
    series.entries.push_back(entry);
  }
  return series;
}

void write_series_csv(std::ostream& out, const DecadeSeries<double>& series) {
  out << "decade,value,count,source\n";
  for (const auto& e : series.entries) {
    out << e.decade << ',' << format_double(e.value) << ',' << e.count << ',' << to_string(e.source) << '\n';
  }
}

void write_series_csv(std::ostream& out, const DecadeSeries<VAPoint>& series) {
  out << "decade,valence,arousal,count,source\n";
  for (const auto& e : series.entries) {
    out << e.decade << ',' << format_double(e.value.valence) << ',' << format_double(e.value.arousal) << ','
        << e.count << ',' << to_string(e.source) << '\n';
  }
}

void write_topic_series_csv(std::ostream& out, std::span<const DecadeSeries<double>> series) {
  out << "decade,topic,value,count\n";
  if (series.empty()) return;
  for (std::size_t row = 0; row < series.front().entries.size(); ++row) {
    for (std::size_t k = 0; k < series.size(); ++k) {
      const auto& e = series[k].entries[row];
      out << e.decade << ',' << k << ',' << format_double(e.value) << ',' << e.count << '\n';
    }
  }
}

}  // namespace lyrica
