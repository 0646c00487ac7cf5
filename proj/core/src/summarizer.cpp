#include "lyrica/summarizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "lyrica/text.hpp"

namespace lyrica {

ScorerSet parse_scorers(std::string_view text) {
  ScorerSet set;
  for (const auto& name : split_list(fold_case(text), ',')) {
    if (name == "rank") {
      set.insert(Scorer::Rank);
    } else if (name == "topic") {
      set.insert(Scorer::Topic);
    } else if (name == "fit") {
      set.insert(Scorer::Fit);
    } else {
      throw std::invalid_argument("unknown scorer '" + name + "'");
    }
  }
  return set;
}

std::string to_string(ScorerSet scorers) {
  std::string out;
  auto add = [&](Scorer s, const char* name) {
    if (!scorers.contains(s)) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(Scorer::Rank, "rank");
  add(Scorer::Topic, "topic");
  add(Scorer::Fit, "fit");
  return out;
}

std::vector<double> rank_scores(const Ssm& ssm, const RankOptions& options) {
  if (ssm.granularity() != Granularity::Line) throw std::invalid_argument("rank_scores needs a line-level SSM");
  const std::size_t n = ssm.size();
  if (n == 0) return {};
  if (n == 1) return {1.0};

  std::vector<double> out_weight(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) out_weight[i] += ssm(i, j);
    }
  }

  const double d = options.damping;
  const double base = (1.0 - d) / static_cast<double>(n);
  std::vector<double> score(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  for (int it = 0; it < options.max_iterations; ++it) {
    double dangling = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (out_weight[i] <= 0.0) dangling += score[i];
    }
    const double spread = d * dangling / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
      double incoming = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != j && out_weight[i] > 0.0) incoming += score[i] * ssm(i, j) / out_weight[i];
      }
      next[j] = base + spread + d * incoming;
    }
    double change = 0.0;
    for (std::size_t j = 0; j < n; ++j) change += std::abs(next[j] - score[j]);
    score.swap(next);
    if (change < options.tolerance) break;
  }
  return score;
}

std::vector<double> topic_scores(const Song& song, const LdaModel& model, const InferOptions& options) {
  const auto theta = infer_topics(model, preprocess(song), options);
  std::vector<double> scores;
  for (const auto& line : song.lines()) {
    std::vector<std::uint32_t> ids;
    for (const auto& token : preprocess(line)) {
      if (auto id = model.word_id(token)) ids.push_back(*id);
    }
    if (ids.empty()) {
      scores.push_back(0.0);
      continue;
    }
    double score = 0.0;
    for (std::size_t k = 0; k < model.topic_count(); ++k) {
      double log_sum = 0.0;
      for (auto id : ids) log_sum += std::log(model.word_probability(k, id));
      score += theta[k] * std::exp(log_sum / static_cast<double>(ids.size()));
    }
    scores.push_back(score);
  }
  return scores;
}

std::vector<double> fitness_scores(const Song& song, double tau) {
  const auto fitness = segment_fitness(song, tau);
  std::vector<double> scores;
  scores.reserve(song.line_count());
  for (std::size_t s = 0; s < song.segments.size(); ++s) {
    scores.insert(scores.end(), song.segments[s].size(), fitness[s]);
  }
  return scores;
}

std::vector<double> normalize_scores(std::span<const double> scores) {
  std::vector<double> out(scores.size(), 0.5);
  if (scores.empty()) return out;
  const auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
  const double range = *hi - *lo;
  if (!(range > 0.0)) return out;
  for (std::size_t i = 0; i < scores.size(); ++i) out[i] = (scores[i] - *lo) / range;
  return out;
}

Summary select_summary(std::span<const std::string> lines, std::span<const std::vector<double>> raw_scores,
                       std::size_t k) {
  if (k == 0) throw std::invalid_argument("summary length must be at least one line");
  if (raw_scores.empty()) throw std::invalid_argument("at least one scorer is required");
  std::vector<double> combined(lines.size(), 0.0);
  for (const auto& raw : raw_scores) {
    if (raw.size() != lines.size()) throw std::invalid_argument("score vector length differs from line count");
    // A constant scorer shifts every line equally. Leaving it out keeps the
    // ranking of the others exact instead of exposing it to rounding.
    if (std::ranges::adjacent_find(raw, std::ranges::not_equal_to{}) == raw.end()) continue;
    const auto norm = normalize_scores(raw);
    for (std::size_t i = 0; i < lines.size(); ++i) combined[i] += norm[i];
  }

  std::vector<std::size_t> candidates;
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (seen.insert(lines[i]).second) candidates.push_back(i);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](std::size_t a, std::size_t b) { return combined[a] > combined[b]; });
  candidates.resize(std::min(k, candidates.size()));
  std::sort(candidates.begin(), candidates.end());

  Summary summary;
  summary.line_indices = candidates;
  for (auto i : candidates) summary.lines.push_back(lines[i]);
  return summary;
}

Summary summarize(const Song& song, ScorerSet scorers, const LdaModel* topics, const SummaryOptions& options) {
  if (scorers.empty()) throw std::invalid_argument("at least one scorer is required");
  if (scorers.contains(Scorer::Topic) && topics == nullptr) {
    throw std::invalid_argument("summarizer.Topic requires topics model");
  }
  const auto lines = song.lines();
  if (lines.empty()) return {};
  std::vector<std::vector<double>> raw;
  if (scorers.contains(Scorer::Rank)) raw.push_back(rank_scores(line_ssm(song), options.rank));
  if (scorers.contains(Scorer::Topic)) raw.push_back(topic_scores(song, *topics, options.inference));
  if (scorers.contains(Scorer::Fit)) raw.push_back(fitness_scores(song, options.family_threshold));
  return select_summary(lines, raw, options.lines);
}

}  // namespace lyrica
