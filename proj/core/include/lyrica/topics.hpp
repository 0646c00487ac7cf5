#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lyrica/corpus.hpp"

namespace lyrica {

/// Lower-cased word tokens with English stopwords and tokens shorter than
/// three characters removed.
std::vector<std::string> preprocess(std::string_view text);
std::vector<std::string> preprocess(const Song& song);

using Document = std::vector<std::string>;

/// K probabilities summing to one.
using TopicDistribution = std::vector<double>;

struct LdaConfig {
  std::size_t topics = 60;
  double alpha = 0.1;
  double eta = 0.01;
  int iterations = 200;
  std::uint64_t seed = 1;
};

/// Topic-word counts from the final Gibbs sweep plus the hyperparameters
/// needed to turn them into distributions.
class LdaModel {
 public:
  LdaModel() = default;
  /// `topic_word` is K x V row-major.
  LdaModel(std::size_t topics, double alpha, double eta, std::vector<std::string> vocabulary,
           std::vector<std::uint32_t> topic_word, std::uint64_t seed, int iterations);

  std::size_t topic_count() const { return topics_; }
  std::size_t vocabulary_size() const { return vocabulary_.size(); }
  double alpha() const { return alpha_; }
  double eta() const { return eta_; }
  std::uint64_t seed() const { return seed_; }
  int iterations() const { return iterations_; }
  const std::vector<std::string>& vocabulary() const { return vocabulary_; }
  std::span<const std::uint32_t> topic_word_counts() const { return topic_word_; }
  std::uint32_t count(std::size_t topic, std::size_t word) const {
    return topic_word_[topic * vocabulary_.size() + word];
  }
  std::uint64_t topic_total(std::size_t topic) const { return topic_totals_[topic]; }

  std::optional<std::uint32_t> word_id(std::string_view word) const;
  /// (n_kw + eta) / (n_k + V eta).
  double word_probability(std::size_t topic, std::size_t word) const;

  friend bool operator==(const LdaModel& a, const LdaModel& b) {
    return a.topics_ == b.topics_ && a.alpha_ == b.alpha_ && a.eta_ == b.eta_ &&
           a.vocabulary_ == b.vocabulary_ && a.topic_word_ == b.topic_word_ && a.seed_ == b.seed_ &&
           a.iterations_ == b.iterations_;
  }

 private:
  std::size_t topics_ = 0;
  double alpha_ = 0.1;
  double eta_ = 0.01;
  std::vector<std::string> vocabulary_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::uint32_t> topic_word_;
  std::vector<std::uint64_t> topic_totals_;
  std::uint64_t seed_ = 0;
  int iterations_ = 0;
};

/// Called after every Gibbs sweep with the current K x V counts, per-topic
/// totals and the corpus token count.
using LdaObserver = std::function<void(int iteration, std::span<const std::uint32_t> topic_word,
                                       std::span<const std::uint64_t> topic_totals,
                                       std::size_t token_count)>;

/// Collapsed Gibbs sampling. The vocabulary is the sorted set of all tokens;
/// a fixed seed reproduces the same counts bit for bit.
LdaModel train_lda(std::span<const Document> docs, const LdaConfig& config,
                   const LdaObserver& observer = {});

struct InferOptions {
  int iterations = 50;
  std::uint64_t seed = 1;
};

/// Gibbs inference against frozen topic-word counts. The sampler seed mixes
/// `options.seed` with the token content, so results do not depend on call
/// order. Empty or fully out-of-vocabulary input gives the uniform
/// distribution.
TopicDistribution infer_topics(const LdaModel& model, std::span<const std::string> tokens,
                               const InferOptions& options = {});

/// The m most probable words of a topic, ties broken lexicographically.
std::vector<std::string> top_words(const LdaModel& model, std::size_t topic, std::size_t m = 10);

/// UMass coherence averaged over topics, with document co-occurrence counted
/// on `reference`. Pairs whose conditioning word never occurs are skipped.
double coherence(const LdaModel& model, std::span<const Document> reference, std::size_t top_n = 10);

struct HyperparameterGrid {
  std::vector<std::size_t> topics{20, 40, 60, 80};
  std::vector<double> alphas{0.1, 0.5};
  std::vector<double> etas{0.01, 0.1};
};

struct SelectionOptions {
  int iterations = 100;
  std::uint64_t seed = 1;
  std::size_t subset_cap = 200000;
  std::size_t top_n = 10;
};

struct GridCell {
  std::size_t topics = 0;
  double alpha = 0.0;
  double eta = 0.0;
  std::uint64_t seed = 0;
  double coherence = 0.0;
};

struct SelectionResult {
  GridCell best;
  /// Every cell in (K, alpha, eta) order.
  std::vector<GridCell> cells;
};

/// Trains one model per grid cell and keeps the most coherent; ties go to
/// the smallest K, then alpha, then eta.
SelectionResult select_hyperparameters(std::span<const Document> docs, const HyperparameterGrid& grid,
                                       const SelectionOptions& options = {});

std::string lda_to_json(const LdaModel& model);
LdaModel lda_from_json(const std::string& text);
void save_lda(const std::filesystem::path& path, const LdaModel& model);
LdaModel load_lda(const std::filesystem::path& path);

}  // namespace lyrica
