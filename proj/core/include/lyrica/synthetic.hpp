#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lyrica/corpus.hpp"
#include "lyrica/topics.hpp"

namespace lyrica::synthetic {

/// Pronounceable lower-case pseudo-words (consonant-vowel syllables, no 'x'
/// or 'z'), distinct, in a seeded order.
std::vector<std::string> pseudo_words(std::size_t count, std::uint64_t seed);

struct StructuredOptions {
  std::size_t songs = 500;
  /// High repetition: a chorus recurring at least three times and one word
  /// motif per segment. Low repetition: no repeated segments, every line
  /// drawn from the shared vocabulary.
  bool high_repetition = true;
  std::uint64_t seed = 1;
};

Corpus structured_corpus(const StructuredOptions& options);

struct ExplicitOptions {
  std::size_t songs = 5000;
  double explicit_fraction = 0.1;
  /// Planted terms are drawn with Zipf-like frequencies, like real profanity.
  std::size_t planted_terms = 32;
  /// Planted-term tokens per explicit song, drawn uniformly from this range.
  std::size_t min_planted = 2;
  std::size_t max_planted = 4;
  /// Extra planted tokens dropped into clean songs, as a fraction of all
  /// planted occurrences.
  double leakage = 0.05;
  std::uint64_t seed = 1;
};

struct ExplicitCorpus {
  Corpus corpus;
  std::vector<std::string> planted_terms;
};

ExplicitCorpus explicit_corpus(const ExplicitOptions& options);

struct TopicOptions {
  std::size_t documents = 2000;
  std::size_t topics = 4;
  /// Fewer than the ten top words, so a merged topic must mix planted sets.
  std::size_t words_per_topic = 6;
  std::size_t document_length = 40;
  /// Probability that a token comes from the background vocabulary.
  double noise = 0.2;
  std::size_t background_words = 300;
  std::uint64_t seed = 1;
};

struct TopicCorpus {
  std::vector<Document> documents;
  std::vector<std::size_t> true_topic;
  std::vector<std::vector<std::string>> topic_words;
};

/// Every document draws its non-noise tokens from a single planted topic.
TopicCorpus topic_corpus(const TopicOptions& options);

struct EmotionOptions {
  std::size_t songs = 600;
  std::size_t signal_tokens = 24;
  std::size_t filler_tokens = 36;
  std::uint64_t seed = 1;
};

/// Valence is the balance of "joy" against "pain" words and arousal the
/// balance of "energy" against "calm" words, both exact linear functions of
/// the word counts. The word lists do not depend on the seed.
Corpus emotion_corpus(const EmotionOptions& options);

struct FullOptions {
  std::size_t songs = 10000;
  std::uint64_t seed = 1;
};

/// Mixed corpus with every metadata field populated, for end-to-end runs.
Corpus full_corpus(const FullOptions& options);

}  // namespace lyrica::synthetic
