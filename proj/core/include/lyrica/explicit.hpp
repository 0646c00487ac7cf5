#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lyrica/bow.hpp"
#include "lyrica/corpus.hpp"
#include "lyrica/linear_model.hpp"

namespace lyrica {

/// Lower-cased alphanumeric tokens of length two or more.
std::vector<std::string> explicit_tokens(std::string_view text);
std::vector<std::string> explicit_tokens(const Song& song);

struct DictionaryConfig {
  /// Symmetric Dirichlet pseudo-count added to every document-frequency cell.
  double prior = 0.5;
  std::size_t min_document_frequency = 5;
};

struct DictionaryEntry {
  std::string term;
  double score = 0.0;

  friend bool operator==(const DictionaryEntry&, const DictionaryEntry&) = default;
};

/// Ranked explicit-term list, scores non-increasing.
class Dictionary {
 public:
  Dictionary() = default;
  Dictionary(std::vector<DictionaryEntry> entries, DictionaryConfig config);

  const std::vector<DictionaryEntry>& entries() const { return entries_; }
  const DictionaryConfig& config() const { return config_; }
  std::size_t size() const { return entries_.size(); }
  bool contains(std::string_view term) const { return lookup_.contains(std::string(term)); }
  std::vector<std::string> terms() const;

 private:
  std::vector<DictionaryEntry> entries_;
  DictionaryConfig config_;
  std::unordered_set<std::string> lookup_;
};

/// A tokenised document with a binary explicit label.
struct LabelledDocument {
  std::vector<std::string> tokens;
  bool is_explicit = false;
};

/// Songs whose gold label is explicit or clean.
std::vector<LabelledDocument> labelled_documents(const Corpus& corpus);

/// Top-n terms by document-level log-odds of appearing in explicit versus
/// clean documents, over terms with enough document frequency. Ties are
/// broken lexicographically. Throws DataError unless both classes occur.
Dictionary induce_dictionary(std::span<const LabelledDocument> docs, std::size_t n = 32,
                             const DictionaryConfig& config = {});
Dictionary induce_dictionary(const Corpus& corpus, std::size_t n = 32, const DictionaryConfig& config = {});

/// Explicit iff any whole token of the text is in the dictionary.
bool lookup_classify(std::span<const std::string> tokens, const Dictionary& dictionary);
bool lookup_classify(const Song& song, const Dictionary& dictionary);

enum class ExplicitMethod { DictionaryRegression, TfidfRegression };

std::string_view to_string(ExplicitMethod method);
ExplicitMethod parse_explicit_method(std::string_view text);

/// Logistic classifier over a bag-of-words space.
struct ExplicitClassifier {
  ExplicitMethod method = ExplicitMethod::TfidfRegression;
  BowSpace space;
  LinearModel model;

  double probability(std::span<const std::string> tokens) const;
  double probability(const Song& song) const;
  bool predict(const Song& song) const { return probability(song) >= 0.5; }
};

struct ExplicitTrainOptions {
  double l2 = 1.0;
  int iterations = 500;
  std::uint64_t seed = 23;
};

/// Raw term counts restricted to the dictionary terms.
ExplicitClassifier train_dictionary_regression(std::span<const LabelledDocument> docs, const Dictionary& dictionary,
                                               const ExplicitTrainOptions& options = {});
ExplicitClassifier train_dictionary_regression(const Corpus& corpus, const Dictionary& dictionary,
                                               const ExplicitTrainOptions& options = {});

/// L2-normalised tf-idf rows over the full training vocabulary.
ExplicitClassifier train_tfidf_regression(std::span<const LabelledDocument> docs,
                                          const ExplicitTrainOptions& options = {});
ExplicitClassifier train_tfidf_regression(const Corpus& corpus, const ExplicitTrainOptions& options = {});

struct ClassScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Percentages. Macro values are plain means of the two per-class values.
struct MacroPrf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  ClassScores clean;
  ClassScores explicit_class;
};

/// `true` means explicit. Throws std::invalid_argument on empty or unequal
/// inputs.
MacroPrf evaluate_explicit(const std::vector<bool>& predicted, const std::vector<bool>& gold);

std::string dictionary_to_json(const Dictionary& dictionary);
Dictionary dictionary_from_json(const std::string& text);
void save_dictionary(const std::filesystem::path& path, const Dictionary& dictionary);
Dictionary load_dictionary(const std::filesystem::path& path);

std::string explicit_classifier_to_json(const ExplicitClassifier& classifier);
ExplicitClassifier explicit_classifier_from_json(const std::string& text);
void save_explicit_classifier(const std::filesystem::path& path, const ExplicitClassifier& classifier);
ExplicitClassifier load_explicit_classifier(const std::filesystem::path& path);

}  // namespace lyrica
