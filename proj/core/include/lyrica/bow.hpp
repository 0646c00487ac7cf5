#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lyrica/linear_model.hpp"

namespace lyrica {

enum class Weighting { Count, TfIdf };

/// Closed bag-of-words vocabulary. Count spaces emit raw term counts; tf-idf
/// spaces emit count * idf rows scaled to unit L2 norm, with
/// idf(t) = ln((1 + N) / (1 + df(t))) + 1.
class BowSpace {
 public:
  BowSpace() = default;

  /// Vocabulary is every term of `docs`, sorted.
  static BowSpace fit(std::span<const std::vector<std::string>> docs, Weighting weighting);
  /// Count space over a fixed term list (kept in the given order).
  static BowSpace over_terms(std::vector<std::string> terms);
  /// Rebuilds a persisted space.
  static BowSpace restore(std::vector<std::string> terms, std::optional<std::vector<double>> idf,
                          std::size_t document_count);

  SparseVector transform(std::span<const std::string> tokens) const;

  std::size_t dimension() const { return terms_.size(); }
  Weighting weighting() const { return idf_ ? Weighting::TfIdf : Weighting::Count; }
  const std::vector<std::string>& terms() const { return terms_; }
  const std::optional<std::vector<double>>& idf() const { return idf_; }
  std::size_t document_count() const { return document_count_; }
  std::optional<std::uint32_t> column(std::string_view term) const;

  friend bool operator==(const BowSpace& a, const BowSpace& b) {
    return a.terms_ == b.terms_ && a.idf_ == b.idf_ && a.document_count_ == b.document_count_;
  }

 private:
  void build_index();

  std::vector<std::string> terms_;
  std::unordered_map<std::string, std::uint32_t> columns_;
  std::optional<std::vector<double>> idf_;
  std::size_t document_count_ = 0;
};

}  // namespace lyrica
