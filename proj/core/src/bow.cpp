#include "lyrica/bow.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace lyrica {

BowSpace BowSpace::fit(std::span<const std::vector<std::string>> docs, Weighting weighting) {
  std::map<std::string, std::size_t> df;
  for (const auto& doc : docs) {
    std::set<std::string_view> seen(doc.begin(), doc.end());
    for (auto term : seen) ++df[std::string(term)];
  }
  BowSpace space;
  space.document_count_ = docs.size();
  space.terms_.reserve(df.size());
  for (const auto& [term, count] : df) space.terms_.push_back(term);
  if (weighting == Weighting::TfIdf) {
    std::vector<double> idf;
    idf.reserve(df.size());
    const double n = static_cast<double>(docs.size());
    for (const auto& [term, count] : df) {
      idf.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(count))) + 1.0);
    }
    space.idf_ = std::move(idf);
  }
  space.build_index();
  return space;
}

BowSpace BowSpace::over_terms(std::vector<std::string> terms) {
  BowSpace space;
  space.terms_ = std::move(terms);
  space.build_index();
  if (space.columns_.size() != space.terms_.size()) {
    throw std::invalid_argument("BowSpace: duplicate terms");
  }
  return space;
}

BowSpace BowSpace::restore(std::vector<std::string> terms, std::optional<std::vector<double>> idf,
                           std::size_t document_count) {
  if (idf && idf->size() != terms.size()) throw std::invalid_argument("BowSpace: idf size mismatch");
  BowSpace space = over_terms(std::move(terms));
  space.idf_ = std::move(idf);
  space.document_count_ = document_count;
  return space;
}

void BowSpace::build_index() {
  columns_.clear();
  columns_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    columns_.emplace(terms_[i], static_cast<std::uint32_t>(i));
  }
}

std::optional<std::uint32_t> BowSpace::column(std::string_view term) const {
  auto it = columns_.find(std::string(term));
  if (it == columns_.end()) return std::nullopt;
  return it->second;
}

SparseVector BowSpace::transform(std::span<const std::string> tokens) const {
  std::map<std::uint32_t, double> counts;
  for (const auto& token : tokens) {
    if (auto col = column(token)) counts[*col] += 1.0;
  }
  SparseVector row;
  row.reserve(counts.size());
  for (const auto& [col, count] : counts) row.push_back({col, count});
  if (idf_) {
    double norm = 0.0;
    for (auto& e : row) {
      e.value *= (*idf_)[e.index];
      norm += e.value * e.value;
    }
    if (norm > 0.0) {
      norm = std::sqrt(norm);
      for (auto& e : row) e.value /= norm;
    }
  }
  return row;
}

}  // namespace lyrica
