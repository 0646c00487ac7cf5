#include "lyrica/emotion.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json_util.hpp"
#include "lyrica/error.hpp"
#include "lyrica/text.hpp"

namespace lyrica {

VALexicon read_lexicon(std::istream& in, std::string_view source) {
  VALexicon lexicon;
  bool have_scale = false;
  std::string raw;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw DataError(std::string(source) + ": line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim_right(raw);
    if (trim(line).empty()) continue;
    if (line.starts_with("#scale")) {
      if (have_scale || !lexicon.entries.empty()) fail("#scale must appear once, before the entries");
      std::istringstream header{std::string(line.substr(6))};
      if (!(header >> lexicon.source_low >> lexicon.source_high) || !(lexicon.source_low < lexicon.source_high)) {
        fail("expected \"#scale lo hi\" with lo < hi");
      }
      have_scale = true;
      continue;
    }
    if (line.starts_with('#')) continue;
    if (!have_scale) fail("missing \"#scale lo hi\" header");

    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      auto tab = line.find('\t', start);
      fields.emplace_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 3) fail("expected term<TAB>valence<TAB>arousal");
    const auto term = fold_case(trim(fields[0]));
    if (term.empty()) fail("empty term");
    double values[2];
    for (int k = 0; k < 2; ++k) {
      try {
        std::size_t used = 0;
        values[k] = std::stod(fields[k + 1], &used);
        if (used != fields[k + 1].size() || !std::isfinite(values[k])) throw std::invalid_argument("");
      } catch (const std::exception&) {
        fail("invalid number '" + fields[k + 1] + "'");
      }
      if (values[k] < lexicon.source_low || values[k] > lexicon.source_high) fail("value outside the declared scale");
      values[k] = -1.0 + 2.0 * (values[k] - lexicon.source_low) / (lexicon.source_high - lexicon.source_low);
      values[k] = std::clamp(values[k], -1.0, 1.0);
    }
    if (!lexicon.entries.emplace(term, VAPoint{values[0], values[1]}).second) fail("duplicate term '" + term + "'");
  }
  if (!have_scale) throw DataError(std::string(source) + ": missing \"#scale lo hi\" header");
  return lexicon;
}

VALexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open lexicon " + path.string());
  return read_lexicon(in, path.string());
}

std::optional<VAPoint> tags_to_va(std::span<const std::string> tags, const VALexicon& lexicon) {
  std::set<std::string> distinct;
  for (const auto& tag : tags) distinct.insert(fold_case(tag));
  double valence = 0.0;
  double arousal = 0.0;
  std::size_t hits = 0;
  for (const auto& tag : distinct) {
    auto it = lexicon.entries.find(tag);
    if (it == lexicon.entries.end()) continue;
    valence += it->second.valence;
    arousal += it->second.arousal;
    ++hits;
  }
  if (hits == 0) return std::nullopt;
  return VAPoint{valence / static_cast<double>(hits), arousal / static_cast<double>(hits)};
}

Correlation pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("correlation inputs differ in length");
  if (x.size() < 2) throw std::invalid_argument("correlation needs at least two values");
  auto constant = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double a) { return a == v.front(); });
  };
  if (constant(x) || constant(y)) return {0.0, true};
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) return {0.0, true};
  return {std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0), false};
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

Correlation spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("correlation inputs differ in length");
  if (x.size() < 2) throw std::invalid_argument("correlation needs at least two values");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson(rx, ry);
}

VAPoint VARegressor::predict(const Song& song) const {
  const auto tokens = word_tokens(song.lyrics());
  const auto row = space.transform(tokens);
  return {std::clamp(valence.score(row), -1.0, 1.0), std::clamp(arousal.score(row), -1.0, 1.0)};
}

VARegressor train_va_regressor(const Corpus& corpus, const RidgeOptions& options) {
  std::vector<std::vector<std::string>> docs;
  std::vector<double> valence, arousal;
  for (const auto& song : corpus) {
    if (!song.va_gold) continue;
    docs.push_back(word_tokens(song.lyrics()));
    valence.push_back(song.va_gold->valence);
    arousal.push_back(song.va_gold->arousal);
  }
  if (docs.size() < kMinimumVATrainingSongs) {
    throw DataError("emotion regression needs at least " + std::to_string(kMinimumVATrainingSongs) +
                    " songs with valence/arousal, found " + std::to_string(docs.size()));
  }
  VARegressor regressor;
  regressor.space = BowSpace::fit(docs, Weighting::TfIdf);
  std::vector<SparseVector> rows;
  rows.reserve(docs.size());
  for (const auto& doc : docs) rows.push_back(regressor.space.transform(doc));
  regressor.valence = train_ridge(rows, valence, regressor.space.dimension(), options);
  regressor.arousal = train_ridge(rows, arousal, regressor.space.dimension(), options);
  return regressor;
}

VAEvaluation evaluate_va_regressor(const VARegressor& regressor, const Corpus& corpus) {
  std::vector<double> pv, pa, gv, ga;
  for (const auto& song : corpus) {
    if (!song.va_gold) continue;
    const auto p = regressor.predict(song);
    pv.push_back(p.valence);
    pa.push_back(p.arousal);
    gv.push_back(song.va_gold->valence);
    ga.push_back(song.va_gold->arousal);
  }
  VAEvaluation eval;
  eval.songs = gv.size();
  if (gv.size() < 2) return eval;
  eval.valence_pearson = pearson(pv, gv);
  eval.valence_spearman = spearman(pv, gv);
  eval.arousal_pearson = pearson(pa, ga);
  eval.arousal_spearman = spearman(pa, ga);
  return eval;
}

std::string va_regressor_to_json(const VARegressor& regressor) {
  detail::Json j;
  j["version"] = detail::kModelFormatVersion;
  j["space"] = detail::to_json(regressor.space);
  j["valence"] = detail::to_json(regressor.valence);
  j["arousal"] = detail::to_json(regressor.arousal);
  return j.dump();
}

VARegressor va_regressor_from_json(const std::string& text) {
  const auto j = detail::parse_json(text, "emotion model");
  detail::check_version(j, "emotion model");
  return detail::guarded("emotion model", [&] {
    VARegressor r;
    r.space = detail::bow_space_from_json(j.at("space"));
    r.valence = detail::linear_model_from_json(j.at("valence"));
    r.arousal = detail::linear_model_from_json(j.at("arousal"));
    if (r.valence.weights.size() != r.space.dimension() || r.arousal.weights.size() != r.space.dimension()) {
      throw DataError("emotion model: weight count does not match the feature space");
    }
    return r;
  });
}

void save_va_regressor(const std::filesystem::path& path, const VARegressor& regressor) {
  detail::write_text_file(path, va_regressor_to_json(regressor) + "\n");
}

VARegressor load_va_regressor(const std::filesystem::path& path) {
  return va_regressor_from_json(detail::read_text_file(path));
}

}  // namespace lyrica
