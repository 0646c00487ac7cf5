#include "lyrica/explicit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "json_util.hpp"
#include "lyrica/error.hpp"
#include "lyrica/text.hpp"

namespace lyrica {

std::vector<std::string> explicit_tokens(std::string_view text) {
  auto tokens = word_tokens(text);
  std::erase_if(tokens, [](const std::string& t) { return t.size() < 2; });
  return tokens;
}

std::vector<std::string> explicit_tokens(const Song& song) {
  std::vector<std::string> out;
  for (const auto& segment : song.segments) {
    for (const auto& line : segment) {
      auto tokens = explicit_tokens(line);
      out.insert(out.end(), std::make_move_iterator(tokens.begin()), std::make_move_iterator(tokens.end()));
    }
  }
  return out;
}

Dictionary::Dictionary(std::vector<DictionaryEntry> entries, DictionaryConfig config)
    : entries_(std::move(entries)), config_(config) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& term = entries_[i].term;
    if (term.empty() || fold_case(term) != term) {
      throw std::invalid_argument("dictionary terms must be non-empty and lowercase");
    }
    if (i > 0 && entries_[i].score > entries_[i - 1].score) {
      throw std::invalid_argument("dictionary scores must be non-increasing");
    }
    if (!lookup_.insert(term).second) throw std::invalid_argument("duplicate dictionary term '" + term + "'");
  }
}

std::vector<std::string> Dictionary::terms() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.term);
  return out;
}

std::vector<LabelledDocument> labelled_documents(const Corpus& corpus) {
  std::vector<LabelledDocument> docs;
  for (const auto& song : corpus) {
    if (song.explicit_gold == Explicitness::Unknown) continue;
    docs.push_back({explicit_tokens(song), song.explicit_gold == Explicitness::Explicit});
  }
  return docs;
}

namespace {

void require_both_classes(std::span<const LabelledDocument> docs) {
  const auto explicit_count = std::count_if(docs.begin(), docs.end(), [](const auto& d) { return d.is_explicit; });
  if (explicit_count == 0 || explicit_count == static_cast<std::ptrdiff_t>(docs.size())) {
    throw DataError("training data needs both explicit and clean examples");
  }
}

}  // namespace

Dictionary induce_dictionary(std::span<const LabelledDocument> docs, std::size_t n, const DictionaryConfig& config) {
  if (n == 0) throw std::invalid_argument("dictionary size must be positive");
  require_both_classes(docs);

  struct Counts {
    std::size_t explicit_docs = 0;
    std::size_t clean_docs = 0;
  };
  std::map<std::string, Counts> df;
  double n_explicit = 0.0;
  double n_clean = 0.0;
  for (const auto& doc : docs) {
    (doc.is_explicit ? n_explicit : n_clean) += 1.0;
    std::set<std::string_view> seen(doc.tokens.begin(), doc.tokens.end());
    for (auto term : seen) {
      auto& c = df[std::string(term)];
      ++(doc.is_explicit ? c.explicit_docs : c.clean_docs);
    }
  }

  const double a = config.prior;
  std::vector<DictionaryEntry> scored;
  for (const auto& [term, c] : df) {
    if (c.explicit_docs + c.clean_docs < config.min_document_frequency) continue;
    const double e = static_cast<double>(c.explicit_docs);
    const double k = static_cast<double>(c.clean_docs);
    const double score = std::log((e + a) / (n_explicit - e + a)) - std::log((k + a) / (n_clean - k + a));
    scored.push_back({term, score});
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& x, const auto& y) { return x.score > y.score; });  // map order is lexicographic
  if (scored.size() > n) scored.resize(n);
  return Dictionary(std::move(scored), config);
}

Dictionary induce_dictionary(const Corpus& corpus, std::size_t n, const DictionaryConfig& config) {
  return induce_dictionary(labelled_documents(corpus), n, config);
}

bool lookup_classify(std::span<const std::string> tokens, const Dictionary& dictionary) {
  return std::any_of(tokens.begin(), tokens.end(), [&](const auto& t) { return dictionary.contains(t); });
}

bool lookup_classify(const Song& song, const Dictionary& dictionary) {
  return lookup_classify(explicit_tokens(song), dictionary);
}

std::string_view to_string(ExplicitMethod method) {
  return method == ExplicitMethod::DictionaryRegression ? "dictionary_regression" : "tfidf_regression";
}

ExplicitMethod parse_explicit_method(std::string_view text) {
  if (text == "dictionary_regression" || text == "dictreg") return ExplicitMethod::DictionaryRegression;
  if (text == "tfidf_regression" || text == "tfidf") return ExplicitMethod::TfidfRegression;
  throw std::invalid_argument("unknown explicit method '" + std::string(text) + "'");
}

double ExplicitClassifier::probability(std::span<const std::string> tokens) const {
  return sigmoid(model.score(space.transform(tokens)));
}

double ExplicitClassifier::probability(const Song& song) const { return probability(explicit_tokens(song)); }

namespace {

ExplicitClassifier fit(ExplicitMethod method, BowSpace space, std::span<const LabelledDocument> docs,
                       const ExplicitTrainOptions& options) {
  std::vector<SparseVector> rows;
  std::vector<double> labels;
  rows.reserve(docs.size());
  for (const auto& doc : docs) {
    rows.push_back(space.transform(doc.tokens));
    labels.push_back(doc.is_explicit ? 1.0 : 0.0);
  }
  ExplicitClassifier classifier;
  classifier.method = method;
  classifier.model = train_logistic(rows, labels, space.dimension(),
                                    {.l2 = options.l2, .iterations = options.iterations, .seed = options.seed});
  classifier.space = std::move(space);
  return classifier;
}

}  // namespace

ExplicitClassifier train_dictionary_regression(std::span<const LabelledDocument> docs, const Dictionary& dictionary,
                                               const ExplicitTrainOptions& options) {
  require_both_classes(docs);
  return fit(ExplicitMethod::DictionaryRegression, BowSpace::over_terms(dictionary.terms()), docs, options);
}

ExplicitClassifier train_dictionary_regression(const Corpus& corpus, const Dictionary& dictionary,
                                               const ExplicitTrainOptions& options) {
  return train_dictionary_regression(labelled_documents(corpus), dictionary, options);
}

ExplicitClassifier train_tfidf_regression(std::span<const LabelledDocument> docs,
                                          const ExplicitTrainOptions& options) {
  require_both_classes(docs);
  std::vector<std::vector<std::string>> token_lists;
  token_lists.reserve(docs.size());
  for (const auto& doc : docs) token_lists.push_back(doc.tokens);
  return fit(ExplicitMethod::TfidfRegression, BowSpace::fit(token_lists, Weighting::TfIdf), docs, options);
}

ExplicitClassifier train_tfidf_regression(const Corpus& corpus, const ExplicitTrainOptions& options) {
  return train_tfidf_regression(labelled_documents(corpus), options);
}

namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : 100.0 * static_cast<double>(num) / static_cast<double>(den);
}

ClassScores class_scores(std::size_t tp, std::size_t predicted, std::size_t actual) {
  ClassScores s;
  s.precision = ratio(tp, predicted);
  s.recall = ratio(tp, actual);
  if (s.precision + s.recall > 0) s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

}  // namespace

MacroPrf evaluate_explicit(const std::vector<bool>& predicted, const std::vector<bool>& gold) {
  if (predicted.size() != gold.size()) throw std::invalid_argument("prediction and gold lengths differ");
  if (gold.empty()) throw std::invalid_argument("nothing to evaluate");
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (predicted[i] && gold[i]) ++tp;
    if (predicted[i] && !gold[i]) ++fp;
    if (!predicted[i] && gold[i]) ++fn;
    if (!predicted[i] && !gold[i]) ++tn;
  }
  MacroPrf out;
  out.explicit_class = class_scores(tp, tp + fp, tp + fn);
  out.clean = class_scores(tn, tn + fn, tn + fp);
  out.precision = 0.5 * (out.explicit_class.precision + out.clean.precision);
  out.recall = 0.5 * (out.explicit_class.recall + out.clean.recall);
  out.f1 = 0.5 * (out.explicit_class.f1 + out.clean.f1);
  return out;
}

std::string dictionary_to_json(const Dictionary& dictionary) {
  detail::Json j;
  j["version"] = detail::kModelFormatVersion;
  j["config"] = {{"prior", dictionary.config().prior},
                 {"min_document_frequency", dictionary.config().min_document_frequency}};
  auto entries = detail::Json::array();
  for (const auto& e : dictionary.entries()) entries.push_back({{"term", e.term}, {"score", e.score}});
  j["entries"] = std::move(entries);
  return j.dump(1);
}

Dictionary dictionary_from_json(const std::string& text) {
  const auto j = detail::parse_json(text, "dictionary");
  detail::check_version(j, "dictionary");
  return detail::guarded("dictionary", [&] {
    DictionaryConfig config;
    config.prior = j.at("config").at("prior").get<double>();
    config.min_document_frequency = j.at("config").at("min_document_frequency").get<std::size_t>();
    std::vector<DictionaryEntry> entries;
    for (const auto& e : j.at("entries")) entries.push_back({e.at("term").get<std::string>(), e.at("score").get<double>()});
    try {
      return Dictionary(std::move(entries), config);
    } catch (const std::invalid_argument& e) {
      throw DataError(std::string("dictionary: ") + e.what());
    }
  });
}

void save_dictionary(const std::filesystem::path& path, const Dictionary& dictionary) {
  detail::write_text_file(path, dictionary_to_json(dictionary) + "\n");
}

Dictionary load_dictionary(const std::filesystem::path& path) {
  return dictionary_from_json(detail::read_text_file(path));
}

std::string explicit_classifier_to_json(const ExplicitClassifier& classifier) {
  detail::Json j;
  j["version"] = detail::kModelFormatVersion;
  j["method"] = std::string(to_string(classifier.method));
  j["space"] = detail::to_json(classifier.space);
  j["model"] = detail::to_json(classifier.model);
  return j.dump();
}

ExplicitClassifier explicit_classifier_from_json(const std::string& text) {
  const auto j = detail::parse_json(text, "explicit classifier");
  detail::check_version(j, "explicit classifier");
  return detail::guarded("explicit classifier", [&] {
    ExplicitClassifier c;
    c.method = parse_explicit_method(j.at("method").get<std::string>());
    c.space = detail::bow_space_from_json(j.at("space"));
    c.model = detail::linear_model_from_json(j.at("model"));
    if (c.model.weights.size() != c.space.dimension()) {
      throw DataError("explicit classifier: weight count does not match the feature space");
    }
    return c;
  });
}

void save_explicit_classifier(const std::filesystem::path& path, const ExplicitClassifier& classifier) {
  detail::write_text_file(path, explicit_classifier_to_json(classifier) + "\n");
}

ExplicitClassifier load_explicit_classifier(const std::filesystem::path& path) {
  return explicit_classifier_from_json(detail::read_text_file(path));
}

}  // namespace lyrica
