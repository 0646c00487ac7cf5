#include "lyrica/topics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "json_util.hpp"
#include "lyrica/error.hpp"
#include "lyrica/stopwords.hpp"
#include "lyrica/text.hpp"

namespace lyrica {

std::vector<std::string> preprocess(std::string_view text) {
  const auto& stopwords = english_stopwords();
  std::vector<std::string> out;
  for (auto& token : word_tokens(text)) {
    if (token.size() < 3 || stopwords.contains(token)) continue;
    out.push_back(std::move(token));
  }
  return out;
}

std::vector<std::string> preprocess(const Song& song) {
  std::vector<std::string> out;
  for (const auto& segment : song.segments) {
    for (const auto& line : segment) {
      auto tokens = preprocess(line);
      out.insert(out.end(), std::make_move_iterator(tokens.begin()), std::make_move_iterator(tokens.end()));
    }
  }
  return out;
}

LdaModel::LdaModel(std::size_t topics, double alpha, double eta, std::vector<std::string> vocabulary,
                   std::vector<std::uint32_t> topic_word, std::uint64_t seed, int iterations)
    : topics_(topics),
      alpha_(alpha),
      eta_(eta),
      vocabulary_(std::move(vocabulary)),
      topic_word_(std::move(topic_word)),
      topic_totals_(topics, 0),
      seed_(seed),
      iterations_(iterations) {
  if (topics_ == 0) throw std::invalid_argument("LDA needs at least one topic");
  if (!(alpha_ > 0.0) || !(eta_ > 0.0)) throw std::invalid_argument("LDA hyperparameters must be positive");
  if (topic_word_.size() != topics_ * vocabulary_.size()) {
    throw std::invalid_argument("LDA topic-word matrix has the wrong shape");
  }
  index_.reserve(vocabulary_.size());
  for (std::size_t w = 0; w < vocabulary_.size(); ++w) {
    if (!index_.emplace(vocabulary_[w], static_cast<std::uint32_t>(w)).second) {
      throw std::invalid_argument("LDA vocabulary has duplicate words");
    }
  }
  for (std::size_t k = 0; k < topics_; ++k) {
    for (std::size_t w = 0; w < vocabulary_.size(); ++w) topic_totals_[k] += count(k, w);
  }
}

std::optional<std::uint32_t> LdaModel::word_id(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double LdaModel::word_probability(std::size_t topic, std::size_t word) const {
  const double v = static_cast<double>(vocabulary_.size());
  return (static_cast<double>(count(topic, word)) + eta_) /
         (static_cast<double>(topic_totals_[topic]) + v * eta_);
}

namespace {

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t draw(std::span<const double> cumulative, std::mt19937_64& rng) {
  const double target = uniform01(rng) * cumulative.back();
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
  return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), cumulative.size() - 1);
}

}  // namespace

LdaModel train_lda(std::span<const Document> docs, const LdaConfig& config, const LdaObserver& observer) {
  if (config.topics == 0) throw std::invalid_argument("LDA needs at least one topic");
  if (!(config.alpha > 0.0) || !(config.eta > 0.0)) {
    throw std::invalid_argument("LDA hyperparameters must be positive");
  }
  std::set<std::string_view> words;
  for (const auto& doc : docs) words.insert(doc.begin(), doc.end());
  if (words.empty()) throw DataError("LDA training corpus has an empty vocabulary");

  std::vector<std::string> vocabulary(words.begin(), words.end());
  std::unordered_map<std::string_view, std::uint32_t> ids;
  for (std::size_t w = 0; w < vocabulary.size(); ++w) ids.emplace(vocabulary[w], static_cast<std::uint32_t>(w));

  const std::size_t K = config.topics;
  const std::size_t V = vocabulary.size();
  std::vector<std::vector<std::uint32_t>> tokens(docs.size());
  std::vector<std::vector<std::uint32_t>> assignment(docs.size());
  std::vector<std::uint32_t> doc_topic(docs.size() * K, 0);
  std::vector<std::uint32_t> topic_word(K * V, 0);
  std::vector<std::uint64_t> topic_totals(K, 0);
  std::size_t token_count = 0;

  std::mt19937_64 rng(config.seed);
  for (std::size_t d = 0; d < docs.size(); ++d) {
    for (const auto& word : docs[d]) {
      const std::uint32_t w = ids.at(word);
      const auto k = static_cast<std::uint32_t>(rng() % K);
      tokens[d].push_back(w);
      assignment[d].push_back(k);
      ++doc_topic[d * K + k];
      ++topic_word[k * V + w];
      ++topic_totals[k];
      ++token_count;
    }
  }

  const double v_eta = static_cast<double>(V) * config.eta;
  std::vector<double> cumulative(K);
  for (int it = 0; it < config.iterations; ++it) {
    for (std::size_t d = 0; d < docs.size(); ++d) {
      std::uint32_t* nd = &doc_topic[d * K];
      for (std::size_t i = 0; i < tokens[d].size(); ++i) {
        const std::uint32_t w = tokens[d][i];
        std::uint32_t k = assignment[d][i];
        --nd[k];
        --topic_word[k * V + w];
        --topic_totals[k];

        double acc = 0.0;
        for (std::size_t t = 0; t < K; ++t) {
          acc += (nd[t] + config.alpha) * (topic_word[t * V + w] + config.eta) /
                 (static_cast<double>(topic_totals[t]) + v_eta);
          cumulative[t] = acc;
        }
        k = static_cast<std::uint32_t>(draw(cumulative, rng));

        assignment[d][i] = k;
        ++nd[k];
        ++topic_word[k * V + w];
        ++topic_totals[k];
      }
    }
    if (observer) observer(it, topic_word, topic_totals, token_count);
  }
  return LdaModel(K, config.alpha, config.eta, std::move(vocabulary), std::move(topic_word), config.seed,
                  config.iterations);
}

TopicDistribution infer_topics(const LdaModel& model, std::span<const std::string> tokens,
                               const InferOptions& options) {
  const std::size_t K = model.topic_count();
  std::vector<std::uint32_t> ids;
  std::uint64_t content_hash = 0xcbf29ce484222325ULL;
  for (const auto& token : tokens) {
    if (auto id = model.word_id(token)) {
      ids.push_back(*id);
      content_hash = fnv1a(token, content_hash);
      content_hash = fnv1a(" ", content_hash);
    }
  }
  if (ids.empty() || K == 1) return TopicDistribution(K, 1.0 / static_cast<double>(K));

  // Per-token topic likelihoods are fixed, so precompute them.
  std::vector<double> phi(ids.size() * K);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t k = 0; k < K; ++k) phi[i * K + k] = model.word_probability(k, ids[i]);
  }

  std::mt19937_64 rng(mix_seed(options.seed ^ content_hash));
  std::vector<std::uint32_t> assignment(ids.size());
  std::vector<std::uint32_t> counts(K, 0);
  for (auto& k : assignment) {
    k = static_cast<std::uint32_t>(rng() % K);
    ++counts[k];
  }

  const int iterations = std::max(options.iterations, 1);
  const int burn_in = iterations / 2;
  const double alpha = model.alpha();
  const double denom = static_cast<double>(ids.size()) + static_cast<double>(K) * alpha;
  std::vector<double> cumulative(K);
  std::vector<double> theta(K, 0.0);
  int samples = 0;
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      --counts[assignment[i]];
      double acc = 0.0;
      for (std::size_t k = 0; k < K; ++k) {
        acc += (counts[k] + alpha) * phi[i * K + k];
        cumulative[k] = acc;
      }
      const auto k = static_cast<std::uint32_t>(draw(cumulative, rng));
      assignment[i] = k;
      ++counts[k];
    }
    if (it >= burn_in) {
      for (std::size_t k = 0; k < K; ++k) theta[k] += (counts[k] + alpha) / denom;
      ++samples;
    }
  }
  double total = 0.0;
  for (auto& t : theta) {
    t /= samples;
    total += t;
  }
  for (auto& t : theta) t /= total;
  return theta;
}

std::vector<std::string> top_words(const LdaModel& model, std::size_t topic, std::size_t m) {
  if (topic >= model.topic_count()) throw std::out_of_range("topic index out of range");
  std::vector<std::uint32_t> order(model.vocabulary_size());
  std::iota(order.begin(), order.end(), 0u);
  const std::size_t keep = std::min(m, order.size());
  // The vocabulary is sorted, so the lower id wins ties lexicographically.
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                    [&](std::uint32_t a, std::uint32_t b) {
                      const auto ca = model.count(topic, a);
                      const auto cb = model.count(topic, b);
                      if (ca != cb) return ca > cb;
                      return model.vocabulary()[a] < model.vocabulary()[b];
                    });
  std::vector<std::string> out;
  out.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) out.push_back(model.vocabulary()[order[i]]);
  return out;
}

double coherence(const LdaModel& model, std::span<const Document> reference, std::size_t top_n) {
  std::vector<std::vector<std::string>> tops;
  std::map<std::string, std::vector<std::uint32_t>> postings;
  for (std::size_t k = 0; k < model.topic_count(); ++k) {
    tops.push_back(top_words(model, k, top_n));
    for (const auto& w : tops.back()) postings.emplace(w, std::vector<std::uint32_t>{});
  }
  for (std::size_t d = 0; d < reference.size(); ++d) {
    std::set<std::string_view> present(reference[d].begin(), reference[d].end());
    for (auto word : present) {
      auto it = postings.find(std::string(word));
      if (it != postings.end()) it->second.push_back(static_cast<std::uint32_t>(d));
    }
  }
  auto co_occurrence = [&](const std::string& a, const std::string& b) {
    const auto& pa = postings.at(a);
    const auto& pb = postings.at(b);
    std::size_t n = 0;
    auto ia = pa.begin();
    auto ib = pb.begin();
    while (ia != pa.end() && ib != pb.end()) {
      if (*ia < *ib) {
        ++ia;
      } else if (*ib < *ia) {
        ++ib;
      } else {
        ++n, ++ia, ++ib;
      }
    }
    return n;
  };

  double total = 0.0;
  for (const auto& words : tops) {
    double score = 0.0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        const auto dj = postings.at(words[j]).size();
        if (dj == 0) continue;
        const auto dij = co_occurrence(words[i], words[j]);
        score += std::log((static_cast<double>(dij) + 1.0) / static_cast<double>(dj));
      }
    }
    total += score;
  }
  return total / static_cast<double>(model.topic_count());
}

SelectionResult select_hyperparameters(std::span<const Document> docs, const HyperparameterGrid& grid,
                                       const SelectionOptions& options) {
  if (grid.topics.empty() || grid.alphas.empty() || grid.etas.empty()) {
    throw std::invalid_argument("hyperparameter grid is empty");
  }
  std::vector<Document> subset;
  std::span<const Document> working = docs;
  if (docs.size() > options.subset_cap) {
    std::vector<std::size_t> order(docs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(mix_seed(options.seed));
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    order.resize(options.subset_cap);
    std::sort(order.begin(), order.end());
    for (auto i : order) subset.push_back(docs[i]);
    working = subset;
  }

  auto topics = grid.topics;
  auto alphas = grid.alphas;
  auto etas = grid.etas;
  std::sort(topics.begin(), topics.end());
  std::sort(alphas.begin(), alphas.end());
  std::sort(etas.begin(), etas.end());

  SelectionResult result;
  std::uint64_t cell_index = 0;
  for (auto k : topics) {
    for (auto alpha : alphas) {
      for (auto eta : etas) {
        GridCell cell{k, alpha, eta, mix_seed(options.seed ^ mix_seed(cell_index++)), 0.0};
        const auto model = train_lda(working, {k, alpha, eta, options.iterations, cell.seed});
        cell.coherence = coherence(model, working, options.top_n);
        if (result.cells.empty() || cell.coherence > result.best.coherence) result.best = cell;
        result.cells.push_back(cell);
      }
    }
  }
  return result;
}

std::string lda_to_json(const LdaModel& model) {
  detail::Json j;
  j["version"] = detail::kModelFormatVersion;
  j["topics"] = model.topic_count();
  j["alpha"] = model.alpha();
  j["eta"] = model.eta();
  j["seed"] = model.seed();
  j["iterations"] = model.iterations();
  j["vocabulary"] = model.vocabulary();
  auto rows = detail::Json::array();
  const auto counts = model.topic_word_counts();
  for (std::size_t k = 0; k < model.topic_count(); ++k) {
    rows.push_back(std::vector<std::uint32_t>(counts.begin() + static_cast<std::ptrdiff_t>(k * model.vocabulary_size()),
                                              counts.begin() + static_cast<std::ptrdiff_t>((k + 1) * model.vocabulary_size())));
  }
  j["topic_word"] = std::move(rows);
  return j.dump();
}

LdaModel lda_from_json(const std::string& text) {
  const auto j = detail::parse_json(text, "topic model");
  detail::check_version(j, "topic model");
  return detail::guarded("topic model", [&] {
    const auto topics = j.at("topics").get<std::size_t>();
    auto vocabulary = j.at("vocabulary").get<std::vector<std::string>>();
    std::vector<std::uint32_t> counts;
    counts.reserve(topics * vocabulary.size());
    const auto& rows = j.at("topic_word");
    if (rows.size() != topics) throw DataError("topic model: topic_word row count mismatch");
    for (const auto& row : rows) {
      auto values = row.get<std::vector<std::uint32_t>>();
      if (values.size() != vocabulary.size()) throw DataError("topic model: topic_word row length mismatch");
      counts.insert(counts.end(), values.begin(), values.end());
    }
    try {
      return LdaModel(topics, j.at("alpha").get<double>(), j.at("eta").get<double>(), std::move(vocabulary),
                      std::move(counts), j.at("seed").get<std::uint64_t>(), j.at("iterations").get<int>());
    } catch (const std::invalid_argument& e) {
      throw DataError(std::string("topic model: ") + e.what());
    }
  });
}

void save_lda(const std::filesystem::path& path, const LdaModel& model) {
  detail::write_text_file(path, lda_to_json(model) + "\n");
}

LdaModel load_lda(const std::filesystem::path& path) { return lda_from_json(detail::read_text_file(path)); }

}  // namespace lyrica
