#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "lyrica/error.hpp"
#include "lyrica/explicit.hpp"
#include "support.hpp"

namespace lyrica {

namespace {

LabelledDocument doc(std::vector<std::string> tokens, bool is_explicit) { return {std::move(tokens), is_explicit}; }

// Counted document frequencies turned into smoothed log-odds, then sorted.
std::vector<DictionaryEntry> log_odds_oracle(const std::vector<LabelledDocument>& docs, double a,
                                             std::size_t min_df) {
  std::map<std::string, std::pair<double, double>> counts;
  double ne = 0, nc = 0;
  for (const auto& d : docs) {
    (d.is_explicit ? ne : nc) += 1;
    for (const auto& t : std::set<std::string>(d.tokens.begin(), d.tokens.end())) {
      (d.is_explicit ? counts[t].first : counts[t].second) += 1;
    }
  }
  std::vector<DictionaryEntry> out;
  for (const auto& [t, c] : counts) {
    if (c.first + c.second < static_cast<double>(min_df)) continue;
    const double pe = (c.first + a) / (ne + 2 * a);
    const double pc = (c.second + a) / (nc + 2 * a);
    out.push_back({t, std::log(pe / (1 - pe)) - std::log(pc / (1 - pc))});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.score != y.score ? x.score > y.score : x.term < y.term;
  });
  return out;
}

std::vector<LabelledDocument> random_docs(std::uint64_t seed, std::size_t n) {
  testing::Gen gen(seed);
  static const std::vector<std::string> vocab = {"love", "baby", "night", "grr", "damn", "yeah", "road", "fire",
                                                 "heart", "street", "money", "dream"};
  std::vector<LabelledDocument> docs;
  for (std::size_t i = 0; i < n; ++i) {
    const bool e = i % 3 == 0;
    std::vector<std::string> tokens;
    const auto len = gen.between(3, 12);
    for (std::size_t k = 0; k < len; ++k) {
      // Explicit documents lean towards the back half of the vocabulary.
      const auto w = e && gen.uniform() < 0.5 ? 3 + gen.below(3) : gen.below(vocab.size());
      tokens.push_back(vocab[w]);
    }
    docs.push_back(doc(std::move(tokens), e));
  }
  return docs;
}

// Explicit documents carry "grr"; everything else is shared.
std::vector<LabelledDocument> separable_docs() {
  std::vector<LabelledDocument> docs;
  for (int i = 0; i < 40; ++i) {
    const bool e = i % 4 == 0;
    std::vector<std::string> tokens{"love", i % 2 ? "night" : "day", "yeah"};
    if (e) tokens.push_back("grr");
    docs.push_back(doc(tokens, e));
  }
  return docs;
}

std::vector<bool> repeat(bool value, std::size_t n) { return std::vector<bool>(n, value); }

}  // namespace

TEST(ExplicitTokens, LowercaseAndLongEnough) {
  EXPECT_EQ(explicit_tokens("Damn, I said A b ok!"), (std::vector<std::string>{"damn", "said", "ok"}));
  const auto song = testing::make_song("s", {{"Hey You"}, {"go GO"}});
  EXPECT_EQ(explicit_tokens(song), (std::vector<std::string>{"hey", "you", "go", "go"}));
}

TEST(ExplicitEval, MajorityClass) {
  std::vector<bool> gold = repeat(false, 180);
  gold.resize(200, true);
  const auto m = evaluate_explicit(repeat(false, 200), gold);
  EXPECT_NEAR(m.precision, 45.0, 1e-9);
  EXPECT_NEAR(m.recall, 50.0, 1e-9);
  EXPECT_NEAR(m.f1, 47.368421052631575, 1e-9);
  EXPECT_NEAR(m.f1, 47.4, 0.05);
}

TEST(ExplicitEval, PerfectAndInverted) {
  std::vector<bool> gold{true, false, true, false, false, true};
  const auto perfect = evaluate_explicit(gold, gold);
  EXPECT_DOUBLE_EQ(perfect.precision, 100.0);
  EXPECT_DOUBLE_EQ(perfect.recall, 100.0);
  EXPECT_DOUBLE_EQ(perfect.f1, 100.0);
  std::vector<bool> inverted;
  for (bool g : gold) inverted.push_back(!g);
  const auto bad = evaluate_explicit(inverted, gold);
  EXPECT_DOUBLE_EQ(bad.precision, 0.0);
  EXPECT_DOUBLE_EQ(bad.recall, 0.0);
  EXPECT_DOUBLE_EQ(bad.f1, 0.0);
}

TEST(ExplicitEval, MajorityClosedForm) {
  for (double p : {0.5, 0.7, 0.9}) {
    const std::size_t n = 1000;
    const auto majority = static_cast<std::size_t>(std::lround(p * n));
    std::vector<bool> gold = repeat(false, majority);
    gold.resize(n, true);
    const auto m = evaluate_explicit(repeat(false, n), gold);
    // Majority class: precision p, recall 1. Minority class contributes 0.
    const double expected = 100.0 * (2 * p / (1 + p)) / 2;
    EXPECT_NEAR(m.f1, expected, 1e-9) << p;
  }
}

TEST(ExplicitEval, MacroIsMeanOfClassF1) {
  std::vector<bool> gold{true, true, true, false, false, false, false, false};
  std::vector<bool> pred{true, false, false, true, false, false, false, false};
  const auto m = evaluate_explicit(pred, gold);
  EXPECT_NEAR(m.explicit_class.precision, 50.0, 1e-12);
  EXPECT_NEAR(m.explicit_class.recall, 100.0 / 3, 1e-12);
  EXPECT_NEAR(m.f1, 0.5 * (m.explicit_class.f1 + m.clean.f1), 1e-12);
}

TEST(ExplicitEval, Errors) {
  EXPECT_THROW(evaluate_explicit({}, {}), std::invalid_argument);
  EXPECT_THROW(evaluate_explicit({true}, {true, false}), std::invalid_argument);
}

TEST(Dictionary, PlantedTermRankedFirst) {
  std::vector<LabelledDocument> docs;
  for (int i = 0; i < 10; ++i) docs.push_back(doc({"grr", "love", i % 2 ? "night" : "day"}, true));
  for (int i = 0; i < 10; ++i) docs.push_back(doc({"love", i % 2 ? "night" : "day"}, false));
  const auto d = induce_dictionary(docs, 4);
  ASSERT_FALSE(d.entries().empty());
  EXPECT_EQ(d.entries().front().term, "grr");
  const auto oracle = log_odds_oracle(docs, 0.5, 5);
  EXPECT_NEAR(d.entries().front().score, oracle.front().score, 1e-12);
  // Equal frequency in equal-size classes.
  for (const auto& e : d.entries()) {
    if (e.term == "love" || e.term == "night" || e.term == "day") EXPECT_NEAR(e.score, 0.0, 1e-12) << e.term;
  }
}

TEST(Dictionary, MatchesOracleOnRandomCorpora) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto docs = random_docs(seed, 90);
    const auto d = induce_dictionary(docs, 32);
    const auto oracle = log_odds_oracle(docs, 0.5, 5);
    ASSERT_EQ(d.size(), std::min<std::size_t>(32, oracle.size()));
    for (std::size_t i = 0; i < d.size(); ++i) {
      EXPECT_EQ(d.entries()[i].term, oracle[i].term) << "seed " << seed;
      EXPECT_NEAR(d.entries()[i].score, oracle[i].score, 1e-12);
    }
  }
}

TEST(Dictionary, TruncatesAndFilters) {
  const auto docs = random_docs(4, 90);
  EXPECT_EQ(induce_dictionary(docs, 3).size(), 3u);
  DictionaryConfig strict;
  strict.min_document_frequency = 1000;
  EXPECT_EQ(induce_dictionary(docs, 32, strict).size(), 0u);
  EXPECT_THROW(induce_dictionary(docs, 0), std::invalid_argument);
}

TEST(Dictionary, NeedsBothClasses) {
  const std::vector<LabelledDocument> docs{doc({"aa"}, false), doc({"bb"}, false)};
  EXPECT_THROW(induce_dictionary(docs), DataError);
}

TEST(Dictionary, RanksStableUnderDuplication) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto docs = random_docs(50 + seed, 60);
    std::vector<LabelledDocument> tenfold;
    for (int r = 0; r < 10; ++r) tenfold.insert(tenfold.end(), docs.begin(), docs.end());
    DictionaryConfig scaled;
    scaled.prior = 5.0;
    scaled.min_document_frequency = 50;
    EXPECT_EQ(induce_dictionary(docs, 32).terms(), induce_dictionary(tenfold, 32, scaled).terms());
  }
}

TEST(Dictionary, RejectsMalformedEntries) {
  EXPECT_THROW(Dictionary({{"b", 1.0}, {"a", 2.0}}, {}), std::invalid_argument);
  EXPECT_THROW(Dictionary({{"Bad", 1.0}}, {}), std::invalid_argument);
  EXPECT_THROW(Dictionary({{"a", 1.0}, {"a", 0.5}}, {}), std::invalid_argument);
}

TEST(Lookup, WholeTokensOnly) {
  const Dictionary d({{"grr", 2.0}}, {});
  EXPECT_TRUE(lookup_classify(testing::make_song("a", {{"oh GRR yes"}}), d));
  EXPECT_FALSE(lookup_classify(testing::make_song("b", {{"grrr and agrr"}}), d));
  EXPECT_FALSE(lookup_classify(testing::make_song("c", {{"grr"}}), Dictionary{}));
}

TEST(Lookup, MonotoneInDictionary) {
  testing::Gen gen(8);
  const auto docs = random_docs(8, 90);
  const auto full = induce_dictionary(docs, 32);
  for (std::size_t n = 1; n < full.size(); ++n) {
    std::vector<DictionaryEntry> prefix(full.entries().begin(), full.entries().begin() + static_cast<long>(n));
    const Dictionary small(prefix, {});
    for (const auto& d : docs) {
      if (lookup_classify(d.tokens, small)) EXPECT_TRUE(lookup_classify(d.tokens, full));
    }
  }
}

TEST(Classifier, SeparableToyIsPerfect) {
  const auto docs = separable_docs();
  const Dictionary d({{"grr", 3.0}, {"love", 0.0}}, {});
  for (const auto& clf : {train_dictionary_regression(docs, d), train_tfidf_regression(docs)}) {
    std::vector<bool> pred, gold;
    for (const auto& x : docs) {
      pred.push_back(clf.probability(x.tokens) >= 0.5);
      gold.push_back(x.is_explicit);
    }
    EXPECT_DOUBLE_EQ(evaluate_explicit(pred, gold).f1, 100.0) << to_string(clf.method);
  }
}

TEST(Classifier, NoDictionaryTermsMeansMajority) {
  const auto docs = separable_docs();
  const Dictionary d({{"absent", 1.0}}, {});
  const auto clf = train_dictionary_regression(docs, d);
  for (const auto& x : docs) EXPECT_LT(clf.probability(x.tokens), 0.5);
  EXPECT_DOUBLE_EQ(clf.model.weights[0], 0.0);
}

TEST(Classifier, LargePenaltyGivesSmallWeights) {
  const auto docs = separable_docs();
  ExplicitTrainOptions options;
  options.l2 = 1e7;
  const auto clf = train_tfidf_regression(docs, options);
  for (double w : clf.model.weights) EXPECT_LT(std::abs(w), 1e-4);
}

TEST(Classifier, UnseenTermsIgnored) {
  const auto clf = train_tfidf_regression(separable_docs());
  const std::vector<std::string> a{"love", "grr"};
  const std::vector<std::string> b{"love", "grr", "zzzunseen"};
  EXPECT_DOUBLE_EQ(clf.probability(a), clf.probability(b));
}

TEST(Classifier, MethodNames) {
  EXPECT_EQ(parse_explicit_method("tfidf"), ExplicitMethod::TfidfRegression);
  EXPECT_EQ(parse_explicit_method("dictionary_regression"), ExplicitMethod::DictionaryRegression);
  EXPECT_THROW(parse_explicit_method("lookup"), std::invalid_argument);
}

TEST(ExplicitPersistence, RoundTrips) {
  const auto docs = random_docs(12, 90);
  const auto d = induce_dictionary(docs);
  const auto d2 = dictionary_from_json(dictionary_to_json(d));
  EXPECT_EQ(d2.entries(), d.entries());
  EXPECT_EQ(d2.config().min_document_frequency, d.config().min_document_frequency);

  for (const auto& clf : {train_dictionary_regression(docs, d), train_tfidf_regression(docs)}) {
    const auto back = explicit_classifier_from_json(explicit_classifier_to_json(clf));
    EXPECT_EQ(back.method, clf.method);
    EXPECT_EQ(back.space, clf.space);
    EXPECT_EQ(back.model, clf.model);
    for (const auto& x : docs) EXPECT_EQ(back.probability(x.tokens), clf.probability(x.tokens));
  }
  EXPECT_THROW(dictionary_from_json("{}"), DataError);
  EXPECT_THROW(explicit_classifier_from_json("not json"), DataError);
}

}  // namespace lyrica
