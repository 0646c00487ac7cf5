#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lyrica/error.hpp"
#include "lyrica/synthetic.hpp"
#include "lyrica/topics.hpp"
#include "support.hpp"

namespace lyrica {

namespace {

std::vector<Document> two_groups(std::size_t per_group) {
  std::vector<Document> docs;
  for (std::size_t i = 0; i < per_group; ++i) {
    docs.push_back({"apple", "banana", "cherry", "apple", "date", "banana", "elder", "cherry"});
    docs.push_back({"river", "stone", "tower", "river", "unity", "stone", "valley", "tower"});
  }
  return docs;
}

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

TEST(Preprocess, Examples) {
  EXPECT_EQ(preprocess("The fire, the FIRE!"), (std::vector<std::string>{"fire", "fire"}));
  EXPECT_TRUE(preprocess("and the of you").empty());
  EXPECT_EQ(preprocess("ab cd efg"), (std::vector<std::string>{"efg"}));
  const auto song = testing::make_song("s", {{"Burning Fire"}, {"the night"}});
  EXPECT_EQ(preprocess(song), (std::vector<std::string>{"burning", "fire", "night"}));
}

TEST(Lda, CountsConserved) {
  const auto docs = two_groups(10);
  int calls = 0;
  train_lda(docs, {.topics = 3, .iterations = 20, .seed = 5},
            [&](int, std::span<const std::uint32_t> tw, std::span<const std::uint64_t> totals, std::size_t tokens) {
              ++calls;
              const auto v = tw.size() / totals.size();
              std::uint64_t all = 0;
              for (std::size_t k = 0; k < totals.size(); ++k) {
                std::uint64_t row = 0;
                for (std::size_t w = 0; w < v; ++w) row += tw[k * v + w];
                EXPECT_EQ(row, totals[k]);
                all += row;
              }
              EXPECT_EQ(all, tokens);
              EXPECT_EQ(tokens, 160u);
            });
  EXPECT_EQ(calls, 20);
}

TEST(Lda, SameSeedSameCounts) {
  const auto docs = synthetic::topic_corpus({.documents = 200, .seed = 3}).documents;
  const LdaConfig config{.topics = 4, .iterations = 30, .seed = 11};
  const auto a = train_lda(docs, config);
  const auto b = train_lda(docs, config);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(std::ranges::equal(a.topic_word_counts(), b.topic_word_counts()));
  const auto c = train_lda(docs, {.topics = 4, .iterations = 30, .seed = 12});
  EXPECT_FALSE(std::ranges::equal(a.topic_word_counts(), c.topic_word_counts()));
}

TEST(Lda, Errors) {
  const std::vector<Document> empty_docs{{}, {}};
  EXPECT_THROW(train_lda(empty_docs, {.topics = 2}), DataError);
  EXPECT_THROW(train_lda(two_groups(1), {.topics = 0}), std::invalid_argument);
}

TEST(Lda, SingleTopic) {
  const auto model = train_lda(two_groups(5), {.topics = 1, .iterations = 10});
  const std::vector<std::string> doc{"apple", "river"};
  EXPECT_EQ(infer_topics(model, doc), (TopicDistribution{1.0}));
  EXPECT_EQ(infer_topics(model, std::vector<std::string>{}), (TopicDistribution{1.0}));
}

TEST(Lda, EmptyOrUnknownIsUniform) {
  const auto model = train_lda(two_groups(5), {.topics = 4, .iterations = 10});
  const TopicDistribution uniform(4, 0.25);
  EXPECT_EQ(infer_topics(model, std::vector<std::string>{}), uniform);
  EXPECT_EQ(infer_topics(model, std::vector<std::string>{"zzz", "qqq"}), uniform);
}

TEST(Lda, SeparatesDisjointGroups) {
  const auto docs = two_groups(30);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto model = train_lda(docs, {.topics = 2, .alpha = 0.1, .eta = 0.01, .iterations = 200, .seed = seed});
    const auto a = infer_topics(model, docs[0]);
    const auto b = infer_topics(model, docs[1]);
    const std::size_t ta = a[0] > a[1] ? 0 : 1;
    const std::size_t tb = b[0] > b[1] ? 0 : 1;
    EXPECT_GE(a[ta], 0.9) << seed;
    EXPECT_GE(b[tb], 0.9) << seed;
    EXPECT_NE(ta, tb) << seed;
  }
}

TEST(Lda, DistributionsSumToOne) {
  const auto corpus = synthetic::topic_corpus({.documents = 300, .seed = 9});
  const auto model = train_lda(corpus.documents, {.topics = 6, .iterations = 30});
  for (std::size_t k = 0; k < model.topic_count(); ++k) {
    double row = 0.0;
    for (std::size_t w = 0; w < model.vocabulary_size(); ++w) row += model.word_probability(k, w);
    EXPECT_NEAR(row, 1.0, 1e-9);
  }
  for (std::size_t d = 0; d < 50; ++d) EXPECT_NEAR(sum(infer_topics(model, corpus.documents[d])), 1.0, 1e-9);
}

TEST(Lda, InferenceIndependentOfCallOrder) {
  const auto corpus = synthetic::topic_corpus({.documents = 100, .seed = 4});
  const auto model = train_lda(corpus.documents, {.topics = 4, .iterations = 30});
  const auto first = infer_topics(model, corpus.documents[7]);
  for (std::size_t d = 0; d < 10; ++d) infer_topics(model, corpus.documents[d]);
  EXPECT_EQ(infer_topics(model, corpus.documents[7]), first);
}

TEST(Lda, PlantedWordsOnTop) {
  const auto corpus = synthetic::topic_corpus({.documents = 2000, .seed = 1});
  const auto model = train_lda(corpus.documents, {.topics = 4, .alpha = 0.1, .eta = 0.01, .iterations = 100, .seed = 1});
  for (std::size_t k = 0; k < 4; ++k) {
    const auto top = top_words(model, k, 6);
    // Every topic's top words are exactly one planted topic.
    std::size_t best = 0;
    for (const auto& planted : corpus.topic_words) {
      std::size_t hits = 0;
      for (const auto& w : top) hits += std::ranges::count(planted, w);
      best = std::max(best, hits);
    }
    EXPECT_EQ(best, 6u) << k;
  }
}

TEST(TopWords, ClampsAndIsDeterministic) {
  const auto model = train_lda(two_groups(3), {.topics = 2, .iterations = 10});
  EXPECT_EQ(top_words(model, 0, 100).size(), model.vocabulary_size());
  EXPECT_EQ(top_words(model, 1, 5), top_words(model, 1, 5));
  EXPECT_THROW(top_words(model, 2, 5), std::out_of_range);
}

TEST(TopWords, TiesLexicographic) {
  const std::vector<Document> docs{{"ccc", "bbb", "aaa"}};
  const auto model = train_lda(docs, {.topics = 1, .iterations = 5});
  EXPECT_EQ(top_words(model, 0, 3), (std::vector<std::string>{"aaa", "bbb", "ccc"}));
}

TEST(Coherence, AllWordsCoOccurEverywhere) {
  std::vector<Document> docs;
  const Document words{"aaa", "bbb", "ccc", "ddd", "eee", "fff", "ggg", "hhh", "iii", "jjj"};
  for (std::size_t d = 1; d <= 30; ++d) {
    docs.push_back(words);
    const auto model = train_lda(docs, {.topics = 1, .iterations = 2});
    const double dd = static_cast<double>(d);
    EXPECT_NEAR(coherence(model, docs, 10), 45.0 * std::log((dd + 1.0) / dd), 1e-9) << d;
  }
}

TEST(Coherence, NeverCoOccurringPair) {
  const std::vector<Document> docs{{"aaa", "aaa"}, {"aaa", "aaa"}, {"aaa"}, {"bbb"}, {"bbb"}};
  const auto model = train_lda(docs, {.topics = 1, .iterations = 2});
  ASSERT_EQ(top_words(model, 0, 2), (std::vector<std::string>{"aaa", "bbb"}));
  EXPECT_NEAR(coherence(model, docs, 2), std::log(1.0 / 2.0), 1e-12);
}

TEST(Coherence, UnseenConditioningWordSkipped) {
  const std::vector<Document> docs{{"aaa", "aaa", "bbb"}};
  const auto model = train_lda(docs, {.topics = 1, .iterations = 2});
  const std::vector<Document> reference{{"aaa"}, {"aaa"}};
  EXPECT_EQ(coherence(model, reference, 2), 0.0);
}

TEST(Coherence, PermutationInvariantInDocs) {
  auto docs = synthetic::topic_corpus({.documents = 150, .seed = 6}).documents;
  const auto model = train_lda(docs, {.topics = 4, .iterations = 20});
  const double base = coherence(model, docs);
  EXPECT_LE(base, 0.0);
  testing::Gen gen(6);
  for (int trial = 0; trial < 5; ++trial) {
    for (std::size_t i = docs.size(); i > 1; --i) std::swap(docs[i - 1], docs[gen.below(i)]);
    EXPECT_EQ(coherence(model, docs), base);
  }
}

TEST(Selection, SingleCell) {
  const auto docs = two_groups(5);
  const auto r = select_hyperparameters(docs, {{3}, {0.2}, {0.05}}, {.iterations = 10});
  ASSERT_EQ(r.cells.size(), 1u);
  EXPECT_EQ(r.best.topics, 3u);
  EXPECT_EQ(r.best.alpha, 0.2);
  EXPECT_EQ(r.best.eta, 0.05);
  EXPECT_THROW(select_hyperparameters(docs, {{}, {0.1}, {0.1}}), std::invalid_argument);
}

TEST(Selection, TieGoesToSmallestCell) {
  std::vector<Document> docs(8, Document{"aaa", "bbb"});
  const auto r = select_hyperparameters(docs, {{2, 1}, {0.5, 0.1}, {0.1, 0.01}}, {.iterations = 5});
  ASSERT_EQ(r.cells.size(), 8u);
  for (const auto& c : r.cells) ASSERT_EQ(c.coherence, r.cells.front().coherence);
  EXPECT_EQ(r.best.topics, 1u);
  EXPECT_EQ(r.best.alpha, 0.1);
  EXPECT_EQ(r.best.eta, 0.01);
}

TEST(LdaPersistence, RoundTrip) {
  const auto corpus = synthetic::topic_corpus({.documents = 100, .seed = 8});
  const auto model = train_lda(corpus.documents, {.topics = 4, .iterations = 20, .seed = 8});
  const auto back = lda_from_json(lda_to_json(model));
  EXPECT_EQ(back, model);
  EXPECT_EQ(infer_topics(back, corpus.documents[0]), infer_topics(model, corpus.documents[0]));
  EXPECT_THROW(lda_from_json("{\"version\": 999}"), DataError);
}

}  // namespace lyrica
