#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "lyrica/emotion.hpp"
#include "lyrica/error.hpp"
#include "lyrica/synthetic.hpp"
#include "lyrica/text.hpp"
#include "support.hpp"

namespace lyrica {

namespace {

VALexicon small_lexicon() {
  VALexicon lex;
  lex.entries["happy"] = {0.8, 0.5};
  lex.entries["sad"] = {-0.7, -0.3};
  return lex;
}

std::vector<double> random_vector(testing::Gen& gen, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = gen.uniform() * 10.0 - 5.0;
  return v;
}

Corpus constant_target_corpus() {
  std::vector<Song> songs;
  for (int i = 0; i < 12; ++i) {
    auto s = testing::make_song("c" + std::to_string(i), {{"word" + std::to_string(i % 4) + " and more"}});
    s.va_gold = VAPoint{0.3, -0.2};
    songs.push_back(std::move(s));
  }
  return Corpus(std::move(songs));
}

}  // namespace

TEST(TagsToVa, Examples) {
  const auto lex = small_lexicon();
  const std::vector<std::string> one{"happy"};
  EXPECT_EQ(tags_to_va(one, lex), (VAPoint{0.8, 0.5}));
  const std::vector<std::string> both{"happy", "sad"};
  const auto mean = tags_to_va(both, lex);
  ASSERT_TRUE(mean);
  EXPECT_NEAR(mean->valence, 0.05, 1e-15);
  EXPECT_NEAR(mean->arousal, 0.1, 1e-15);
  const std::vector<std::string> none{"rock", "90s"};
  EXPECT_FALSE(tags_to_va(none, lex));
  EXPECT_FALSE(tags_to_va(std::vector<std::string>{}, lex));
}

TEST(TagsToVa, CaseFoldedAndDeduplicated) {
  const auto lex = small_lexicon();
  const std::vector<std::string> a{"HAPPY", "sad", "happy", "Happy"};
  const std::vector<std::string> b{"sad", "happy"};
  EXPECT_EQ(tags_to_va(a, lex), tags_to_va(b, lex));
  EXPECT_FALSE(tags_to_va(std::vector<std::string>{"happ"}, lex));
}

TEST(TagsToVa, PermutationInvariant) {
  VALexicon lex;
  testing::Gen gen(5);
  std::vector<std::string> tags;
  for (int i = 0; i < 20; ++i) {
    const auto t = "t" + std::to_string(i);
    lex.entries[t] = {gen.uniform() * 2 - 1, gen.uniform() * 2 - 1};
    tags.push_back(t);
    tags.push_back("miss" + std::to_string(i));
  }
  const auto base = tags_to_va(tags, lex);
  for (int trial = 0; trial < 50; ++trial) {
    auto shuffled = tags;
    for (std::size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[gen.below(i)]);
    EXPECT_EQ(tags_to_va(shuffled, lex), base);
  }
}

TEST(Lexicon, RescalesDeclaredScale) {
  std::istringstream in("#scale 1 9\n# comment\nHappy\t9\t5\nsad\t1\t3\n");
  const auto lex = read_lexicon(in);
  EXPECT_EQ(lex.entries.at("happy"), (VAPoint{1.0, 0.0}));
  EXPECT_EQ(lex.entries.at("sad"), (VAPoint{-1.0, -0.5}));
  EXPECT_EQ(lex.source_low, 1.0);
  EXPECT_EQ(lex.source_high, 9.0);
}

TEST(Lexicon, Errors) {
  for (const char* bad : {"happy\t1\t1\n", "#scale 2 1\n", "#scale 0 1\nhappy\t2\t0\n", "#scale 0 1\nhappy\t0.5\n",
                          "#scale 0 1\nhappy\tx\t0\n", "#scale 0 1\na\t0\t0\na\t1\t1\n",
                          "#scale 0 1\na\t0\t0\n#scale 0 1\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_lexicon(in), DataError) << bad;
  }
  std::istringstream in("#scale 0 1\nok\t0\t0\nbad\n");
  try {
    read_lexicon(in, "lex.tsv");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("lex.tsv: line 3"), std::string::npos) << e.what();
  }
}

TEST(Correlation, Examples) {
  const std::vector<double> x{1, 2, 3};
  const std::vector<double> lin{2, 4, 6};
  const std::vector<double> sq{1, 4, 9};
  const std::vector<double> neg{-1, -2, -3};
  EXPECT_NEAR(pearson(x, lin).value, 1.0, 1e-15);
  EXPECT_NEAR(spearman(x, lin).value, 1.0, 1e-15);
  EXPECT_LT(pearson(x, sq).value, 1.0);
  EXPECT_NEAR(spearman(x, sq).value, 1.0, 1e-15);
  EXPECT_NEAR(pearson(x, neg).value, -1.0, 1e-15);
  EXPECT_NEAR(spearman(x, neg).value, -1.0, 1e-15);
}

TEST(Correlation, Errors) {
  const std::vector<double> one{1.0};
  const std::vector<double> two{1.0, 2.0};
  EXPECT_THROW(pearson(one, one), std::invalid_argument);
  EXPECT_THROW(pearson(two, one), std::invalid_argument);
  EXPECT_THROW(spearman(two, one), std::invalid_argument);
}

TEST(Correlation, DegenerateInputFlagged) {
  const std::vector<double> flat{2, 2, 2};
  const std::vector<double> x{1, 2, 3};
  const auto c = pearson(flat, x);
  EXPECT_TRUE(c.degenerate);
  EXPECT_EQ(c.value, 0.0);
  EXPECT_TRUE(spearman(x, flat).degenerate);
  EXPECT_FALSE(pearson(x, x).degenerate);
}

TEST(Correlation, PhaseShiftedCosines) {
  // Equally spaced samples of two cosines correlate at exactly cos(phase).
  for (std::size_t n = 3; n < 53; ++n) {
    const double phase = 0.1 * static_cast<double>(n);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double t = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
      x[i] = std::cos(t);
      y[i] = std::cos(t + phase);
    }
    EXPECT_NEAR(pearson(x, y).value, std::cos(phase), 1e-9) << n;
  }
}

TEST(Correlation, SpearmanOnPermutations) {
  testing::Gen gen(21);
  for (std::size_t n = 2; n < 52; ++n) {
    std::vector<double> x(n), y(n);
    std::iota(x.begin(), x.end(), 1.0);
    std::iota(y.begin(), y.end(), 1.0);
    for (std::size_t i = n; i > 1; --i) std::swap(y[i - 1], y[gen.below(i)]);
    double d2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) d2 += (x[i] - y[i]) * (x[i] - y[i]);
    const double nn = static_cast<double>(n);
    EXPECT_NEAR(spearman(x, y).value, 1.0 - 6.0 * d2 / (nn * (nn * nn - 1.0)), 1e-9) << n;
  }
}

TEST(Correlation, AverageRanksShareTies) {
  const std::vector<double> v{10, 20, 10, 30, 20, 10};
  EXPECT_EQ(average_ranks(v), (std::vector<double>{2, 4.5, 2, 6, 4.5, 2}));
}

TEST(Correlation, Invariances) {
  testing::Gen gen(33);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = gen.between(2, 60);
    const auto x = random_vector(gen, n);
    const auto y = random_vector(gen, n);
    const double a = 0.1 + gen.uniform() * 5.0;
    const double b = gen.uniform() * 20.0 - 10.0;
    std::vector<double> xa(n), xm(n);
    for (std::size_t i = 0; i < n; ++i) {
      xa[i] = a * x[i] + b;
      xm[i] = std::exp(x[i]) + x[i] * x[i] * x[i];
    }
    EXPECT_NEAR(pearson(xa, y).value, pearson(x, y).value, 1e-12);
    EXPECT_NEAR(pearson(y, xa).value, pearson(x, y).value, 1e-12);
    EXPECT_NEAR(spearman(xm, y).value, spearman(x, y).value, 1e-12);
  }
}

TEST(Regressor, RecoversLinearSignal) {
  const auto train = synthetic::emotion_corpus({.songs = 600, .seed = 1});
  const auto held_out = synthetic::emotion_corpus({.songs = 200, .seed = 2});
  const auto model = train_va_regressor(train);
  const auto eval = evaluate_va_regressor(model, held_out);
  EXPECT_EQ(eval.songs, 200u);
  EXPECT_GE(eval.valence_pearson.value, 0.9);
  EXPECT_GE(eval.arousal_pearson.value, 0.9);
}

TEST(Regressor, ConstantTargetsPredictBias) {
  const auto corpus = constant_target_corpus();
  const auto model = train_va_regressor(corpus);
  for (const auto& song : corpus) {
    EXPECT_NEAR(model.predict(song).valence, 0.3, 1e-9);
    EXPECT_NEAR(model.predict(song).arousal, -0.2, 1e-9);
  }
  const auto eval = evaluate_va_regressor(model, corpus);
  EXPECT_TRUE(eval.valence_pearson.degenerate);
  EXPECT_EQ(eval.valence_pearson.value, 0.0);
}

TEST(Regressor, EmptyLyricsGetBias) {
  const auto model = train_va_regressor(synthetic::emotion_corpus({.songs = 50, .seed = 3}));
  Song empty;
  empty.id = "empty";
  const auto p = model.predict(empty);
  EXPECT_DOUBLE_EQ(p.valence, std::clamp(model.valence.bias, -1.0, 1.0));
  EXPECT_DOUBLE_EQ(p.arousal, std::clamp(model.arousal.bias, -1.0, 1.0));
}

TEST(Regressor, ObjectiveNoWorseThanZeroWeights) {
  const auto corpus = synthetic::emotion_corpus({.songs = 80, .seed = 4});
  const auto model = train_va_regressor(corpus);
  std::vector<SparseVector> rows;
  std::vector<double> valence;
  for (const auto& song : corpus) {
    rows.push_back(model.space.transform(word_tokens(song.lyrics())));
    valence.push_back(song.va_gold->valence);
  }
  auto zero = model.valence;
  std::fill(zero.weights.begin(), zero.weights.end(), 0.0);
  EXPECT_LE(ridge_objective(model.valence, rows, valence), ridge_objective(zero, rows, valence));
}

TEST(Regressor, TooFewSongs) {
  std::vector<Song> songs;
  for (int i = 0; i < 9; ++i) {
    auto s = testing::make_song("s" + std::to_string(i), {{"la la"}});
    s.va_gold = VAPoint{0.1 * i, 0.0};
    songs.push_back(std::move(s));
  }
  EXPECT_THROW(train_va_regressor(Corpus(std::move(songs))), DataError);
}

TEST(Regressor, PersistenceRoundTrip) {
  const auto corpus = synthetic::emotion_corpus({.songs = 60, .seed = 6});
  const auto model = train_va_regressor(corpus);
  const auto back = va_regressor_from_json(va_regressor_to_json(model));
  EXPECT_EQ(back.space, model.space);
  EXPECT_EQ(back.valence, model.valence);
  EXPECT_EQ(back.arousal, model.arousal);
  for (const auto& song : corpus) EXPECT_EQ(back.predict(song), model.predict(song));
  EXPECT_THROW(va_regressor_from_json("[]"), DataError);
}

}  // namespace lyrica
