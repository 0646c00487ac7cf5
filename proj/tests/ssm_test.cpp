#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "lyrica/error.hpp"
#include "lyrica/ssm.hpp"
#include "lyrica/text.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace lyrica {

TEST(EditDistance, Examples) {
  EXPECT_EQ(normalized_edit_distance("abc", "abc"), 0.0);
  EXPECT_DOUBLE_EQ(normalized_edit_distance("kitten", "sitting"), 3.0 / 7.0);
  EXPECT_EQ(normalized_edit_distance("", ""), 0.0);
  EXPECT_EQ(edit_distance(U"kitten", U"sitting"), 3u);
  EXPECT_EQ(edit_distance(U"", U"hello"), 5u);
  EXPECT_EQ(normalized_edit_distance("", "abc"), 1.0);
}

TEST(EditDistance, CountsCodePointsNotBytes) {
  EXPECT_DOUBLE_EQ(normalized_edit_distance("é", "e"), 1.0);
  EXPECT_DOUBLE_EQ(normalized_edit_distance("aé", "ae"), 0.5);
}

TEST(EditDistance, MatricesFoldCase) {
  EXPECT_DOUBLE_EQ(similarity("Hello", "hello"), 0.8);
  EXPECT_EQ(line_ssm(testing::make_song("s", {{"Hello", "hELLO"}}))(0, 1), 1.0);
}

TEST(EditDistance, MatchesOracle) {
  testing::Gen gen(42);
  for (int i = 0; i < 3000; ++i) {
    const auto a = gen.text(14);
    const auto b = gen.text(14);
    ASSERT_EQ(normalized_edit_distance(a, b), testing::oracle_normalized(a, b)) << a << " | " << b;
  }
}

TEST(EditDistance, SimilarityOneIffEqual) {
  testing::Gen gen(43);
  for (int i = 0; i < 2000; ++i) {
    const auto a = fold_case(gen.line(6));
    const auto b = fold_case(gen.line(6));
    EXPECT_EQ(similarity(a, b) == 1.0, a == b) << a << " | " << b;
  }
}

TEST(Ssm, LineExamples) {
  const auto ssm = line_ssm(testing::make_song("1", {{"A line", "B other", "A line"}}));
  EXPECT_EQ(ssm(0, 2), 1.0);
  EXPECT_EQ(ssm(0, 1), ssm(1, 2));

  const auto two = line_ssm(testing::make_song("2", {{"la la", "xx"}}));
  EXPECT_DOUBLE_EQ(two(0, 1), 1.0 - static_cast<double>(edit_distance(U"la la", U"xx")) / 5.0);

  const auto one = line_ssm(testing::make_song("3", {{"solo"}}));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one(0, 0), 1.0);
  EXPECT_THROW(line_ssm(testing::make_song("4", {})), DataError);
}

TEST(Ssm, SegmentExamples) {
  const auto ssm = segment_ssm(testing::make_song("1", {{"x", "y"}, {"z"}, {"x", "y"}}));
  EXPECT_EQ(ssm.granularity(), Granularity::Segment);
  EXPECT_EQ(ssm(0, 2), 1.0);
  EXPECT_EQ(segment_ssm(testing::make_song("2", {{"only"}})).size(), 1u);
  EXPECT_DOUBLE_EQ(segment_ssm(testing::make_song("3", {{"ab"}, {"abcd"}}))(0, 1), 0.5);
  // Segments compare as newline-joined renderings.
  EXPECT_DOUBLE_EQ(segment_ssm(testing::make_song("4", {{"a", "b"}, {"ab"}}))(0, 1), 1.0 - 1.0 / 3.0);
  EXPECT_THROW(segment_ssm(testing::make_song("5", {})), DataError);
}

TEST(Ssm, InvariantsOnRandomSongs) {
  testing::Gen gen(7);
  for (int i = 0; i < 300; ++i) {
    const auto song = gen.song("s");
    for (const auto& ssm : {line_ssm(song), segment_ssm(song)}) {
      for (std::size_t r = 0; r < ssm.size(); ++r) {
        ASSERT_EQ(ssm(r, r), 1.0);
        for (std::size_t c = 0; c < ssm.size(); ++c) {
          ASSERT_EQ(ssm(r, c), ssm(c, r));
          ASSERT_GE(ssm(r, c), 0.0);
          ASSERT_LE(ssm(r, c), 1.0);
        }
      }
    }
  }
}

TEST(Ssm, SwappingIdenticalLinesKeepsEntries) {
  auto song = testing::make_song("1", {{"same", "other", "same", "third"}});
  auto entries = [](const Ssm& m) {
    std::vector<double> v;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) v.push_back(m(i, j));
    }
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto before = entries(line_ssm(song));
  std::swap(song.segments[0][0], song.segments[0][2]);
  EXPECT_EQ(entries(line_ssm(song)), before);
}

TEST(Ssm, SetValidates) {
  Ssm ssm(Granularity::Line, 2);
  ssm.set(0, 1, 0.25);
  EXPECT_EQ(ssm(1, 0), 0.25);
  EXPECT_THROW(ssm.set(0, 1, 1.5), std::invalid_argument);
  EXPECT_THROW(ssm.set(0, 0, 0.5), std::invalid_argument);
}

TEST(Ssm, TextFormat) {
  const auto ssm = line_ssm(testing::make_song("1", {{"abc", "abd", "xyz"}}));
  std::ostringstream out;
  write_ssm(out, ssm);
  const auto text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "3 line");
  EXPECT_NE(text.find("1.0000 0.6667 0.0000"), std::string::npos) << text;
  std::istringstream in(text);
  const auto back = read_ssm(in);
  ASSERT_EQ(back.size(), 3u);
  EXPECT_EQ(back.granularity(), Granularity::Line);
  EXPECT_NEAR(back(0, 1), ssm(0, 1), 5e-5);
  std::istringstream bad("2 line\n1 0.5\n0.4 1\n");
  EXPECT_THROW(read_ssm(bad), DataError);
}

}  // namespace lyrica
