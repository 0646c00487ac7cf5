#include <gtest/gtest.h>

#include "lyrica/thumbnail.hpp"
#include "support.hpp"

namespace lyrica {

namespace {

// Segments built from one repeated letter each: copies are identical and
// different letters share nothing, so families are exactly the copies.
Segment letter_segment(char letter, std::size_t lines) { return Segment(lines, std::string(5, letter)); }

}  // namespace

TEST(Thumbnail, FamilyOfRepeatedSegment) {
  const auto song = testing::make_song("s", {letter_segment('s', 2), letter_segment('t', 2), letter_segment('s', 2)});
  const auto families = segment_families(song, 0.9);
  ASSERT_EQ(families.size(), 3u);
  EXPECT_EQ(families[0].members, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(families[1].members, (std::vector<std::size_t>{1}));
  EXPECT_EQ(families[0].cohesion, 1.0);
  EXPECT_DOUBLE_EQ(families[0].coverage, 2.0 / 3.0);
  const auto fitness = segment_fitness(families);
  EXPECT_DOUBLE_EQ(fitness[0], 0.8);
  EXPECT_EQ(fitness[1], 0.0);
}

TEST(Thumbnail, AllIdentical) {
  const auto song = testing::make_song("s", {letter_segment('a', 3), letter_segment('a', 3), letter_segment('a', 3)});
  for (const auto& f : segment_families(song)) {
    EXPECT_EQ(f.members.size(), 3u);
    EXPECT_EQ(f.cohesion, 1.0);
    EXPECT_EQ(f.coverage, 1.0);
  }
  for (double v : segment_fitness(song)) EXPECT_EQ(v, 1.0);
  EXPECT_EQ(chorus_candidate(song), 0u);
}

TEST(Thumbnail, AllDissimilar) {
  const auto song = testing::make_song("s", {letter_segment('a', 2), letter_segment('b', 1), letter_segment('c', 4)});
  for (const auto& f : segment_families(song)) EXPECT_EQ(f.members.size(), 1u);
  for (double v : segment_fitness(song)) EXPECT_EQ(v, 0.0);
}

TEST(Thumbnail, ChorusCandidate) {
  const auto song = testing::make_song(
      "s", {{"first verse words", "more of the verse"}, {"la la chorus", "sing it"}, {"second verse here", "other"},
            {"la la chorus", "sing it"}});
  EXPECT_EQ(chorus_candidate(song), 1u);
  EXPECT_EQ(chorus_candidate(testing::make_song("s", {{"only"}})), 0u);
  EXPECT_EQ(chorus_candidate(std::vector<double>{}), 0u);
}

TEST(Thumbnail, FitnessProperties) {
  testing::Gen gen(21);
  for (int i = 0; i < 300; ++i) {
    const auto song = gen.song("s");
    const auto families = segment_families(song);
    const auto fitness = segment_fitness(families);
    for (std::size_t s = 0; s < fitness.size(); ++s) {
      EXPECT_GE(fitness[s], 0.0);
      EXPECT_LE(fitness[s], 1.0);
      EXPECT_EQ(fitness[s] > 0.0, families[s].members.size() > 1);
      EXPECT_TRUE(std::find(families[s].members.begin(), families[s].members.end(), s) != families[s].members.end());
      EXPECT_GT(families[s].coverage, 0.0);
      EXPECT_LE(families[s].coverage, 1.0);
    }
  }
}

TEST(Thumbnail, ExactCopyProperties) {
  testing::Gen gen(22);
  for (int i = 0; i < 300; ++i) {
    std::vector<Segment> pool;
    for (std::size_t k = gen.between(1, 4); k > 0; --k) pool.push_back(letter_segment(static_cast<char>('a' + pool.size()), gen.between(1, 4)));
    std::vector<std::size_t> layout;
    for (std::size_t k = gen.between(2, 7); k > 0; --k) layout.push_back(gen.below(pool.size()));
    Song song;
    song.id = "s";
    for (auto p : layout) song.segments.push_back(pool[p]);
    const auto fitness = segment_fitness(song);

    // Duplicating a repeated segment never lowers its fitness.
    for (std::size_t s = 0; s < layout.size(); ++s) {
      if (fitness[s] == 0.0) continue;
      Song more = song;
      more.segments.push_back(song.segments[s]);
      EXPECT_GE(segment_fitness(more)[s], fitness[s]);
    }

    // Appending a segment that repeats nothing keeps the chorus.
    Song appended = song;
    appended.segments.push_back(letter_segment('z', gen.between(1, 4)));
    EXPECT_EQ(chorus_candidate(appended), chorus_candidate(song));
  }
}

}  // namespace lyrica
