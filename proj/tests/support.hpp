#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lyrica/corpus.hpp"

namespace lyrica::testing {

inline Song make_song(std::string id, std::vector<Segment> segments) {
  Song song;
  song.id = std::move(id);
  song.segments = std::move(segments);
  return song;
}

/// Small hand-rolled generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  std::uint64_t next() { return rng_(); }

  /// Mixes ASCII letters of both cases, punctuation and multi-byte UTF-8.
  std::string text(std::size_t max_len) {
    static const std::vector<std::string> alphabet = {"a", "b", "c", "A", "B", " ", ",", "'", "é", "ß", "☃", "x"};
    std::string s;
    const auto n = below(max_len + 1);
    for (std::size_t i = 0; i < n; ++i) s += alphabet[below(alphabet.size())];
    return s;
  }

  /// Non-empty, no trailing whitespace, so it survives corpus validation.
  std::string line(std::size_t max_len = 12) {
    std::string s;
    while (s.empty()) {
      s = text(max_len);
      while (!s.empty() && (s.back() == ' ')) s.pop_back();
    }
    return s;
  }

  /// Songs with a small line pool so exact repeats are common.
  Song song(std::string id, std::size_t max_segments = 6, std::size_t max_lines = 5) {
    std::vector<std::string> pool(between(1, 8));
    for (auto& l : pool) l = line();
    Song s;
    s.id = std::move(id);
    const auto segments = between(1, max_segments);
    for (std::size_t k = 0; k < segments; ++k) {
      Segment seg(between(1, max_lines));
      for (auto& l : seg) l = pool[below(pool.size())];
      s.segments.push_back(std::move(seg));
    }
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace lyrica::testing
