#include "lyrica/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

#include "lyrica/text.hpp"

namespace lyrica::synthetic {

namespace {

// Hand-rolled draws instead of <random> distributions, whose output differs
// between standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed)) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(double p) { return uniform() < p; }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Zipf-like sampler over a ranked vocabulary.
class RankedSampler {
 public:
  explicit RankedSampler(std::size_t n) : cumulative_(n) {
    double total = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      total += 1.0 / static_cast<double>(r + 1);
      cumulative_[r] = total;
    }
  }
  std::size_t operator()(Rng& rng) const {
    const double target = rng.uniform() * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    return std::min(static_cast<std::size_t>(it - cumulative_.begin()), cumulative_.size() - 1);
  }

 private:
  std::vector<double> cumulative_;
};

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

/// Tokens laid out as lines of `per_line` words, `lines_per_segment` lines
/// per segment.
std::vector<Segment> layout(const std::vector<std::string>& tokens, std::size_t per_line,
                            std::size_t lines_per_segment) {
  std::vector<Segment> segments;
  std::vector<std::string> line;
  for (const auto& t : tokens) {
    line.push_back(t);
    if (line.size() == per_line) {
      if (segments.empty() || segments.back().size() == lines_per_segment) segments.emplace_back();
      segments.back().push_back(join(line));
      line.clear();
    }
  }
  if (!line.empty()) {
    if (segments.empty() || segments.back().size() == lines_per_segment) segments.emplace_back();
    segments.back().push_back(join(line));
  }
  return segments;
}

// Segment roles in a song layout: verse, chorus, bridge.
enum class Role { Verse, Chorus, Bridge };

const std::vector<std::vector<Role>>& layouts() {
  using enum Role;
  static const std::vector<std::vector<Role>> all = {
      {Verse, Chorus, Verse, Chorus, Bridge, Chorus},
      {Verse, Chorus, Verse, Chorus, Chorus},
      {Verse, Verse, Chorus, Verse, Chorus, Chorus},
      {Chorus, Verse, Chorus, Verse, Chorus},
      {Verse, Chorus, Verse, Bridge, Chorus, Chorus},
  };
  return all;
}

std::string string_of_words(Rng& rng, const std::vector<std::string>& vocab, const std::vector<std::string>* motif,
                            double motif_share) {
  std::vector<std::string> words(rng.between(4, 6));
  for (auto& w : words) w = motif && rng.chance(motif_share) ? rng.pick(*motif) : rng.pick(vocab);
  return join(words);
}

Segment fresh_segment(Rng& rng, const std::vector<std::string>& vocab, bool with_motif) {
  std::vector<std::string> motif(4);
  for (auto& w : motif) w = rng.pick(vocab);
  Segment seg(rng.between(3, 6));
  for (auto& line : seg) line = string_of_words(rng, vocab, with_motif ? &motif : nullptr, 0.75);
  return seg;
}

std::vector<Segment> structured_segments(Rng& rng, const std::vector<std::string>& vocab, bool high_repetition) {
  const auto& roles = rng.pick(layouts());
  std::vector<Segment> segments;
  if (!high_repetition) {
    for (std::size_t i = 0; i < roles.size(); ++i) segments.push_back(fresh_segment(rng, vocab, false));
    return segments;
  }
  const Segment chorus = fresh_segment(rng, vocab, true);
  for (auto role : roles) segments.push_back(role == Role::Chorus ? chorus : fresh_segment(rng, vocab, true));
  return segments;
}

std::string numbered(std::string_view prefix, std::size_t i) {
  std::string digits = std::to_string(i);
  if (digits.size() < 5) digits.insert(0, 5 - digits.size(), '0');
  return std::string(prefix) + digits;
}

}  // namespace

std::vector<std::string> pseudo_words(std::size_t count, std::uint64_t seed) {
  static constexpr std::string_view consonants = "bdfgklmnprstv";
  static constexpr std::string_view vowels = "aeiou";
  Rng rng(seed);
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  out.reserve(count);
  while (out.size() < count) {
    std::string w;
    const auto syllables = rng.between(2, 3);
    for (std::size_t s = 0; s < syllables; ++s) {
      w += consonants[rng.below(consonants.size())];
      w += vowels[rng.below(vowels.size())];
    }
    if (seen.insert(w).second) out.push_back(std::move(w));
  }
  return out;
}

Corpus structured_corpus(const StructuredOptions& options) {
  Rng rng(options.seed);
  const auto vocab = pseudo_words(1500, options.seed ^ 0x5eedULL);
  std::vector<Song> songs;
  songs.reserve(options.songs);
  for (std::size_t i = 0; i < options.songs; ++i) {
    Song song;
    song.id = numbered(options.high_repetition ? "hi-" : "lo-", i);
    song.genre = options.high_repetition ? "high-repetition" : "low-repetition";
    song.segments = structured_segments(rng, vocab, options.high_repetition);
    songs.push_back(std::move(song));
  }
  return Corpus(std::move(songs));
}

namespace {

void plant(Rng& rng, Song& song, const std::string& term) {
  auto& seg = song.segments[rng.below(song.segments.size())];
  auto& line = seg[rng.below(seg.size())];
  auto words = split_list(line, ' ');
  words[rng.below(words.size())] = term;
  line = join(words);
}

std::vector<std::string> planted_vocabulary(std::size_t n, std::uint64_t seed) {
  // The 'x' prefix keeps planted terms apart from the ordinary vocabulary.
  auto words = pseudo_words(n, seed);
  for (auto& w : words) w.insert(0, 1, 'x');
  return words;
}

}  // namespace

ExplicitCorpus explicit_corpus(const ExplicitOptions& options) {
  Rng rng(options.seed);
  const auto vocab = pseudo_words(2000, options.seed ^ 0x70cabULL);
  const RankedSampler sampler(vocab.size());
  ExplicitCorpus out;
  out.planted_terms = planted_vocabulary(options.planted_terms, options.seed ^ 0xbadULL);
  const RankedSampler planted_sampler(out.planted_terms.size());

  const auto explicit_count =
      static_cast<std::size_t>(std::llround(options.explicit_fraction * static_cast<double>(options.songs)));
  std::vector<bool> is_explicit(options.songs, false);
  std::fill(is_explicit.begin(), is_explicit.begin() + static_cast<std::ptrdiff_t>(explicit_count), true);
  rng.shuffle(is_explicit);

  std::vector<Song> songs(options.songs);
  std::vector<std::size_t> clean;
  std::size_t planted = 0;
  for (std::size_t i = 0; i < options.songs; ++i) {
    auto& song = songs[i];
    song.id = numbered("ex-", i);
    std::vector<std::string> tokens(rng.between(60, 100));
    for (auto& t : tokens) t = vocab[sampler(rng)];
    song.segments = layout(tokens, 5, 4);
    song.explicit_gold = is_explicit[i] ? Explicitness::Explicit : Explicitness::Clean;
    if (is_explicit[i]) {
      const auto n = rng.between(options.min_planted, options.max_planted);
      for (std::size_t k = 0; k < n; ++k) plant(rng, song, out.planted_terms[planted_sampler(rng)]);
      planted += n;
    } else {
      clean.push_back(i);
    }
  }
  const auto leaks = static_cast<std::size_t>(std::llround(options.leakage * static_cast<double>(planted)));
  for (std::size_t k = 0; k < leaks && !clean.empty(); ++k) {
    plant(rng, songs[rng.pick(clean)], out.planted_terms[planted_sampler(rng)]);
  }
  out.corpus = Corpus(std::move(songs));
  return out;
}

TopicCorpus topic_corpus(const TopicOptions& options) {
  Rng rng(options.seed);
  const auto words = pseudo_words(options.topics * options.words_per_topic + options.background_words,
                                  options.seed ^ 0x70b1cULL);
  TopicCorpus out;
  for (std::size_t k = 0; k < options.topics; ++k) {
    const auto first = words.begin() + static_cast<std::ptrdiff_t>(k * options.words_per_topic);
    out.topic_words.emplace_back(first, first + static_cast<std::ptrdiff_t>(options.words_per_topic));
  }
  const std::vector<std::string> background(words.begin() + static_cast<std::ptrdiff_t>(options.topics * options.words_per_topic),
                                            words.end());
  for (std::size_t d = 0; d < options.documents; ++d) {
    const auto topic = rng.below(options.topics);
    Document doc(options.document_length);
    for (auto& t : doc) t = rng.chance(options.noise) ? rng.pick(background) : rng.pick(out.topic_words[topic]);
    out.documents.push_back(std::move(doc));
    out.true_topic.push_back(topic);
  }
  return out;
}

namespace {

struct EmotionWords {
  std::vector<std::string> joy, pain, energy, calm, filler;
};

// Fixed across seeds so corpora drawn with different seeds share a vocabulary.
EmotionWords emotion_words() {
  auto words = pseudo_words(4 * 8 + 400, 0xe307ULL);
  EmotionWords out;
  auto take = [&](std::vector<std::string>& into, std::size_t n) {
    into.assign(words.end() - static_cast<std::ptrdiff_t>(n), words.end());
    words.resize(words.size() - n);
  };
  take(out.joy, 8);
  take(out.pain, 8);
  take(out.energy, 8);
  take(out.calm, 8);
  out.filler = std::move(words);
  return out;
}

/// Appends `n` signal tokens for a latent value in [-1, 1] and returns the
/// realised balance (positive - negative) / n.
double signal(Rng& rng, std::vector<std::string>& tokens, double latent, std::size_t n,
              const std::vector<std::string>& positive, const std::vector<std::string>& negative) {
  long balance = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool up = rng.chance((1.0 + latent) / 2.0);
    tokens.push_back(rng.pick(up ? positive : negative));
    balance += up ? 1 : -1;
  }
  return n == 0 ? 0.0 : static_cast<double>(balance) / static_cast<double>(n);
}

}  // namespace

Corpus emotion_corpus(const EmotionOptions& options) {
  Rng rng(options.seed);
  const auto w = emotion_words();
  std::vector<Song> songs;
  for (std::size_t i = 0; i < options.songs; ++i) {
    std::vector<std::string> tokens;
    const double v = signal(rng, tokens, 2.0 * rng.uniform() - 1.0, options.signal_tokens / 2, w.joy, w.pain);
    const double a = signal(rng, tokens, 2.0 * rng.uniform() - 1.0, options.signal_tokens - options.signal_tokens / 2,
                            w.energy, w.calm);
    for (std::size_t k = 0; k < options.filler_tokens; ++k) tokens.push_back(rng.pick(w.filler));
    rng.shuffle(tokens);
    Song song;
    song.id = numbered("va-", i);
    song.segments = layout(tokens, 6, 4);
    song.va_gold = VAPoint{v, a};
    songs.push_back(std::move(song));
  }
  return Corpus(std::move(songs));
}

Corpus full_corpus(const FullOptions& options) {
  Rng rng(options.seed);
  const auto vocab = pseudo_words(3000, options.seed ^ 0xf011ULL);
  const auto planted = planted_vocabulary(24, options.seed ^ 0xbadULL);
  const auto w = emotion_words();
  static const std::vector<std::string> genres = {"Rock", "Pop", "Hip Hop", "Metal", "Country", "Jazz"};
  static const std::vector<std::string> tags = {"happy", "sad", "angry", "calm", "energetic", "melancholic"};

  std::vector<Song> songs;
  songs.reserve(options.songs);
  for (std::size_t i = 0; i < options.songs; ++i) {
    Song song;
    song.id = numbered("song-", i);
    song.artist = numbered("artist-", rng.below(options.songs / 10 + 1));
    song.title = numbered("title-", i);
    song.segments = structured_segments(rng, vocab, rng.chance(0.6));
    if (rng.chance(0.9)) song.language = "en";
    song.genre = rng.pick(genres);
    if (rng.chance(0.95)) song.year = static_cast<int>(rng.between(1960, 2019));

    const double u = rng.uniform();
    song.explicit_gold = u < 0.1 ? Explicitness::Explicit : (u < 0.95 ? Explicitness::Clean : Explicitness::Unknown);
    if (song.explicit_gold == Explicitness::Explicit) {
      for (std::size_t k = rng.between(2, 4); k > 0; --k) plant(rng, song, rng.pick(planted));
    }

    std::vector<std::string> extra;
    const double v = signal(rng, extra, 2.0 * rng.uniform() - 1.0, 6, w.joy, w.pain);
    const double a = signal(rng, extra, 2.0 * rng.uniform() - 1.0, 6, w.energy, w.calm);
    rng.shuffle(extra);
    for (auto& seg : layout(extra, 6, 4)) song.segments.push_back(std::move(seg));
    if (rng.chance(0.5)) song.va_gold = VAPoint{v, a};
    if (rng.chance(0.3)) song.emotion_tags = {rng.pick(tags)};
    if (rng.chance(0.2)) song.social_tags = {fold_case(*song.genre)};
    songs.push_back(std::move(song));
  }
  return Corpus(std::move(songs));
}

}  // namespace lyrica::synthetic
