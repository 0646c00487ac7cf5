#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lyrica {

enum class Explicitness { Unknown, Clean, Explicit };

std::string_view to_string(Explicitness label);

/// A point in valence-arousal space, both axes in [-1, +1].
struct VAPoint {
  double valence = 0.0;
  double arousal = 0.0;

  friend bool operator==(const VAPoint&, const VAPoint&) = default;
};

/// Lyrics are a list of segments (stanzas), each a non-empty list of lines.
using Segment = std::vector<std::string>;

struct Song {
  std::string id;
  std::string artist;
  std::string title;
  std::vector<Segment> segments;
  std::optional<std::string> language;
  std::optional<std::string> genre;
  std::optional<int> year;
  Explicitness explicit_gold = Explicitness::Unknown;
  std::vector<std::string> social_tags;
  std::vector<std::string> emotion_tags;
  std::optional<VAPoint> va_gold;

  std::size_t line_count() const;
  /// All lines in reading order, segment boundaries dropped.
  std::vector<std::string> lines() const;
  /// Number of lines in each segment.
  std::vector<std::size_t> segment_lengths() const;
  /// Segments joined by a blank line, lines by '\n'.
  std::string lyrics() const;

  friend bool operator==(const Song&, const Song&) = default;
};

/// Splits raw lyric text into segments at blank lines. Trailing whitespace
/// is stripped from every line; runs of blank lines form a single boundary.
std::vector<Segment> parse_lyrics(std::string_view text);
std::string render_lyrics(const std::vector<Segment>& segments);

/// Throws DataError when the song violates a model invariant.
void validate_song(const Song& song);

/// Songs keyed by id, in ingestion order. Immutable once loaded.
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<Song> songs);

  /// Validates and appends; duplicate ids raise DataError.
  void add(Song song);

  const std::vector<Song>& songs() const { return songs_; }
  std::size_t size() const { return songs_.size(); }
  bool empty() const { return songs_.empty(); }
  const Song& operator[](std::size_t i) const { return songs_[i]; }
  const Song* find(std::string_view id) const;
  std::optional<std::size_t> position(std::string_view id) const;

  auto begin() const { return songs_.begin(); }
  auto end() const { return songs_.end(); }

 private:
  std::vector<Song> songs_;
  std::unordered_map<std::string, std::size_t> index_;
};

bool operator==(const Corpus& a, const Corpus& b);

/// Reads the JSONL corpus format. An optional first record
/// {"va_scale":[lo,hi]} declares the scale of valence/arousal values, which
/// are rescaled linearly onto [-1, +1].
Corpus read_corpus(std::istream& in, std::string_view source = "<stream>");
Corpus load_corpus(const std::filesystem::path& path);

/// Writes records in canonical scale (no header record).
void write_corpus(std::ostream& out, const Corpus& corpus);
void save_corpus(const std::filesystem::path& path, const Corpus& corpus);

/// Stopword-profile language guess; nullopt when the best overlap is below
/// `threshold` or the lyrics are empty.
std::optional<std::string> detect_language(const Song& song, double threshold = 0.05);

/// Fills missing language fields (or all of them when `overwrite`).
Corpus with_detected_languages(const Corpus& corpus, bool overwrite = false);

/// floor(year / 10) * 10. Throws std::invalid_argument for year < 1000.
int decade_of(int year);
std::optional<int> decade_of(const Song& song);

struct HistogramBin {
  std::size_t count = 0;
  double fraction = 0.0;
};

using Histogram = std::map<std::string, HistogramBin>;

struct CorpusStats {
  Histogram language;
  Histogram genre;
  Histogram decade;
};

/// Fractions are relative to the songs carrying the respective label.
CorpusStats corpus_stats(const Corpus& corpus);

}  // namespace lyrica
