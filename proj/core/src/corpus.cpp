#include "lyrica/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "lyrica/error.hpp"
#include "lyrica/stopwords.hpp"
#include "lyrica/text.hpp"

namespace lyrica {

using nlohmann::json;

std::string_view to_string(Explicitness label) {
  switch (label) {
    case Explicitness::Clean:
      return "clean";
    case Explicitness::Explicit:
      return "explicit";
    case Explicitness::Unknown:
      break;
  }
  return "unknown";
}

std::size_t Song::line_count() const {
  std::size_t n = 0;
  for (const auto& segment : segments) n += segment.size();
  return n;
}

std::vector<std::string> Song::lines() const {
  std::vector<std::string> out;
  out.reserve(line_count());
  for (const auto& segment : segments) out.insert(out.end(), segment.begin(), segment.end());
  return out;
}

std::vector<std::size_t> Song::segment_lengths() const {
  std::vector<std::size_t> out;
  out.reserve(segments.size());
  for (const auto& segment : segments) out.push_back(segment.size());
  return out;
}

std::string Song::lyrics() const { return render_lyrics(segments); }

std::vector<Segment> parse_lyrics(std::string_view text) {
  std::vector<Segment> segments;
  Segment current;
  for (auto raw : split_lines(text)) {
    auto line = trim_right(raw);
    if (line.empty()) {
      if (!current.empty()) segments.push_back(std::move(current));
      current.clear();
      continue;
    }
    current.emplace_back(line);
  }
  if (!current.empty()) segments.push_back(std::move(current));
  return segments;
}

std::string render_lyrics(const std::vector<Segment>& segments) {
  std::string out;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (s > 0) out += "\n\n";
    for (std::size_t l = 0; l < segments[s].size(); ++l) {
      if (l > 0) out += '\n';
      out += segments[s][l];
    }
  }
  return out;
}

void validate_song(const Song& song) {
  if (song.id.empty()) throw DataError("song id must be non-empty");
  for (const auto& segment : song.segments) {
    if (segment.empty()) throw DataError("song '" + song.id + "': empty segment");
    for (const auto& line : segment) {
      if (line.empty() || trim_right(line).size() != line.size()) {
        throw DataError("song '" + song.id + "': lines must be non-blank without trailing whitespace");
      }
      if (line.find('\n') != std::string::npos) {
        throw DataError("song '" + song.id + "': line contains a newline");
      }
    }
  }
  if (song.year && *song.year < 1000) {
    throw DataError("song '" + song.id + "': year " + std::to_string(*song.year) + " out of range");
  }
  if (song.va_gold) {
    for (double v : {song.va_gold->valence, song.va_gold->arousal}) {
      if (!std::isfinite(v) || v < -1.0 || v > 1.0) {
        throw DataError("song '" + song.id + "': valence/arousal outside [-1, 1]");
      }
    }
  }
}

Corpus::Corpus(std::vector<Song> songs) {
  songs_.reserve(songs.size());
  for (auto& song : songs) add(std::move(song));
}

void Corpus::add(Song song) {
  validate_song(song);
  if (index_.contains(song.id)) throw DataError("duplicate song id '" + song.id + "'");
  index_.emplace(song.id, songs_.size());
  songs_.push_back(std::move(song));
}

const Song* Corpus::find(std::string_view id) const {
  auto pos = position(id);
  return pos ? &songs_[*pos] : nullptr;
}

std::optional<std::size_t> Corpus::position(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool operator==(const Corpus& a, const Corpus& b) { return a.songs() == b.songs(); }

namespace {

struct Scale {
  double lo = -1.0;
  double hi = 1.0;

  double to_canonical(double v) const { return -1.0 + 2.0 * (v - lo) / (hi - lo); }
};

[[noreturn]] void fail(std::string_view source, std::size_t line, std::string_view field,
                       std::string_view what) {
  std::ostringstream msg;
  msg << source << ": line " << line;
  if (!field.empty()) msg << ": field '" << field << "'";
  msg << ": " << what;
  throw DataError(msg.str());
}

std::string require_string(const json& record, const char* field, std::string_view source,
                           std::size_t line) {
  auto it = record.find(field);
  if (it == record.end()) fail(source, line, field, "missing");
  if (!it->is_string()) fail(source, line, field, "expected a string");
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const json& record, const char* field,
                                           std::string_view source, std::size_t line) {
  auto it = record.find(field);
  if (it == record.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) fail(source, line, field, "expected a string");
  return it->get<std::string>();
}

std::optional<double> optional_number(const json& record, const char* field,
                                      std::string_view source, std::size_t line) {
  auto it = record.find(field);
  if (it == record.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) fail(source, line, field, "expected a number");
  double v = it->get<double>();
  if (!std::isfinite(v)) fail(source, line, field, "not finite");
  return v;
}

std::vector<std::string> string_array(const json& record, const char* field,
                                      std::string_view source, std::size_t line) {
  std::vector<std::string> out;
  auto it = record.find(field);
  if (it == record.end() || it->is_null()) return out;
  if (!it->is_array()) fail(source, line, field, "expected an array of strings");
  for (const auto& item : *it) {
    if (!item.is_string()) fail(source, line, field, "expected an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Song parse_record(const json& record, const Scale& scale, std::string_view source,
                  std::size_t line) {
  static const std::vector<std::string_view> kFields = {
      "id",          "artist",      "title",        "lyrics",  "language", "genre", "year",
      "explicit",    "social_tags", "emotion_tags", "valence", "arousal"};
  for (const auto& [key, value] : record.items()) {
    bool known = false;
    for (auto f : kFields) known = known || key == f;
    if (!known) fail(source, line, key, "unknown field");
  }

  Song song;
  song.id = require_string(record, "id", source, line);
  if (song.id.empty()) fail(source, line, "id", "must be non-empty");
  song.artist = require_string(record, "artist", source, line);
  song.title = require_string(record, "title", source, line);
  song.segments = parse_lyrics(require_string(record, "lyrics", source, line));
  song.language = optional_string(record, "language", source, line);
  song.genre = optional_string(record, "genre", source, line);

  if (auto it = record.find("year"); it != record.end() && !it->is_null()) {
    if (!it->is_number_integer()) fail(source, line, "year", "expected an integer");
    auto year = it->get<long long>();
    if (year < 1000 || year > 9999) fail(source, line, "year", "out of range");
    song.year = static_cast<int>(year);
  }

  if (auto label = optional_string(record, "explicit", source, line)) {
    if (*label == "explicit") {
      song.explicit_gold = Explicitness::Explicit;
    } else if (*label == "clean") {
      song.explicit_gold = Explicitness::Clean;
    } else if (*label != "unknown") {
      fail(source, line, "explicit", "expected \"explicit\" or \"clean\"");
    }
  }

  song.social_tags = string_array(record, "social_tags", source, line);
  song.emotion_tags = string_array(record, "emotion_tags", source, line);

  auto valence = optional_number(record, "valence", source, line);
  auto arousal = optional_number(record, "arousal", source, line);
  if (valence.has_value() != arousal.has_value()) {
    fail(source, line, valence ? "arousal" : "valence", "valence and arousal must appear together");
  }
  if (valence) {
    VAPoint point{scale.to_canonical(*valence), scale.to_canonical(*arousal)};
    constexpr double kSlack = 1e-9;
    for (auto [name, v] : {std::pair{"valence", &point.valence}, std::pair{"arousal", &point.arousal}}) {
      if (*v < -1.0 - kSlack || *v > 1.0 + kSlack) fail(source, line, name, "outside the declared scale");
      *v = std::clamp(*v, -1.0, 1.0);
    }
    song.va_gold = point;
  }
  return song;
}

}  // namespace

Corpus read_corpus(std::istream& in, std::string_view source) {
  Corpus corpus;
  Scale scale;
  bool first_record = true;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (trim(text).empty()) continue;
    json record;
    try {
      record = json::parse(text);
    } catch (const json::parse_error& e) {
      fail(source, line_no, "", std::string("invalid JSON: ") + e.what());
    }
    if (!record.is_object()) fail(source, line_no, "", "expected a JSON object");

    if (record.contains("va_scale")) {
      if (!first_record) fail(source, line_no, "va_scale", "header must be the first record");
      const auto& range = record["va_scale"];
      if (record.size() != 1 || !range.is_array() || range.size() != 2 || !range[0].is_number() ||
          !range[1].is_number()) {
        fail(source, line_no, "va_scale", "expected {\"va_scale\": [lo, hi]}");
      }
      scale = {range[0].get<double>(), range[1].get<double>()};
      if (!(scale.lo < scale.hi)) fail(source, line_no, "va_scale", "lo must be below hi");
      first_record = false;
      continue;
    }
    first_record = false;

    Song song = parse_record(record, scale, source, line_no);
    if (corpus.find(song.id) != nullptr) {
      fail(source, line_no, "id", "duplicate id '" + song.id + "'");
    }
    try {
      corpus.add(std::move(song));
    } catch (const DataError& e) {
      fail(source, line_no, "", e.what());
    }
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus file " + path.string());
  return read_corpus(in, path.string());
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  for (const auto& song : corpus) {
    nlohmann::ordered_json record;
    record["id"] = song.id;
    record["artist"] = song.artist;
    record["title"] = song.title;
    record["lyrics"] = song.lyrics();
    if (song.language) record["language"] = *song.language;
    if (song.genre) record["genre"] = *song.genre;
    if (song.year) record["year"] = *song.year;
    if (song.explicit_gold != Explicitness::Unknown) {
      record["explicit"] = std::string(to_string(song.explicit_gold));
    }
    if (!song.social_tags.empty()) record["social_tags"] = song.social_tags;
    if (!song.emotion_tags.empty()) record["emotion_tags"] = song.emotion_tags;
    if (song.va_gold) {
      record["valence"] = song.va_gold->valence;
      record["arousal"] = song.va_gold->arousal;
    }
    out << record.dump() << '\n';
  }
}

void save_corpus(const std::filesystem::path& path, const Corpus& corpus) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write corpus file " + path.string());
  write_corpus(out, corpus);
}

std::optional<std::string> detect_language(const Song& song, double threshold) {
  std::vector<std::string> tokens;
  for (const auto& segment : song.segments) {
    for (const auto& line : segment) {
      auto words = word_tokens(line);
      tokens.insert(tokens.end(), std::make_move_iterator(words.begin()),
                    std::make_move_iterator(words.end()));
    }
  }
  if (tokens.empty()) return std::nullopt;

  std::string_view best;
  double best_score = -1.0;
  for (const auto& profile : language_profiles()) {
    std::size_t hits = 0;
    for (const auto& token : tokens) hits += profile.words.contains(token) ? 1 : 0;
    double score = static_cast<double>(hits) / static_cast<double>(tokens.size());
    if (score > best_score) {
      best_score = score;
      best = profile.code;
    }
  }
  if (best_score < threshold) return std::nullopt;
  return std::string(best);
}

Corpus with_detected_languages(const Corpus& corpus, bool overwrite) {
  Corpus out;
  for (Song song : corpus) {
    if (overwrite || !song.language) song.language = detect_language(song);
    out.add(std::move(song));
  }
  return out;
}

int decade_of(int year) {
  if (year < 1000) throw std::invalid_argument("decade_of: year must be >= 1000");
  return year / 10 * 10;
}

std::optional<int> decade_of(const Song& song) {
  if (!song.year) return std::nullopt;
  return decade_of(*song.year);
}

namespace {

void finish(Histogram& hist) {
  std::size_t total = 0;
  for (const auto& [label, bin] : hist) total += bin.count;
  for (auto& [label, bin] : hist) {
    bin.fraction = static_cast<double>(bin.count) / static_cast<double>(total);
  }
}

}  // namespace

CorpusStats corpus_stats(const Corpus& corpus) {
  CorpusStats stats;
  for (const auto& song : corpus) {
    if (song.language) ++stats.language[*song.language].count;
    if (song.genre) ++stats.genre[*song.genre].count;
    if (auto decade = decade_of(song)) ++stats.decade[std::to_string(*decade)].count;
  }
  finish(stats.language);
  finish(stats.genre);
  finish(stats.decade);
  return stats;
}

}  // namespace lyrica
