#include "lyrica/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "lyrica/error.hpp"
#include "lyrica/text.hpp"

namespace lyrica {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size() || text[pos] == '#';
  }
};

std::string parse_string(Cursor& c) {
  // Caller has checked the opening quote.
  ++c.pos;
  std::string out;
  while (c.pos < c.text.size()) {
    const char ch = c.text[c.pos++];
    if (ch == '"') return out;
    if (ch == '\\') {
      if (c.pos >= c.text.size()) break;
      const char esc = c.text[c.pos++];
      switch (esc) {
        case 'n':
          out += '\n';
          break;
        case 't':
          out += '\t';
          break;
        case '"':
        case '\\':
          out += esc;
          break;
        default:
          throw ConfigError(std::string("unsupported escape \\") + esc);
      }
    } else {
      out += ch;
    }
  }
  throw ConfigError("unterminated string");
}

ConfigValue parse_value(Cursor& c) {
  c.skip_space();
  if (c.pos >= c.text.size()) throw ConfigError("missing value");
  const char first = c.text[c.pos];
  if (first == '"') return parse_string(c);
  if (first == '[') {
    ++c.pos;
    std::vector<std::string> items;
    while (true) {
      c.skip_space();
      if (c.pos >= c.text.size()) throw ConfigError("unterminated array");
      if (c.text[c.pos] == ']') {
        ++c.pos;
        return items;
      }
      if (c.text[c.pos] != '"') throw ConfigError("arrays may only hold strings");
      items.push_back(parse_string(c));
      c.skip_space();
      if (c.pos < c.text.size() && c.text[c.pos] == ',') ++c.pos;
    }
  }
  std::size_t end = c.pos;
  while (end < c.text.size() && c.text[end] != ' ' && c.text[end] != '\t' && c.text[end] != '#') ++end;
  const std::string_view token = c.text.substr(c.pos, end - c.pos);
  c.pos = end;
  if (token == "true") return true;
  if (token == "false") return false;
  std::int64_t i = 0;
  auto [ip, iec] = std::from_chars(token.data(), token.data() + token.size(), i);
  if (iec == std::errc() && ip == token.data() + token.size()) return i;
  double d = 0.0;
  auto [dp, dec] = std::from_chars(token.data(), token.data() + token.size(), d);
  if (dec == std::errc() && dp == token.data() + token.size()) return d;
  throw ConfigError("invalid value '" + std::string(token) + "'");
}

bool valid_key(std::string_view key) {
  return !key.empty() && std::all_of(key.begin(), key.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '_' ||
           ch == '-' || ch == '.';
  });
}

}  // namespace

ConfigTable parse_config_text(std::string_view text, std::string_view source) {
  ConfigTable table;
  std::string section;
  std::size_t number = 0;
  for (auto raw : split_lines(text)) {
    ++number;
    try {
      Cursor c{raw};
      if (c.done()) continue;
      if (c.text[c.pos] == '[') {
        const auto close = raw.find(']', c.pos);
        if (close == std::string_view::npos) throw ConfigError("unterminated section header");
        section = std::string(trim(raw.substr(c.pos + 1, close - c.pos - 1)));
        if (!valid_key(section)) throw ConfigError("invalid section name");
        c.pos = close + 1;
        if (!c.done()) throw ConfigError("trailing characters after section header");
        continue;
      }
      const auto eq = raw.find('=', c.pos);
      if (eq == std::string_view::npos) throw ConfigError("expected key = value");
      const std::string key(trim(raw.substr(c.pos, eq - c.pos)));
      if (!valid_key(key)) throw ConfigError("invalid key '" + key + "'");
      c.pos = eq + 1;
      auto value = parse_value(c);
      if (!c.done()) throw ConfigError("trailing characters after value");
      const std::string full = section.empty() ? key : section + "." + key;
      if (!table.emplace(full, std::move(value)).second) throw ConfigError("duplicate key '" + full + "'");
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(source) + ": line " + std::to_string(number) + ": " + e.what());
    }
  }
  return table;
}

std::pair<std::string, ConfigValue> parse_override(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ConfigError("override '" + std::string(text) + "' is not key=value");
  const std::string key(trim(text.substr(0, eq)));
  if (!valid_key(key)) throw ConfigError("invalid key '" + key + "'");
  const auto value_text = trim(text.substr(eq + 1));
  try {
    Cursor c{value_text};
    auto value = parse_value(c);
    if (c.done()) return {key, std::move(value)};
  } catch (const ConfigError&) {
  }
  return {key, std::string(value_text)};
}

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::Ssm:
      return "ssm";
    case Stage::Segment:
      return "segment";
    case Stage::Thumbnail:
      return "thumbnail";
    case Stage::Summarize:
      return "summarize";
    case Stage::Explicit:
      return "explicit";
    case Stage::Emotion:
      return "emotion";
    case Stage::Topics:
      break;
  }
  return "topics";
}

Stage parse_stage(std::string_view text) {
  for (auto s : {Stage::Ssm, Stage::Segment, Stage::Thumbnail, Stage::Summarize, Stage::Explicit, Stage::Emotion,
                 Stage::Topics}) {
    if (to_string(s) == text) return s;
  }
  throw ConfigError("unknown stage '" + std::string(text) + "'");
}

bool PipelineConfig::enabled(Stage stage) const {
  return std::find(stages.begin(), stages.end(), stage) != stages.end();
}

namespace {

const char* type_name(const ConfigValue& v) {
  switch (v.index()) {
    case 0:
      return "boolean";
    case 1:
      return "integer";
    case 2:
      return "float";
    case 3:
      return "string";
  }
  return "array";
}

template <typename T>
const T& expect(const std::string& key, const ConfigValue& v, const char* wanted) {
  if (const T* p = std::get_if<T>(&v)) return *p;
  throw ConfigError("config key '" + key + "': expected " + wanted + ", got " + type_name(v));
}

double as_double(const std::string& key, const ConfigValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
  return expect<double>(key, v, "number");
}

std::uint64_t as_unsigned(const std::string& key, const ConfigValue& v) {
  const auto i = expect<std::int64_t>(key, v, "integer");
  if (i < 0) throw ConfigError("config key '" + key + "': must not be negative");
  return static_cast<std::uint64_t>(i);
}

std::size_t as_positive(const std::string& key, const ConfigValue& v) {
  const auto u = as_unsigned(key, v);
  if (u == 0) throw ConfigError("config key '" + key + "': must be positive");
  return static_cast<std::size_t>(u);
}

std::vector<std::string> as_list(const std::string& key, const ConfigValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return split_list(*s, ',');
  return expect<std::vector<std::string>>(key, v, "array of strings");
}

}  // namespace

void apply_config(PipelineConfig& c, const ConfigTable& table) {
  for (const auto& [key, v] : table) {
    if (key == "corpus") {
      c.corpus = expect<std::string>(key, v, "string");
    } else if (key == "output_dir") {
      c.output_dir = expect<std::string>(key, v, "string");
    } else if (key == "stages") {
      c.stages.clear();
      for (const auto& s : as_list(key, v)) {
        const auto stage = parse_stage(s);
        if (!c.enabled(stage)) c.stages.push_back(stage);
      }
    } else if (key == "train_missing") {
      c.train_missing = expect<bool>(key, v, "boolean");
    } else if (key == "report") {
      c.report = expect<bool>(key, v, "boolean");
    } else if (key == "models.segmenter") {
      c.models.segmenter = expect<std::string>(key, v, "string");
    } else if (key == "models.explicit") {
      c.models.explicit_classifier = expect<std::string>(key, v, "string");
    } else if (key == "models.emotion") {
      c.models.emotion = expect<std::string>(key, v, "string");
    } else if (key == "models.topics") {
      c.models.topics = expect<std::string>(key, v, "string");
    } else if (key == "models.lexicon") {
      c.models.lexicon = expect<std::string>(key, v, "string");
    } else if (key == "segment.seed") {
      c.segment_seed = as_unsigned(key, v);
    } else if (key == "thumbnail.family_threshold") {
      c.family_threshold = as_double(key, v);
      if (!(c.family_threshold >= 0.0 && c.family_threshold <= 1.0)) {
        throw ConfigError("config key '" + key + "': must lie in [0, 1]");
      }
    } else if (key == "summarize.scorers") {
      std::string joined;
      for (const auto& s : as_list(key, v)) joined += (joined.empty() ? "" : ",") + s;
      ScorerSet set;
      try {
        set = parse_scorers(joined);
      } catch (const std::invalid_argument& e) {
        throw ConfigError("config key '" + key + "': " + e.what());
      }
      if (set.empty()) throw ConfigError("config key '" + key + "': no scorers given");
      c.scorers = set;
    } else if (key == "summarize.lines") {
      c.summary_lines = as_positive(key, v);
    } else if (key == "explicit.method") {
      try {
        c.explicit_method = parse_explicit_method(expect<std::string>(key, v, "string"));
      } catch (const std::invalid_argument& e) {
        throw ConfigError("config key '" + key + "': " + e.what());
      }
    } else if (key == "explicit.seed") {
      c.explicit_seed = as_unsigned(key, v);
    } else if (key == "topics.k") {
      c.lda.topics = as_positive(key, v);
    } else if (key == "topics.alpha") {
      c.lda.alpha = as_double(key, v);
      if (!(c.lda.alpha > 0.0)) throw ConfigError("config key '" + key + "': must be positive");
    } else if (key == "topics.eta") {
      c.lda.eta = as_double(key, v);
      if (!(c.lda.eta > 0.0)) throw ConfigError("config key '" + key + "': must be positive");
    } else if (key == "topics.iterations") {
      c.lda.iterations = static_cast<int>(as_positive(key, v));
    } else if (key == "topics.seed") {
      c.lda.seed = as_unsigned(key, v);
    } else if (key == "topics.infer_seed") {
      c.infer_seed = as_unsigned(key, v);
    } else if (key == "topics.top_words") {
      c.top_words = as_positive(key, v);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  PipelineConfig config;
  apply_config(config, parse_config_text(buf.str(), path.string()));
  // Relative paths in a config file are resolved against its directory.
  const auto base = path.parent_path();
  for (auto* p : {&config.corpus, &config.output_dir, &config.models.segmenter, &config.models.explicit_classifier,
                  &config.models.emotion, &config.models.topics, &config.models.lexicon}) {
    if (!p->empty() && p->is_relative()) *p = base / *p;
  }
  return config;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    if (ch == '\n') {
      out += "\\n";
      continue;
    }
    if (ch == '\t') {
      out += "\\t";
      continue;
    }
    out += ch;
  }
  return out + '"';
}

std::string number(double v) {
  auto s = format_double(v);
  // Keep floats recognisable as floats.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

}  // namespace

std::string render_config(const PipelineConfig& c) {
  std::ostringstream out;
  out << "corpus = " << quote(c.corpus.generic_string()) << '\n';
  out << "output_dir = " << quote(c.output_dir.generic_string()) << '\n';
  out << "stages = [";
  for (std::size_t i = 0; i < c.stages.size(); ++i) out << (i ? ", " : "") << quote(std::string(to_string(c.stages[i])));
  out << "]\n";
  out << "train_missing = " << (c.train_missing ? "true" : "false") << '\n';
  out << "report = " << (c.report ? "true" : "false") << '\n';
  out << "\n[models]\n";
  out << "segmenter = " << quote(c.models.segmenter.generic_string()) << '\n';
  out << "explicit = " << quote(c.models.explicit_classifier.generic_string()) << '\n';
  out << "emotion = " << quote(c.models.emotion.generic_string()) << '\n';
  out << "topics = " << quote(c.models.topics.generic_string()) << '\n';
  out << "lexicon = " << quote(c.models.lexicon.generic_string()) << '\n';
  out << "\n[segment]\nseed = " << c.segment_seed << '\n';
  out << "\n[thumbnail]\nfamily_threshold = " << number(c.family_threshold) << '\n';
  out << "\n[summarize]\nscorers = [";
  bool first = true;
  for (auto s : {Scorer::Rank, Scorer::Topic, Scorer::Fit}) {
    if (!c.scorers.contains(s)) continue;
    out << (first ? "" : ", ") << quote(to_string(ScorerSet{s}));
    first = false;
  }
  out << "]\nlines = " << c.summary_lines << '\n';
  out << "\n[explicit]\nmethod = " << quote(std::string(to_string(c.explicit_method))) << '\n';
  out << "seed = " << c.explicit_seed << '\n';
  out << "\n[topics]\nk = " << c.lda.topics << "\nalpha = " << number(c.lda.alpha) << "\neta = " << number(c.lda.eta)
      << "\niterations = " << c.lda.iterations << "\nseed = " << c.lda.seed << "\ninfer_seed = " << c.infer_seed
      << "\ntop_words = " << c.top_words << '\n';
  return out.str();
}

}  // namespace lyrica
