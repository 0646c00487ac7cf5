#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lyrica/explicit.hpp"
#include "lyrica/summarizer.hpp"
#include "lyrica/topics.hpp"

namespace lyrica {

/// A value in the small TOML subset the config format accepts.
using ConfigValue = std::variant<bool, std::int64_t, double, std::string, std::vector<std::string>>;

/// Flat "section.key" -> value map.
using ConfigTable = std::map<std::string, ConfigValue>;

/// Parses `key = value` lines under optional `[section]` headers. Values are
/// quoted strings, integers, floats, true/false or arrays of strings; `#`
/// starts a comment. Throws ConfigError with the line number.
ConfigTable parse_config_text(std::string_view text, std::string_view source = "<config>");

/// Parses a single override of the form `section.key=value`. Values that are
/// not valid TOML literals are taken as bare strings.
std::pair<std::string, ConfigValue> parse_override(std::string_view text);

enum class Stage { Ssm, Segment, Thumbnail, Summarize, Explicit, Emotion, Topics };

std::string_view to_string(Stage stage);
Stage parse_stage(std::string_view text);

struct ModelPaths {
  std::filesystem::path segmenter;
  std::filesystem::path explicit_classifier;
  std::filesystem::path emotion;
  std::filesystem::path topics;
  /// Tag lexicon used to derive valence/arousal targets when training.
  std::filesystem::path lexicon;
};

struct PipelineConfig {
  std::filesystem::path corpus;
  std::filesystem::path output_dir = "lyrica-out";
  std::vector<Stage> stages{Stage::Ssm, Stage::Segment, Stage::Thumbnail, Stage::Summarize,
                            Stage::Explicit, Stage::Emotion, Stage::Topics};
  ModelPaths models;
  /// Train models whose file is missing on the input corpus and write them
  /// under output_dir/models.
  bool train_missing = false;
  bool report = true;

  std::uint64_t segment_seed = 17;
  double family_threshold = kDefaultFamilyThreshold;
  ScorerSet scorers = ScorerSet::all();
  std::size_t summary_lines = 4;
  ExplicitMethod explicit_method = ExplicitMethod::TfidfRegression;
  std::uint64_t explicit_seed = 23;
  LdaConfig lda;
  std::uint64_t infer_seed = 1;
  std::size_t top_words = 10;

  bool enabled(Stage stage) const;
};

/// Applies table entries to a config; unknown keys and ill-typed values raise
/// ConfigError.
void apply_config(PipelineConfig& config, const ConfigTable& table);
PipelineConfig load_config(const std::filesystem::path& path);

/// Canonical text form; parse_config_text(render_config(c)) reproduces c.
std::string render_config(const PipelineConfig& config);

}  // namespace lyrica
