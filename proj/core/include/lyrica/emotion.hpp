#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lyrica/bow.hpp"
#include "lyrica/corpus.hpp"
#include "lyrica/linear_model.hpp"

namespace lyrica {

/// Term -> (valence, arousal) in [-1, +1], keys case-folded.
struct VALexicon {
  std::unordered_map<std::string, VAPoint> entries;
  double source_low = -1.0;
  double source_high = 1.0;
};

/// TSV "term<TAB>valence<TAB>arousal" preceded by a "#scale lo hi" line;
/// values are mapped linearly from [lo, hi] onto [-1, +1].
VALexicon read_lexicon(std::istream& in, std::string_view source = "<stream>");
VALexicon load_lexicon(const std::filesystem::path& path);

/// Mean of the lexicon entries of the distinct (case-folded) tags that match
/// exactly; nullopt when none matches.
std::optional<VAPoint> tags_to_va(std::span<const std::string> tags, const VALexicon& lexicon);

struct Correlation {
  double value = 0.0;
  /// Set when either input has zero variance; value is then 0.
  bool degenerate = false;
};

/// Throws std::invalid_argument for unequal lengths or fewer than two values.
Correlation pearson(std::span<const double> x, std::span<const double> y);
/// Pearson on average ranks (ties share their mean rank).
Correlation spearman(std::span<const double> x, std::span<const double> y);
std::vector<double> average_ranks(std::span<const double> values);

/// Independent ridge regressions for valence and arousal over tf-idf features.
struct VARegressor {
  BowSpace space;
  LinearModel valence;
  LinearModel arousal;

  /// Clamped into [-1, +1].
  VAPoint predict(const Song& song) const;
};

inline constexpr std::size_t kMinimumVATrainingSongs = 10;

/// Uses every song with va_gold. Throws DataError below the minimum.
VARegressor train_va_regressor(const Corpus& corpus, const RidgeOptions& options = {});

struct VAEvaluation {
  std::size_t songs = 0;
  Correlation valence_pearson;
  Correlation valence_spearman;
  Correlation arousal_pearson;
  Correlation arousal_spearman;
};

/// Correlations between predictions and va_gold over the labelled songs.
VAEvaluation evaluate_va_regressor(const VARegressor& regressor, const Corpus& corpus);

std::string va_regressor_to_json(const VARegressor& regressor);
VARegressor va_regressor_from_json(const std::string& text);
void save_va_regressor(const std::filesystem::path& path, const VARegressor& regressor);
VARegressor load_va_regressor(const std::filesystem::path& path);

}  // namespace lyrica
