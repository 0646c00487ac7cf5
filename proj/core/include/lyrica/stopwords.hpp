#pragma once

#include <span>
#include <string_view>
#include <unordered_set>

namespace lyrica {

struct LanguageProfile {
  std::string_view code;
  std::unordered_set<std::string_view> words;
};

/// Stopword profiles for the ten most frequent lyric languages, in a fixed
/// order (ties during detection resolve to the earlier profile).
std::span<const LanguageProfile> language_profiles();

/// English stopwords removed before topic modelling.
const std::unordered_set<std::string_view>& english_stopwords();

}  // namespace lyrica
