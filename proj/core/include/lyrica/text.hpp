#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lyrica {

/// ASCII lower-casing. Bytes outside A-Z are copied unchanged, so UTF-8
/// sequences survive intact.
std::string fold_case(std::string_view text);

std::string_view trim_right(std::string_view text);
std::string_view trim(std::string_view text);

/// Lower-cased word tokens. A token is a maximal run of ASCII alphanumerics
/// or non-ASCII bytes; everything else separates tokens.
std::vector<std::string> word_tokens(std::string_view text);

/// Decodes UTF-8 into code points. Invalid bytes are passed through as
/// single code points so that distinct inputs stay distinct.
std::u32string decode_utf8(std::string_view text);

/// Splits on '\n' (a trailing '\r' is dropped from every piece).
std::vector<std::string_view> split_lines(std::string_view text);

std::vector<std::string> split_list(std::string_view text, char delimiter);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

/// SplitMix64 finalizer, used to derive independent seeds.
std::uint64_t mix_seed(std::uint64_t value);

}  // namespace lyrica
