#include "lyrica/ssm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "lyrica/error.hpp"
#include "lyrica/text.hpp"

namespace lyrica {

std::string_view to_string(Granularity granularity) {
  return granularity == Granularity::Line ? "line" : "segment";
}

Granularity parse_granularity(std::string_view text) {
  if (text == "line") return Granularity::Line;
  if (text == "segment") return Granularity::Segment;
  throw std::invalid_argument("unknown granularity '" + std::string(text) + "'");
}

Ssm::Ssm(Granularity granularity, std::size_t n)
    : granularity_(granularity), n_(n), values_(n * n, 0.0) {
  for (std::size_t i = 0; i < n; ++i) values_[i * n + i] = 1.0;
}

void Ssm::set(std::size_t i, std::size_t j, double value) {
  if (i >= n_ || j >= n_) throw std::out_of_range("Ssm::set: index out of range");
  if (!(value >= 0.0 && value <= 1.0)) throw std::invalid_argument("Ssm::set: value outside [0, 1]");
  if (i == j && value != 1.0) throw std::invalid_argument("Ssm::set: diagonal entries are fixed at 1");
  values_[i * n_ + j] = value;
  values_[j * n_ + i] = value;
}

std::size_t edit_distance(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  // Single row over the shorter string.
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    const char32_t ca = a[i - 1];
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      const std::size_t substitute = diagonal + (ca == b[j - 1] ? 0 : 1);
      row[j] = std::min({above + 1, row[j - 1] + 1, substitute});
      diagonal = above;
    }
  }
  return row[b.size()];
}

namespace {

double normalized(std::u32string_view a, std::u32string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 0.0;
  return static_cast<double>(edit_distance(a, b)) / static_cast<double>(longest);
}

}  // namespace

double normalized_edit_distance(std::string_view a, std::string_view b) {
  return normalized(decode_utf8(a), decode_utf8(b));
}

double similarity(std::string_view a, std::string_view b) {
  return 1.0 - normalized_edit_distance(a, b);
}

Ssm similarity_matrix(std::span<const std::string> units, Granularity granularity) {
  std::vector<std::u32string> folded;
  folded.reserve(units.size());
  for (const auto& unit : units) folded.push_back(decode_utf8(fold_case(unit)));

  Ssm ssm(granularity, units.size());
  for (std::size_t i = 0; i < folded.size(); ++i) {
    for (std::size_t j = i + 1; j < folded.size(); ++j) {
      ssm.set(i, j, folded[i] == folded[j] ? 1.0 : 1.0 - normalized(folded[i], folded[j]));
    }
  }
  return ssm;
}

Ssm line_ssm(const Song& song) {
  auto lines = song.lines();
  if (lines.empty()) throw DataError("song '" + song.id + "' has no lines");
  return similarity_matrix(lines, Granularity::Line);
}

Ssm segment_ssm(const Song& song) {
  if (song.segments.empty()) throw DataError("song '" + song.id + "' has no segments");
  std::vector<std::string> rendered;
  rendered.reserve(song.segments.size());
  for (const auto& segment : song.segments) {
    std::string text;
    for (std::size_t l = 0; l < segment.size(); ++l) {
      if (l > 0) text += '\n';
      text += segment[l];
    }
    rendered.push_back(std::move(text));
  }
  return similarity_matrix(rendered, Granularity::Segment);
}

void write_ssm(std::ostream& out, const Ssm& ssm) {
  out << ssm.size() << ' ' << to_string(ssm.granularity()) << '\n';
  char buf[32];
  for (std::size_t i = 0; i < ssm.size(); ++i) {
    for (std::size_t j = 0; j < ssm.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.4f", ssm(i, j));
      if (j > 0) out << ' ';
      out << buf;
    }
    out << '\n';
  }
}

Ssm read_ssm(std::istream& in) {
  std::size_t n = 0;
  std::string granularity;
  if (!(in >> n >> granularity)) throw DataError("ssm: malformed header");
  Ssm ssm(parse_granularity(granularity), n);
  std::vector<double> values(n * n);
  for (auto& v : values) {
    if (!(in >> v)) throw DataError("ssm: expected " + std::to_string(n * n) + " values");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i * n + i] != 1.0) throw DataError("ssm: diagonal entries must be 1");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (values[i * n + j] != values[j * n + i]) throw DataError("ssm: matrix is not symmetric");
      if (!(values[i * n + j] >= 0.0 && values[i * n + j] <= 1.0)) {
        throw DataError("ssm: entry outside [0, 1]");
      }
      ssm.set(i, j, values[i * n + j]);
    }
  }
  return ssm;
}

}  // namespace lyrica
