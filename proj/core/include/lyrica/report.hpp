#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lyrica/annotation.hpp"
#include "lyrica/corpus.hpp"
#include "lyrica/diachronic.hpp"

namespace lyrica {

/// label,count,fraction
void write_histogram_csv(std::ostream& out, const Histogram& histogram);

struct ChartLine {
  std::string name;
  /// (decade, value) pairs sorted by decade.
  std::vector<std::pair<int, double>> points;
};

struct LineChart {
  std::string title;
  double y_min = 0.0;
  double y_max = 1.0;
  std::vector<ChartLine> lines;
  /// Decades whose axis label gets a footnote marker.
  std::vector<int> flagged;
  std::string footnote;
};

/// Fixed-size SVG with one polyline per line; output depends only on the
/// input values.
std::string render_line_chart(const LineChart& chart);
std::string render_bar_chart(const std::string& title, const Histogram& histogram);

ChartLine to_chart_line(std::string name, const DecadeSeries<double>& series);

/// Per-song predictions gathered from annotation records, aligned with the
/// corpus.
struct AnnotationColumns {
  std::vector<std::optional<TopicDistribution>> topics;
  std::vector<std::optional<bool>> explicit_pred;
  std::vector<std::optional<VAPoint>> va_pred;
};

AnnotationColumns annotation_columns(const Corpus& corpus, const std::vector<AnnotationRecord>& records);

/// Writes corpus statistics and, when there are annotations, the diachronic
/// series as CSV + SVG into `dir`. Returns the written files in write order.
std::vector<std::filesystem::path> emit_report(const Corpus& corpus, const std::vector<AnnotationRecord>& records,
                                               const std::filesystem::path& dir);

}  // namespace lyrica
