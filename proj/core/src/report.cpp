#include "lyrica/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "lyrica/error.hpp"
#include "lyrica/text.hpp"

namespace lyrica {

void write_histogram_csv(std::ostream& out, const Histogram& histogram) {
  out << "label,count,fraction\n";
  for (const auto& [label, bin] : histogram) {
    // Labels come from user data; quote them when needed.
    if (label.find_first_of(",\"\n") != std::string::npos) {
      out << '"';
      for (char ch : label) out << (ch == '"' ? "\"\"" : std::string(1, ch));
      out << '"';
    } else {
      out << label;
    }
    out << ',' << bin.count << ',' << format_double(bin.fraction) << '\n';
  }
}

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 360.0;
constexpr double kLeft = 56.0;
constexpr double kRight = 150.0;
constexpr double kTop = 36.0;
constexpr double kBottom = 56.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape_xml(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

void open_svg(std::ostringstream& out, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(kWidth) << "\" height=\"" << fixed(kHeight)
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << fixed(kWidth / 2) << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
      << escape_xml(title) << "</text>\n";
  const double bottom = kHeight - kBottom;
  out << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(bottom) << "\" x2=\"" << fixed(kWidth - kRight)
      << "\" y2=\"" << fixed(bottom) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(kTop) << "\" x2=\"" << fixed(kLeft) << "\" y2=\""
      << fixed(bottom) << "\" stroke=\"black\"/>\n";
}

}  // namespace

std::string render_line_chart(const LineChart& chart) {
  std::set<int> decade_set;
  for (const auto& line : chart.lines) {
    for (const auto& p : line.points) decade_set.insert(p.first);
  }
  const std::vector<int> decades(decade_set.begin(), decade_set.end());
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double span = chart.y_max > chart.y_min ? chart.y_max - chart.y_min : 1.0;
  auto x_of = [&](int decade) {
    const auto i = static_cast<double>(std::lower_bound(decades.begin(), decades.end(), decade) - decades.begin());
    return decades.size() < 2 ? kLeft + plot_w / 2 : kLeft + plot_w * i / static_cast<double>(decades.size() - 1);
  };
  auto y_of = [&](double v) {
    const double t = std::clamp((v - chart.y_min) / span, 0.0, 1.0);
    return kTop + plot_h * (1.0 - t);
  };

  std::ostringstream out;
  open_svg(out, chart.title);
  for (double t : {0.0, 0.5, 1.0}) {
    const double v = chart.y_min + t * span;
    out << "<text x=\"" << fixed(kLeft - 6) << "\" y=\"" << fixed(y_of(v) + 4) << "\" text-anchor=\"end\">"
        << fixed(v) << "</text>\n";
  }
  bool any_flag = false;
  for (int d : decades) {
    const bool flagged = std::find(chart.flagged.begin(), chart.flagged.end(), d) != chart.flagged.end();
    any_flag = any_flag || flagged;
    out << "<text x=\"" << fixed(x_of(d)) << "\" y=\"" << fixed(kHeight - kBottom + 16)
        << "\" text-anchor=\"middle\">" << d << (flagged ? "*" : "") << "</text>\n";
  }
  for (std::size_t i = 0; i < chart.lines.size(); ++i) {
    const auto& line = chart.lines[i];
    const char* color = kPalette[i % std::size(kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t j = 0; j < line.points.size(); ++j) {
      out << (j ? " " : "") << fixed(x_of(line.points[j].first)) << ',' << fixed(y_of(line.points[j].second));
    }
    out << "\"/>\n";
    const double ly = kTop + 14.0 * static_cast<double>(i);
    out << "<rect x=\"" << fixed(kWidth - kRight + 10) << "\" y=\"" << fixed(ly - 8) << "\" width=\"10\" height=\"10\" fill=\""
        << color << "\"/>\n";
    out << "<text x=\"" << fixed(kWidth - kRight + 24) << "\" y=\"" << fixed(ly) << "\">" << escape_xml(line.name)
        << "</text>\n";
  }
  if (any_flag && !chart.footnote.empty()) {
    out << "<text x=\"" << fixed(kLeft) << "\" y=\"" << fixed(kHeight - 12) << "\" font-size=\"10\">* "
        << escape_xml(chart.footnote) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_bar_chart(const std::string& title, const Histogram& histogram) {
  std::ostringstream out;
  open_svg(out, title);
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  std::size_t max_count = 0;
  for (const auto& [label, bin] : histogram) max_count = std::max(max_count, bin.count);
  const double slot = histogram.empty() ? plot_w : plot_w / static_cast<double>(histogram.size());
  std::size_t i = 0;
  for (const auto& [label, bin] : histogram) {
    const double h = max_count == 0 ? 0.0 : plot_h * static_cast<double>(bin.count) / static_cast<double>(max_count);
    const double x = kLeft + slot * static_cast<double>(i) + slot * 0.1;
    out << "<rect x=\"" << fixed(x) << "\" y=\"" << fixed(kTop + plot_h - h) << "\" width=\"" << fixed(slot * 0.8)
        << "\" height=\"" << fixed(h) << "\" fill=\"" << kPalette[0] << "\"/>\n";
    out << "<text x=\"" << fixed(x + slot * 0.4) << "\" y=\"" << fixed(kHeight - kBottom + 16)
        << "\" text-anchor=\"middle\">" << escape_xml(label) << "</text>\n";
    ++i;
  }
  out << "</svg>\n";
  return out.str();
}

ChartLine to_chart_line(std::string name, const DecadeSeries<double>& series) {
  ChartLine line{std::move(name), {}};
  for (const auto& e : series.entries) line.points.emplace_back(e.decade, e.value);
  return line;
}

AnnotationColumns annotation_columns(const Corpus& corpus, const std::vector<AnnotationRecord>& records) {
  AnnotationColumns cols;
  cols.topics.resize(corpus.size());
  cols.explicit_pred.resize(corpus.size());
  cols.va_pred.resize(corpus.size());
  const auto aligned = align_annotations(corpus, records);
  for (std::size_t i = 0; i < aligned.size(); ++i) {
    if (!aligned[i]) continue;
    cols.topics[i] = aligned[i]->topics;
    cols.explicit_pred[i] = aligned[i]->explicit_pred;
    cols.va_pred[i] = aligned[i]->va_pred;
  }
  return cols;
}

namespace {

class ReportWriter {
 public:
  explicit ReportWriter(std::filesystem::path dir) : dir_(std::move(dir)) {}

  void write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out << text;
    written_.push_back(path);
  }

  std::vector<std::filesystem::path> written() && { return std::move(written_); }

 private:
  std::filesystem::path dir_;
  std::vector<std::filesystem::path> written_;
};

std::vector<int> advisory_flags(const DecadeSeries<double>& series) {
  std::vector<int> out;
  for (const auto& e : series.entries) {
    if (e.before_advisory_label) out.push_back(e.decade);
  }
  return out;
}

}  // namespace

std::vector<std::filesystem::path> emit_report(const Corpus& corpus, const std::vector<AnnotationRecord>& records,
                                               const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  ReportWriter w(dir);

  const auto stats = corpus_stats(corpus);
  const std::pair<const char*, const Histogram*> histograms[] = {
      {"language", &stats.language}, {"genre", &stats.genre}, {"decade", &stats.decade}};
  for (const auto& [name, h] : histograms) {
    std::ostringstream csv;
    write_histogram_csv(csv, *h);
    w.write(std::string("stats_") + name + ".csv", csv.str());
    w.write(std::string("stats_") + name + ".svg", render_bar_chart(std::string("Songs by ") + name, *h));
  }
  if (records.empty()) return std::move(w).written();

  const auto cols = annotation_columns(corpus, records);

  const bool have_topics = std::any_of(cols.topics.begin(), cols.topics.end(), [](const auto& t) { return t.has_value(); });
  if (have_topics) {
    const auto series = topic_importance_by_decade(corpus, cols.topics);
    std::ostringstream csv;
    write_topic_series_csv(csv, series);
    w.write("topics_by_decade.csv", csv.str());
    LineChart chart{"Topic importance by decade", 0.0, 1.0, {}, {}, {}};
    for (std::size_t k = 0; k < series.size(); ++k) chart.lines.push_back(to_chart_line("topic " + std::to_string(k), series[k]));
    w.write("topics_by_decade.svg", render_line_chart(chart));
  }

  LineChart explicit_chart{"Share of explicit songs by decade", 0.0, 1.0, {}, {},
                           "decade starts before 1985, when the Parental Advisory Label was introduced"};
  const auto gold = explicitness_by_decade(corpus, gold_explicit_labels(corpus));
  {
    std::ostringstream csv;
    write_series_csv(csv, gold);
    w.write("explicit_gold_by_decade.csv", csv.str());
    explicit_chart.lines.push_back(to_chart_line("gold", gold));
    explicit_chart.flagged = advisory_flags(gold);
  }
  const bool have_explicit =
      std::any_of(cols.explicit_pred.begin(), cols.explicit_pred.end(), [](const auto& p) { return p.has_value(); });
  if (have_explicit) {
    const auto predicted = explicitness_by_decade(corpus, predicted_explicit_labels(cols.explicit_pred));
    std::ostringstream csv;
    write_series_csv(csv, predicted);
    w.write("explicit_predicted_by_decade.csv", csv.str());
    explicit_chart.lines.push_back(to_chart_line("predicted", predicted));
    for (int d : advisory_flags(predicted)) {
      if (std::find(explicit_chart.flagged.begin(), explicit_chart.flagged.end(), d) == explicit_chart.flagged.end()) {
        explicit_chart.flagged.push_back(d);
      }
    }
  }
  w.write("explicit_by_decade.svg", render_line_chart(explicit_chart));

  const auto emotion = emotion_by_decade(corpus, cols.va_pred);
  {
    std::ostringstream csv;
    write_series_csv(csv, emotion);
    w.write("emotion_by_decade.csv", csv.str());
    LineChart chart{"Mean valence and arousal by decade", -1.0, 1.0, {}, {}, {}};
    ChartLine valence{"valence", {}}, arousal{"arousal", {}};
    for (const auto& e : emotion.entries) {
      valence.points.emplace_back(e.decade, e.value.valence);
      arousal.points.emplace_back(e.decade, e.value.arousal);
    }
    chart.lines = {valence, arousal};
    w.write("emotion_by_decade.svg", render_line_chart(chart));
  }
  return std::move(w).written();
}

}  // namespace lyrica
