#include "lyrica/segmenter.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "json_util.hpp"

namespace lyrica {

namespace {

double within_mean(const Ssm& ssm, std::size_t lo, std::size_t hi) {
  if (hi <= lo) return 1.0;  // a single line is maximally similar to itself
  double sum = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = lo; i <= hi; ++i) {
    for (std::size_t j = i + 1; j <= hi; ++j) {
      sum += ssm(i, j);
      ++pairs;
    }
  }
  return sum / static_cast<double>(pairs);
}

double across_mean(const Ssm& ssm, std::size_t above_lo, std::size_t border, std::size_t below_hi) {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = above_lo; i < border; ++i) {
    for (std::size_t j = border; j <= below_hi; ++j) {
      sum += ssm(i, j);
      ++count;
    }
  }
  return sum / static_cast<double>(count);
}

struct Run {
  std::size_t length = 0;
  double mean = 0.0;
};

bool longer(const Run& a, const Run& b) {
  return a.length != b.length ? a.length > b.length : a.mean > b.mean;
}

// For each border b in 1..n-1, the longest repetition stripe (run of at least
// two entries >= tau along an off-diagonal) that starts or stops exactly at b
// on either its row or its column side. Stripes cut off by the matrix edge do
// not count as stopping there.
std::vector<double> stripe_scores(const Ssm& ssm, double tau) {
  const std::size_t n = ssm.size();
  std::vector<Run> best(n + 1);
  auto offer = [&](std::size_t border, const Run& run) {
    if (border >= 1 && border < n && longer(run, best[border])) best[border] = run;
  };
  for (std::size_t lag = 1; lag < n; ++lag) {
    const std::size_t len = n - lag;
    std::size_t i = 0;
    while (i < len) {
      if (ssm(i, i + lag) < tau) {
        ++i;
        continue;
      }
      std::size_t end = i;
      double sum = 0.0;
      while (end < len && ssm(end, end + lag) >= tau) sum += ssm(end, end + lag), ++end;
      const Run run{end - i, sum / static_cast<double>(end - i)};
      if (run.length >= 2) {
        if (i > 0) {
          offer(i, run);
          offer(i + lag, run);
        }
        if (end < len) {
          offer(end, run);
          offer(end + lag, run);
        }
      }
      i = end;
    }
  }
  std::vector<double> out(n + 1, 0.0);
  for (std::size_t b = 0; b <= n; ++b) out[b] = best[b].mean;
  return out;
}

BorderFeatures features_at(const Ssm& ssm, std::size_t b, const BorderFeatureConfig& config,
                           double stripe) {
  const std::size_t n = ssm.size();
  BorderFeatures f{};
  std::size_t k = 0;
  for (std::size_t w : config.windows) {
    const std::size_t above_lo = b >= w ? b - w : 0;
    const std::size_t below_hi = std::min(n - 1, b + w - 1);
    f[k++] = within_mean(ssm, above_lo, b - 1);
    f[k++] = within_mean(ssm, b, below_hi);
    f[k++] = across_mean(ssm, above_lo, b, below_hi);
  }
  f[k++] = stripe;
  f[k++] = static_cast<double>(b) / static_cast<double>(n);
  return f;
}

void check_config(const BorderFeatureConfig& config) {
  for (std::size_t w : config.windows) {
    if (w == 0) throw std::invalid_argument("border feature windows must be positive");
  }
}

}  // namespace

BorderFeatures extract_border_features(const Ssm& ssm, std::size_t border,
                                       const BorderFeatureConfig& config) {
  if (ssm.granularity() != Granularity::Line) {
    throw std::invalid_argument("border features need a line-level SSM");
  }
  if (border < 1 || border >= ssm.size()) {
    throw std::out_of_range("border position " + std::to_string(border) + " outside 1.." +
                            std::to_string(ssm.size() == 0 ? 0 : ssm.size() - 1));
  }
  check_config(config);
  return features_at(ssm, border, config, stripe_scores(ssm, config.tau_rep)[border]);
}

std::vector<BorderFeatures> extract_all_border_features(const Ssm& ssm,
                                                        const BorderFeatureConfig& config) {
  if (ssm.granularity() != Granularity::Line) {
    throw std::invalid_argument("border features need a line-level SSM");
  }
  check_config(config);
  std::vector<BorderFeatures> out;
  if (ssm.size() < 2) return out;
  const auto stripes = stripe_scores(ssm, config.tau_rep);
  out.reserve(ssm.size() - 1);
  for (std::size_t b = 1; b < ssm.size(); ++b) out.push_back(features_at(ssm, b, config, stripes[b]));
  return out;
}

std::vector<std::size_t> gold_borders(const Song& song) {
  std::vector<std::size_t> borders;
  std::size_t position = 0;
  for (std::size_t s = 0; s < song.segments.size(); ++s) {
    if (s > 0) borders.push_back(position);
    position += song.segments[s].size();
  }
  return borders;
}

namespace {

struct Example {
  SparseVector features;
  double label;
};

struct SongExamples {
  std::vector<Example> rows;
};

SongExamples examples_for(const Song& song, const BorderFeatureConfig& config) {
  SongExamples out;
  const auto ssm = line_ssm(song);
  const auto features = extract_all_border_features(ssm, config);
  const auto gold = gold_borders(song);
  for (std::size_t b = 1; b <= features.size(); ++b) {
    const bool is_border = std::binary_search(gold.begin(), gold.end(), b);
    out.rows.push_back({to_sparse(features[b - 1]), is_border ? 1.0 : 0.0});
  }
  return out;
}

double tune_threshold(const LinearModel& model, const std::vector<SongExamples>& held_out) {
  std::vector<std::pair<double, bool>> scored;
  std::size_t positives = 0;
  for (const auto& song : held_out) {
    for (const auto& row : song.rows) {
      scored.emplace_back(model.predict(row.features), row.label > 0.5);
      positives += row.label > 0.5 ? 1 : 0;
    }
  }
  if (scored.empty() || positives == 0) return 0.5;
  std::sort(scored.begin(), scored.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  double best_f1 = 0.0;
  std::size_t best_cut = 0;  // number of predicted borders
  std::size_t tp = 0;
  for (std::size_t i = 0; i < scored.size(); ++i) {
    tp += scored[i].second ? 1 : 0;
    // Only cut between distinct probabilities.
    if (i + 1 < scored.size() && scored[i + 1].first == scored[i].first) continue;
    const double precision = static_cast<double>(tp) / static_cast<double>(i + 1);
    const double recall = static_cast<double>(tp) / static_cast<double>(positives);
    const double f1 = precision + recall > 0 ? 2 * precision * recall / (precision + recall) : 0.0;
    if (f1 > best_f1) {
      best_f1 = f1;
      best_cut = i + 1;
    }
  }
  if (best_cut == 0) return 0.5;
  const double last_in = scored[best_cut - 1].first;
  const double first_out = best_cut < scored.size() ? scored[best_cut].first : 0.0;
  return std::clamp(0.5 * (last_in + first_out), 1e-6, 1.0 - 1e-6);
}

}  // namespace

SegmenterModel train_segmenter(const Corpus& corpus, const SegmenterTrainOptions& options) {
  check_config(options.features);
  std::vector<SongExamples> songs;
  for (const auto& song : corpus) {
    if (song.line_count() >= 2) songs.push_back(examples_for(song, options.features));
  }
  if (songs.empty()) throw DataError("segmenter training needs at least one song with two lines");

  std::vector<std::size_t> order(songs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  const auto holdout = static_cast<std::size_t>(options.holdout_fraction * static_cast<double>(songs.size()));

  std::vector<SongExamples> held_out;
  std::vector<SparseVector> rows;
  std::vector<double> labels;
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto& song = songs[order[k]];
    if (k < holdout) {
      held_out.push_back(std::move(song));
      continue;
    }
    for (auto& row : song.rows) {
      rows.push_back(std::move(row.features));
      labels.push_back(row.label);
    }
  }
  if (std::none_of(labels.begin(), labels.end(), [](double y) { return y > 0.5; })) {
    throw DataError("degenerate training set: no border examples");
  }

  SegmenterModel model;
  model.features = options.features;
  model.model = train_logistic(rows, labels, kBorderFeatureCount,
                               {.l2 = options.l2, .iterations = options.iterations, .seed = options.seed});
  model.theta = tune_threshold(model.model, held_out);
  return model;
}

std::vector<double> border_probabilities(const SegmenterModel& model, const Ssm& ssm) {
  std::vector<double> out;
  for (const auto& f : extract_all_border_features(ssm, model.features)) {
    out.push_back(sigmoid(model.model.score(std::span<const double>(f))));
  }
  return out;
}

std::vector<std::size_t> predict_borders(const SegmenterModel& model, const Ssm& ssm) {
  std::vector<std::size_t> borders;
  const auto probabilities = border_probabilities(model, ssm);
  for (std::size_t k = 0; k < probabilities.size(); ++k) {
    if (probabilities[k] >= model.theta) borders.push_back(k + 1);
  }
  return borders;
}

BorderCounts& BorderCounts::operator+=(const BorderCounts& other) {
  true_positives += other.true_positives;
  predicted += other.predicted;
  gold += other.gold;
  return *this;
}

Prf BorderCounts::prf() const {
  Prf out;
  if (predicted > 0) out.precision = 100.0 * static_cast<double>(true_positives) / static_cast<double>(predicted);
  if (gold > 0) out.recall = 100.0 * static_cast<double>(true_positives) / static_cast<double>(gold);
  if (out.precision + out.recall > 0) {
    out.f1 = 2.0 * out.precision * out.recall / (out.precision + out.recall);
  }
  return out;
}

BorderCounts count_borders(const std::vector<std::size_t>& predicted,
                           const std::vector<std::size_t>& gold) {
  std::vector<std::size_t> p(predicted), g(gold);
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<std::size_t> common;
  std::set_intersection(p.begin(), p.end(), g.begin(), g.end(), std::back_inserter(common));
  return {common.size(), p.size(), g.size()};
}

Prf evaluate_segmentation(const std::vector<std::size_t>& predicted,
                          const std::vector<std::size_t>& gold) {
  return count_borders(predicted, gold).prf();
}

SegmentationReport evaluate_segmenter(const SegmenterModel& model, const Corpus& corpus) {
  SegmentationReport report;
  for (const auto& song : corpus) {
    if (song.line_count() == 0) continue;
    const auto counts = count_borders(predict_borders(model, line_ssm(song)), gold_borders(song));
    report.overall += counts;
    report.by_genre[song.genre.value_or("(none)")] += counts;
  }
  return report;
}

std::string segmenter_to_json(const SegmenterModel& model) {
  detail::Json j;
  j["version"] = detail::kModelFormatVersion;
  j["feature_config"] = {{"windows", model.features.windows}, {"tau_rep", model.features.tau_rep}};
  j["weights"] = model.model.weights;
  j["bias"] = model.model.bias;
  j["theta"] = model.theta;
  j["training"] = {{"l2", model.model.l2}, {"seed", model.model.seed}};
  return j.dump(1);
}

SegmenterModel segmenter_from_json(const std::string& text) {
  const auto j = detail::parse_json(text, "segmenter model");
  detail::check_version(j, "segmenter model");
  return detail::guarded("segmenter model", [&] {
    SegmenterModel model;
    const auto& config = j.at("feature_config");
    model.features.windows = config.at("windows").get<std::array<std::size_t, 3>>();
    model.features.tau_rep = config.at("tau_rep").get<double>();
    model.model.kind = ModelKind::Logistic;
    model.model.weights = j.at("weights").get<std::vector<double>>();
    model.model.bias = j.at("bias").get<double>();
    model.theta = j.at("theta").get<double>();
    if (const auto it = j.find("training"); it != j.end()) {
      model.model.l2 = it->at("l2").get<double>();
      model.model.seed = it->at("seed").get<std::uint64_t>();
    }
    if (model.model.weights.size() != kBorderFeatureCount) {
      throw DataError("segmenter model: expected " + std::to_string(kBorderFeatureCount) + " weights");
    }
    if (!(model.theta > 0.0 && model.theta < 1.0)) throw DataError("segmenter model: theta outside (0, 1)");
    return model;
  });
}

void save_segmenter(const std::filesystem::path& path, const SegmenterModel& model) {
  detail::write_text_file(path, segmenter_to_json(model) + "\n");
}

SegmenterModel load_segmenter(const std::filesystem::path& path) {
  return segmenter_from_json(detail::read_text_file(path));
}

}  // namespace lyrica
