#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "lyrica/annotation.hpp"
#include "lyrica/config.hpp"
#include "lyrica/corpus.hpp"
#include "lyrica/emotion.hpp"
#include "lyrica/explicit.hpp"
#include "lyrica/segmenter.hpp"
#include "lyrica/topics.hpp"

namespace lyrica {

struct PipelineModels {
  std::optional<SegmenterModel> segmenter;
  std::optional<ExplicitClassifier> explicit_classifier;
  std::optional<VARegressor> emotion;
  std::optional<LdaModel> topics;
};

/// Loads the models the enabled stages need. With train_missing, models
/// whose file is absent are trained on `corpus` and saved under
/// output_dir/models. Missing models otherwise raise ConfigError naming the
/// stage and the path.
PipelineModels prepare_models(const PipelineConfig& config, const Corpus& corpus);

/// When the segment stage runs, thumbnail and the fitness scorer work on the
/// predicted segmentation; otherwise on the segments given in the corpus.
AnnotationRecord annotate_song(const Song& song, const PipelineConfig& config, const PipelineModels& models);
std::vector<AnnotationRecord> annotate(const Corpus& corpus, const PipelineConfig& config,
                                       const PipelineModels& models);

struct PipelineResult {
  std::filesystem::path annotations;
  std::vector<std::filesystem::path> report_files;
  std::size_t songs = 0;
};

/// Reads the corpus, annotates every song and writes
/// output_dir/annotations.jsonl plus the report under output_dir/report.
PipelineResult run_pipeline(const PipelineConfig& config);

}  // namespace lyrica
