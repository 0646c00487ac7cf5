#include "lyrica/pipeline.hpp"

#include <algorithm>

#include "lyrica/error.hpp"
#include "lyrica/report.hpp"
#include "lyrica/ssm.hpp"
#include "lyrica/summarizer.hpp"
#include "lyrica/thumbnail.hpp"

namespace lyrica {

namespace {

bool needs_topics_model(const PipelineConfig& c) {
  return c.enabled(Stage::Topics) || (c.enabled(Stage::Summarize) && c.scorers.contains(Scorer::Topic));
}

/// Returns the path to load from, or nullopt when the model has to be trained.
std::optional<std::filesystem::path> locate(const PipelineConfig& c, std::string_view stage,
                                            const std::filesystem::path& configured, std::string_view key) {
  if (!configured.empty() && std::filesystem::exists(configured)) return configured;
  if (c.train_missing) return std::nullopt;
  if (configured.empty()) {
    throw ConfigError("stage '" + std::string(stage) + "': no model configured (" + std::string(key) + ")");
  }
  throw ConfigError("stage '" + std::string(stage) + "': model file not found: " + configured.string());
}

std::filesystem::path trained_path(const PipelineConfig& c, const char* name) {
  const auto dir = c.output_dir / "models";
  std::filesystem::create_directories(dir);
  return dir / name;
}

Corpus emotion_training_corpus(const PipelineConfig& c, const Corpus& corpus) {
  if (c.models.lexicon.empty()) return corpus;
  const auto lexicon = load_lexicon(c.models.lexicon);
  std::vector<Song> songs = corpus.songs();
  for (auto& song : songs) {
    if (!song.va_gold) song.va_gold = tags_to_va(song.emotion_tags, lexicon);
  }
  return Corpus(std::move(songs));
}

}  // namespace

PipelineModels prepare_models(const PipelineConfig& c, const Corpus& corpus) {
  PipelineModels m;
  if (c.enabled(Stage::Segment)) {
    if (auto p = locate(c, "segment", c.models.segmenter, "models.segmenter")) {
      m.segmenter = load_segmenter(*p);
    } else {
      SegmenterTrainOptions options;
      options.seed = c.segment_seed;
      m.segmenter = train_segmenter(corpus, options);
      save_segmenter(trained_path(c, "segmenter.json"), *m.segmenter);
    }
  }
  if (c.enabled(Stage::Explicit)) {
    if (auto p = locate(c, "explicit", c.models.explicit_classifier, "models.explicit")) {
      m.explicit_classifier = load_explicit_classifier(*p);
    } else {
      ExplicitTrainOptions options;
      options.seed = c.explicit_seed;
      if (c.explicit_method == ExplicitMethod::DictionaryRegression) {
        const auto dictionary = induce_dictionary(corpus);
        save_dictionary(trained_path(c, "dictionary.json"), dictionary);
        m.explicit_classifier = train_dictionary_regression(corpus, dictionary, options);
      } else {
        m.explicit_classifier = train_tfidf_regression(corpus, options);
      }
      save_explicit_classifier(trained_path(c, "explicit.json"), *m.explicit_classifier);
    }
  }
  if (c.enabled(Stage::Emotion)) {
    if (auto p = locate(c, "emotion", c.models.emotion, "models.emotion")) {
      m.emotion = load_va_regressor(*p);
    } else {
      m.emotion = train_va_regressor(emotion_training_corpus(c, corpus));
      save_va_regressor(trained_path(c, "emotion.json"), *m.emotion);
    }
  }
  if (needs_topics_model(c)) {
    const bool available = !c.models.topics.empty() && std::filesystem::exists(c.models.topics);
    if (!available && !c.train_missing && !c.enabled(Stage::Topics)) {
      throw ConfigError("summarizer.Topic requires topics model (models.topics: " +
                        (c.models.topics.empty() ? std::string("not set") : c.models.topics.string()) + ")");
    }
    if (auto p = locate(c, "topics", c.models.topics, "models.topics")) {
      m.topics = load_lda(*p);
    } else {
      std::vector<Document> docs;
      docs.reserve(corpus.size());
      for (const auto& song : corpus) docs.push_back(preprocess(song));
      m.topics = train_lda(docs, c.lda);
      save_lda(trained_path(c, "topics.json"), *m.topics);
    }
  }
  return m;
}

namespace {

Song resegmented(const Song& song, const std::vector<std::size_t>& borders) {
  Song out = song;
  out.segments.clear();
  const auto lines = song.lines();
  std::size_t start = 0;
  auto cut = [&](std::size_t end) {
    Segment seg;
    seg.assign(lines.begin() + static_cast<std::ptrdiff_t>(start), lines.begin() + static_cast<std::ptrdiff_t>(end));
    out.segments.push_back(std::move(seg));
    start = end;
  };
  for (auto b : borders) cut(b);
  if (start < lines.size()) cut(lines.size());
  return out;
}

}  // namespace

AnnotationRecord annotate_song(const Song& song, const PipelineConfig& c, const PipelineModels& m) {
  AnnotationRecord r;
  r.id = song.id;
  const Song* structured = &song;
  Song predicted;
  if (c.enabled(Stage::Segment) && song.line_count() > 0) {
    r.borders = predict_borders(*m.segmenter, line_ssm(song));
    predicted = resegmented(song, *r.borders);
    structured = &predicted;
  }
  if (c.enabled(Stage::Thumbnail) && !structured->segments.empty()) {
    const auto fitness = segment_fitness(*structured, c.family_threshold);
    r.chorus = chorus_candidate(fitness);
    r.segment_fitness = fitness;
  }
  if (c.enabled(Stage::Summarize) && structured->line_count() > 0) {
    SummaryOptions options;
    options.lines = c.summary_lines;
    options.family_threshold = c.family_threshold;
    options.inference.seed = c.infer_seed;
    r.summary = summarize(*structured, c.scorers, m.topics ? &*m.topics : nullptr, options).lines;
  }
  if (c.enabled(Stage::Explicit)) {
    const double p = m.explicit_classifier->probability(song);
    r.explicit_prob = p;
    r.explicit_pred = p >= 0.5;
  }
  if (c.enabled(Stage::Emotion)) r.va_pred = m.emotion->predict(song);
  if (c.enabled(Stage::Topics)) {
    InferOptions options;
    options.seed = c.infer_seed;
    auto dist = infer_topics(*m.topics, preprocess(song), options);
    const auto best = static_cast<std::size_t>(std::max_element(dist.begin(), dist.end()) - dist.begin());
    r.top_words = top_words(*m.topics, best, c.top_words);
    r.topics = std::move(dist);
  }
  return r;
}

std::vector<AnnotationRecord> annotate(const Corpus& corpus, const PipelineConfig& config,
                                       const PipelineModels& models) {
  std::vector<AnnotationRecord> out;
  out.reserve(corpus.size());
  for (const auto& song : corpus) out.push_back(annotate_song(song, config, models));
  return out;
}

PipelineResult run_pipeline(const PipelineConfig& config) {
  if (config.corpus.empty()) throw ConfigError("no corpus configured");
  const Corpus corpus = load_corpus(config.corpus);
  std::filesystem::create_directories(config.output_dir);
  const auto models = prepare_models(config, corpus);
  const auto records = annotate(corpus, config, models);

  PipelineResult result;
  result.songs = corpus.size();
  result.annotations = config.output_dir / "annotations.jsonl";
  save_annotations(result.annotations, records);
  if (config.report) {
    result.report_files = emit_report(with_detected_languages(corpus), records, config.output_dir / "report");
  }
  return result;
}

}  // namespace lyrica
