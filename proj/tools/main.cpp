// lyrica: command line front end for the annotation library.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lyrica/annotation.hpp"
#include "lyrica/config.hpp"
#include "lyrica/corpus.hpp"
#include "lyrica/diachronic.hpp"
#include "lyrica/emotion.hpp"
#include "lyrica/error.hpp"
#include "lyrica/explicit.hpp"
#include "lyrica/pipeline.hpp"
#include "lyrica/report.hpp"
#include "lyrica/segmenter.hpp"
#include "lyrica/ssm.hpp"
#include "lyrica/summarizer.hpp"
#include "lyrica/synthetic.hpp"
#include "lyrica/text.hpp"
#include "lyrica/topics.hpp"

namespace fs = std::filesystem;
using namespace lyrica;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;

/// Runs `body` with an output stream bound to `path`, or stdout when empty.
void with_output(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    return;
  }
  if (const auto parent = fs::path(path).parent_path(); !parent.empty()) fs::create_directories(parent);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  body(out);
}

std::string percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void print_prf(std::ostream& out, const std::string& label, const Prf& p) {
  out << label << "\tP=" << percent(p.precision) << "\tR=" << percent(p.recall) << "\tF1=" << percent(p.f1) << '\n';
}

struct CorpusArgs {
  std::string corpus;
  void add(CLI::App* cmd) { cmd->add_option("-c,--corpus", corpus, "corpus JSONL file")->required(); }
  Corpus load() const { return load_corpus(corpus); }
};

void write_records(const std::string& path, const std::vector<AnnotationRecord>& records) {
  with_output(path, [&](std::ostream& out) { write_annotations(out, records); });
}

// ---- ingest / stats / ssm -------------------------------------------------

void add_ingest(CLI::App& app) {
  auto* cmd = app.add_subcommand("ingest", "validate a corpus and write it in canonical form");
  static CorpusArgs in;
  static std::string out;
  static bool detect = false;
  in.add(cmd);
  cmd->add_option("-o,--out", out, "canonical corpus output (default stdout)");
  cmd->add_flag("--detect-language", detect, "fill missing language fields from stopword profiles");
  cmd->callback([] {
    auto corpus = in.load();
    if (detect) corpus = with_detected_languages(corpus);
    with_output(out, [&](std::ostream& os) { write_corpus(os, corpus); });
    std::cerr << "ingested " << corpus.size() << " songs\n";
  });
}

void add_stats(CLI::App& app) {
  auto* cmd = app.add_subcommand("stats", "language, genre and decade histograms");
  static CorpusArgs in;
  static std::string out_dir;
  in.add(cmd);
  cmd->add_option("-o,--out-dir", out_dir, "write stats_<field>.csv files here instead of stdout");
  cmd->callback([] {
    const auto stats = corpus_stats(with_detected_languages(in.load()));
    const std::pair<const char*, const Histogram*> all[] = {
        {"language", &stats.language}, {"genre", &stats.genre}, {"decade", &stats.decade}};
    for (const auto& [name, h] : all) {
      if (out_dir.empty()) {
        std::cout << "# " << name << '\n';
        write_histogram_csv(std::cout, *h);
      } else {
        with_output((fs::path(out_dir) / (std::string("stats_") + name + ".csv")).string(),
                    [&](std::ostream& os) { write_histogram_csv(os, *h); });
      }
    }
  });
}

void add_ssm(CLI::App& app) {
  auto* cmd = app.add_subcommand("ssm", "self-similarity matrix of one song");
  static CorpusArgs in;
  static std::string id, granularity = "line", out;
  in.add(cmd);
  cmd->add_option("--id", id, "song id")->required();
  cmd->add_option("-g,--granularity", granularity, "line or segment");
  cmd->add_option("-o,--out", out, "output file (default stdout)");
  cmd->callback([] {
    Granularity g;
    try {
      g = parse_granularity(granularity);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    const auto corpus = in.load();
    const Song* song = corpus.find(id);
    if (!song) throw DataError("no song with id '" + id + "'");
    const Ssm ssm = g == Granularity::Line ? line_ssm(*song) : segment_ssm(*song);
    with_output(out, [&](std::ostream& os) { write_ssm(os, ssm); });
  });
}

// ---- segment --------------------------------------------------------------

void add_segment(CLI::App& app) {
  auto* cmd = app.add_subcommand("segment", "border classifier");
  cmd->require_subcommand(1);

  auto* train = cmd->add_subcommand("train", "train on the gold segmentation of a corpus");
  static CorpusArgs train_in;
  static std::string train_out;
  static SegmenterTrainOptions options;
  train_in.add(train);
  train->add_option("-o,--out", train_out, "model file")->required();
  train->add_option("--seed", options.seed, "held-out split seed");
  train->add_option("--iterations", options.iterations, "gradient descent iterations");
  train->add_option("--tau-rep", options.features.tau_rep, "stripe similarity threshold");
  train->callback([] {
    const auto model = train_segmenter(train_in.load(), options);
    save_segmenter(train_out, model);
    std::cerr << "theta=" << format_double(model.theta) << '\n';
  });

  auto* predict = cmd->add_subcommand("predict", "predict borders");
  static CorpusArgs predict_in;
  static std::string predict_model, predict_out;
  predict_in.add(predict);
  predict->add_option("-m,--model", predict_model, "model file")->required();
  predict->add_option("-o,--out", predict_out, "annotation JSONL (default stdout)");
  predict->callback([] {
    const auto model = load_segmenter(predict_model);
    std::vector<AnnotationRecord> records;
    for (const auto& song : predict_in.load()) {
      AnnotationRecord r;
      r.id = song.id;
      if (song.line_count() > 0) r.borders = predict_borders(model, line_ssm(song));
      records.push_back(std::move(r));
    }
    write_records(predict_out, records);
  });

  auto* eval = cmd->add_subcommand("eval", "border precision/recall/F1 against gold segments");
  static CorpusArgs eval_in;
  static std::string eval_model;
  eval_in.add(eval);
  eval->add_option("-m,--model", eval_model, "model file")->required();
  eval->callback([] {
    const auto report = evaluate_segmenter(load_segmenter(eval_model), eval_in.load());
    print_prf(std::cout, "overall", report.overall.prf());
    for (const auto& [genre, counts] : report.by_genre) print_prf(std::cout, genre, counts.prf());
  });
}

// ---- summarize ------------------------------------------------------------

void add_summarize(CLI::App& app) {
  auto* cmd = app.add_subcommand("summarize", "extractive line summaries");
  static CorpusArgs in;
  static std::string scorers = "rank,topic,fit", topics_path, out;
  static SummaryOptions options;
  in.add(cmd);
  cmd->add_option("-s,--scorers", scorers, "comma-separated subset of rank,topic,fit");
  cmd->add_option("-k,--lines", options.lines, "summary length in lines");
  cmd->add_option("-t,--topics", topics_path, "topic model (needed by the topic scorer)");
  cmd->add_option("--family-threshold", options.family_threshold, "segment family similarity threshold");
  cmd->add_option("-o,--out", out, "annotation JSONL (default stdout)");
  cmd->callback([] {
    ScorerSet set;
    try {
      set = parse_scorers(scorers);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    if (set.empty()) throw ConfigError("no scorers given");
    std::optional<LdaModel> lda;
    if (set.contains(Scorer::Topic)) {
      if (topics_path.empty()) throw ConfigError("summarizer.Topic requires topics model (--topics)");
      lda = load_lda(topics_path);
    }
    std::vector<AnnotationRecord> records;
    for (const auto& song : in.load()) {
      AnnotationRecord r;
      r.id = song.id;
      if (song.line_count() > 0) r.summary = summarize(song, set, lda ? &*lda : nullptr, options).lines;
      records.push_back(std::move(r));
    }
    write_records(out, records);
  });
}

// ---- explicit -------------------------------------------------------------

void add_explicit(CLI::App& app) {
  auto* cmd = app.add_subcommand("explicit", "explicit-content detection");
  cmd->require_subcommand(1);

  auto* induce = cmd->add_subcommand("induce", "induce a ranked explicit-term dictionary");
  static CorpusArgs induce_in;
  static std::string induce_out;
  static std::size_t n = 32;
  static DictionaryConfig dict_config;
  induce_in.add(induce);
  induce->add_option("-n,--size", n, "dictionary size");
  induce->add_option("--min-df", dict_config.min_document_frequency, "minimum document frequency");
  induce->add_option("--prior", dict_config.prior, "Dirichlet pseudo-count");
  induce->add_option("-o,--out", induce_out, "dictionary file")->required();
  induce->callback([] {
    const auto dictionary = induce_dictionary(induce_in.load(), n, dict_config);
    save_dictionary(induce_out, dictionary);
    for (const auto& e : dictionary.entries()) std::cout << e.term << '\t' << format_double(e.score) << '\n';
  });

  auto* train = cmd->add_subcommand("train", "train a logistic classifier");
  static CorpusArgs train_in;
  static std::string method = "tfidf", dictionary_path, train_out;
  static ExplicitTrainOptions options;
  train_in.add(train);
  train->add_option("--method", method, "tfidf or dictreg");
  train->add_option("-d,--dictionary", dictionary_path, "dictionary file (dictreg)");
  train->add_option("--l2", options.l2, "L2 penalty");
  train->add_option("--iterations", options.iterations, "gradient descent iterations");
  train->add_option("--seed", options.seed, "seed recorded in the model");
  train->add_option("-o,--out", train_out, "model file")->required();
  train->callback([] {
    ExplicitMethod m;
    try {
      m = parse_explicit_method(method);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    const auto corpus = train_in.load();
    ExplicitClassifier classifier;
    if (m == ExplicitMethod::DictionaryRegression) {
      if (dictionary_path.empty()) throw ConfigError("dictreg needs --dictionary");
      classifier = train_dictionary_regression(corpus, load_dictionary(dictionary_path), options);
    } else {
      classifier = train_tfidf_regression(corpus, options);
    }
    save_explicit_classifier(train_out, classifier);
  });

  auto* predict = cmd->add_subcommand("predict", "predict explicit labels");
  static CorpusArgs predict_in;
  static std::string predict_model, predict_out;
  predict_in.add(predict);
  predict->add_option("-m,--model", predict_model, "classifier file")->required();
  predict->add_option("-o,--out", predict_out, "annotation JSONL (default stdout)");
  predict->callback([] {
    const auto classifier = load_explicit_classifier(predict_model);
    std::vector<AnnotationRecord> records;
    for (const auto& song : predict_in.load()) {
      AnnotationRecord r;
      r.id = song.id;
      r.explicit_prob = classifier.probability(song);
      r.explicit_pred = *r.explicit_prob >= 0.5;
      records.push_back(std::move(r));
    }
    write_records(predict_out, records);
  });

  auto* eval = cmd->add_subcommand("eval", "macro precision/recall/F1 on songs with gold labels");
  static CorpusArgs eval_in;
  static std::string eval_model, eval_dictionary;
  eval_in.add(eval);
  auto* model_opt = eval->add_option("-m,--model", eval_model, "classifier file");
  auto* dict_opt = eval->add_option("-d,--dictionary", eval_dictionary, "evaluate dictionary lookup instead");
  model_opt->excludes(dict_opt);
  eval->callback([] {
    if (eval_model.empty() == eval_dictionary.empty()) throw ConfigError("give exactly one of --model, --dictionary");
    const auto corpus = eval_in.load();
    std::optional<ExplicitClassifier> classifier;
    std::optional<Dictionary> dictionary;
    if (!eval_model.empty()) classifier = load_explicit_classifier(eval_model);
    else dictionary = load_dictionary(eval_dictionary);
    std::vector<bool> predicted, gold;
    for (const auto& song : corpus) {
      if (song.explicit_gold == Explicitness::Unknown) continue;
      gold.push_back(song.explicit_gold == Explicitness::Explicit);
      predicted.push_back(classifier ? classifier->predict(song) : lookup_classify(song, *dictionary));
    }
    if (gold.empty()) throw DataError("no songs with explicit/clean labels");
    const auto m = evaluate_explicit(predicted, gold);
    std::cout << "macro\tP=" << percent(m.precision) << "\tR=" << percent(m.recall) << "\tF1=" << percent(m.f1) << '\n';
    std::cout << "clean\tP=" << percent(m.clean.precision) << "\tR=" << percent(m.clean.recall)
              << "\tF1=" << percent(m.clean.f1) << '\n';
    std::cout << "explicit\tP=" << percent(m.explicit_class.precision) << "\tR=" << percent(m.explicit_class.recall)
              << "\tF1=" << percent(m.explicit_class.f1) << '\n';
  });
}

// ---- emotion --------------------------------------------------------------

void add_emotion(CLI::App& app) {
  auto* cmd = app.add_subcommand("emotion", "valence/arousal annotation");
  cmd->require_subcommand(1);

  auto* project = cmd->add_subcommand("project", "derive valence/arousal from emotion tags via a lexicon");
  static CorpusArgs project_in;
  static std::string lexicon_path, project_out;
  static bool overwrite = false;
  project_in.add(project);
  project->add_option("-l,--lexicon", lexicon_path, "TSV lexicon")->required();
  project->add_option("-o,--out", project_out, "corpus output (default stdout)");
  project->add_flag("--overwrite", overwrite, "replace existing valence/arousal values");
  project->callback([] {
    const auto lexicon = load_lexicon(lexicon_path);
    auto songs = project_in.load().songs();
    std::size_t projected = 0;
    for (auto& song : songs) {
      if (song.va_gold && !overwrite) continue;
      if (auto va = tags_to_va(song.emotion_tags, lexicon)) {
        song.va_gold = va;
        ++projected;
      }
    }
    const Corpus corpus(std::move(songs));
    with_output(project_out, [&](std::ostream& os) { write_corpus(os, corpus); });
    std::cerr << "projected " << projected << " songs\n";
  });

  auto* train = cmd->add_subcommand("train", "ridge regression from lyrics to valence/arousal");
  static CorpusArgs train_in;
  static std::string train_out;
  static RidgeOptions options;
  train_in.add(train);
  train->add_option("--l2", options.l2, "ridge penalty");
  train->add_option("-o,--out", train_out, "model file")->required();
  train->callback([] { save_va_regressor(train_out, train_va_regressor(train_in.load(), options)); });

  auto* predict = cmd->add_subcommand("predict", "predict valence/arousal");
  static CorpusArgs predict_in;
  static std::string predict_model, predict_out;
  predict_in.add(predict);
  predict->add_option("-m,--model", predict_model, "model file")->required();
  predict->add_option("-o,--out", predict_out, "annotation JSONL (default stdout)");
  predict->callback([] {
    const auto regressor = load_va_regressor(predict_model);
    std::vector<AnnotationRecord> records;
    for (const auto& song : predict_in.load()) {
      AnnotationRecord r;
      r.id = song.id;
      r.va_pred = regressor.predict(song);
      records.push_back(std::move(r));
    }
    write_records(predict_out, records);
  });

  auto* eval = cmd->add_subcommand("eval", "Pearson and Spearman correlation against gold values");
  static CorpusArgs eval_in;
  static std::string eval_model;
  eval_in.add(eval);
  eval->add_option("-m,--model", eval_model, "model file")->required();
  eval->callback([] {
    const auto e = evaluate_va_regressor(load_va_regressor(eval_model), eval_in.load());
    auto show = [](const char* name, const Correlation& c) {
      std::cout << name << '\t' << format_double(c.value) << (c.degenerate ? "\t(degenerate)" : "") << '\n';
    };
    std::cout << "songs\t" << e.songs << '\n';
    show("valence_pearson", e.valence_pearson);
    show("valence_spearman", e.valence_spearman);
    show("arousal_pearson", e.arousal_pearson);
    show("arousal_spearman", e.arousal_spearman);
  });
}

// ---- topics ---------------------------------------------------------------

std::vector<Document> documents_of(const Corpus& corpus) {
  std::vector<Document> docs;
  docs.reserve(corpus.size());
  for (const auto& song : corpus) docs.push_back(preprocess(song));
  return docs;
}

void print_topics(const LdaModel& model, std::size_t m) {
  for (std::size_t k = 0; k < model.topic_count(); ++k) {
    std::cout << "topic " << k << ':';
    for (const auto& w : top_words(model, k, m)) std::cout << ' ' << w;
    std::cout << '\n';
  }
}

void add_topics(CLI::App& app) {
  auto* cmd = app.add_subcommand("topics", "LDA topic modelling");
  cmd->require_subcommand(1);

  auto* select = cmd->add_subcommand("select", "grid search over K, alpha, eta by UMass coherence");
  static CorpusArgs select_in;
  static HyperparameterGrid grid;
  static SelectionOptions select_options;
  select_in.add(select);
  select->add_option("--k", grid.topics, "topic counts")->delimiter(',');
  select->add_option("--alpha", grid.alphas, "alpha values")->delimiter(',');
  select->add_option("--eta", grid.etas, "eta values")->delimiter(',');
  select->add_option("--iterations", select_options.iterations, "Gibbs sweeps per cell");
  select->add_option("--seed", select_options.seed, "master seed");
  select->add_option("--subset-cap", select_options.subset_cap, "maximum documents used");
  select->callback([] {
    const auto docs = documents_of(select_in.load());
    const auto result = select_hyperparameters(docs, grid, select_options);
    std::cout << "k\talpha\teta\tseed\tcoherence\n";
    for (const auto& c : result.cells) {
      std::cout << c.topics << '\t' << format_double(c.alpha) << '\t' << format_double(c.eta) << '\t' << c.seed << '\t'
                << format_double(c.coherence) << '\n';
    }
    std::cout << "best\tk=" << result.best.topics << "\talpha=" << format_double(result.best.alpha)
              << "\teta=" << format_double(result.best.eta) << '\n';
  });

  auto* train = cmd->add_subcommand("train", "train an LDA model");
  static CorpusArgs train_in;
  static LdaConfig config;
  static std::string train_out;
  static std::size_t words = 10;
  train_in.add(train);
  train->add_option("--k", config.topics, "number of topics");
  train->add_option("--alpha", config.alpha, "document-topic prior");
  train->add_option("--eta", config.eta, "topic-word prior");
  train->add_option("--iterations", config.iterations, "Gibbs sweeps");
  train->add_option("--seed", config.seed, "sampler seed");
  train->add_option("--top-words", words, "words printed per topic");
  train->add_option("-o,--out", train_out, "model file")->required();
  train->callback([] {
    const auto model = train_lda(documents_of(train_in.load()), config);
    save_lda(train_out, model);
    print_topics(model, words);
  });

  auto* infer = cmd->add_subcommand("infer", "per-song topic distributions");
  static CorpusArgs infer_in;
  static std::string infer_model, infer_out;
  static InferOptions infer_options;
  static std::size_t infer_words = 10;
  infer_in.add(infer);
  infer->add_option("-m,--model", infer_model, "model file")->required();
  infer->add_option("--iterations", infer_options.iterations, "Gibbs sweeps");
  infer->add_option("--seed", infer_options.seed, "inference seed");
  infer->add_option("--top-words", infer_words, "top words of the dominant topic");
  infer->add_option("-o,--out", infer_out, "annotation JSONL (default stdout)");
  infer->callback([] {
    const auto model = load_lda(infer_model);
    std::vector<AnnotationRecord> records;
    for (const auto& song : infer_in.load()) {
      AnnotationRecord r;
      r.id = song.id;
      auto dist = infer_topics(model, preprocess(song), infer_options);
      const auto best = static_cast<std::size_t>(std::max_element(dist.begin(), dist.end()) - dist.begin());
      r.top_words = top_words(model, best, infer_words);
      r.topics = std::move(dist);
      records.push_back(std::move(r));
    }
    write_records(infer_out, records);
  });
}

// ---- diachronic / report / run -------------------------------------------

void add_diachronic(CLI::App& app) {
  auto* cmd = app.add_subcommand("diachronic", "decade-level series as CSV");
  static CorpusArgs in;
  static std::string annotations, out_dir;
  in.add(cmd);
  cmd->add_option("-a,--annotations", annotations, "annotation JSONL with predictions");
  cmd->add_option("-o,--out-dir", out_dir, "output directory")->required();
  cmd->callback([] {
    const auto corpus = in.load();
    std::vector<AnnotationRecord> records;
    if (!annotations.empty()) records = load_annotations(annotations);
    const auto cols = annotation_columns(corpus, records);
    const fs::path dir(out_dir);
    with_output((dir / "explicit_gold_by_decade.csv").string(), [&](std::ostream& os) {
      write_series_csv(os, explicitness_by_decade(corpus, gold_explicit_labels(corpus)));
    });
    with_output((dir / "emotion_by_decade.csv").string(),
                [&](std::ostream& os) { write_series_csv(os, emotion_by_decade(corpus, cols.va_pred)); });
    if (std::any_of(cols.explicit_pred.begin(), cols.explicit_pred.end(), [](const auto& p) { return p.has_value(); })) {
      with_output((dir / "explicit_predicted_by_decade.csv").string(), [&](std::ostream& os) {
        write_series_csv(os, explicitness_by_decade(corpus, predicted_explicit_labels(cols.explicit_pred)));
      });
    }
    if (std::any_of(cols.topics.begin(), cols.topics.end(), [](const auto& t) { return t.has_value(); })) {
      with_output((dir / "topics_by_decade.csv").string(), [&](std::ostream& os) {
        write_topic_series_csv(os, topic_importance_by_decade(corpus, cols.topics));
      });
    }
  });
}

void add_report(CLI::App& app) {
  auto* cmd = app.add_subcommand("report", "corpus statistics and diachronic charts");
  static CorpusArgs in;
  static std::string annotations, out_dir;
  in.add(cmd);
  cmd->add_option("-a,--annotations", annotations, "annotation JSONL");
  cmd->add_option("-o,--out-dir", out_dir, "output directory")->required();
  cmd->callback([] {
    std::vector<AnnotationRecord> records;
    if (!annotations.empty()) records = load_annotations(annotations);
    for (const auto& p : emit_report(with_detected_languages(in.load()), records, out_dir)) {
      std::cout << p.string() << '\n';
    }
  });
}

void add_run(CLI::App& app) {
  auto* cmd = app.add_subcommand("run", "run the configured annotation pipeline");
  static std::string config_path;
  static std::vector<std::string> overrides;
  static bool print_config = false;
  cmd->add_option("config", config_path, "TOML-style config file");
  cmd->add_option("--set", overrides, "override a config key (section.key=value)");
  cmd->add_flag("--print-config", print_config, "print the effective config and exit");
  cmd->callback([] {
    PipelineConfig config;
    if (!config_path.empty()) config = load_config(config_path);
    ConfigTable table;
    for (const auto& o : overrides) {
      auto [key, value] = parse_override(o);
      table[key] = std::move(value);
    }
    apply_config(config, table);
    if (print_config) {
      std::cout << render_config(config);
      return;
    }
    const auto result = run_pipeline(config);
    std::cerr << "annotated " << result.songs << " songs -> " << result.annotations.string() << '\n';
  });
}

void add_synth(CLI::App& app) {
  auto* cmd = app.add_subcommand("synth", "write a synthetic corpus");
  static std::string kind = "full", out;
  static std::size_t songs = 1000;
  static std::uint64_t seed = 1;
  cmd->add_option("--kind", kind, "full, high-repetition, low-repetition, explicit or emotion");
  cmd->add_option("-n,--songs", songs, "number of songs");
  cmd->add_option("--seed", seed, "generator seed");
  cmd->add_option("-o,--out", out, "corpus output (default stdout)");
  cmd->callback([] {
    Corpus corpus;
    if (kind == "full") {
      corpus = synthetic::full_corpus({songs, seed});
    } else if (kind == "high-repetition" || kind == "low-repetition") {
      corpus = synthetic::structured_corpus({songs, kind == "high-repetition", seed});
    } else if (kind == "explicit") {
      synthetic::ExplicitOptions options;
      options.songs = songs;
      options.seed = seed;
      corpus = synthetic::explicit_corpus(options).corpus;
    } else if (kind == "emotion") {
      synthetic::EmotionOptions options;
      options.songs = songs;
      options.seed = seed;
      corpus = synthetic::emotion_corpus(options);
    } else {
      throw ConfigError("unknown corpus kind '" + kind + "'");
    }
    with_output(out, [&](std::ostream& os) { write_corpus(os, corpus); });
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Annotate song lyrics: structure, summaries, explicitness, emotion, topics."};
  app.require_subcommand(1);
  add_ingest(app);
  add_stats(app);
  add_ssm(app);
  add_segment(app);
  add_summarize(app);
  add_explicit(app);
  add_emotion(app);
  add_topics(app);
  add_diachronic(app);
  add_report(app);
  add_run(app);
  add_synth(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
