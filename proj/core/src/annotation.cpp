#include "lyrica/annotation.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "json_util.hpp"
#include "lyrica/text.hpp"

namespace lyrica {

using detail::Json;

std::string annotation_to_json(const AnnotationRecord& r) {
  Json j;
  j["id"] = r.id;
  if (r.borders) j["borders"] = *r.borders;
  if (r.segment_fitness) j["segment_fitness"] = *r.segment_fitness;
  if (r.chorus) j["chorus"] = *r.chorus;
  if (r.summary) j["summary"] = *r.summary;
  if (r.explicit_pred) j["explicit_pred"] = *r.explicit_pred;
  if (r.explicit_prob) j["explicit_prob"] = *r.explicit_prob;
  if (r.va_pred) {
    j["valence_pred"] = r.va_pred->valence;
    j["arousal_pred"] = r.va_pred->arousal;
  }
  if (r.topics) j["topics"] = *r.topics;
  if (r.top_words) j["top_words"] = *r.top_words;
  return j.dump();
}

namespace {

template <typename T>
void read_optional(const Json& j, const char* key, std::optional<T>& out) {
  if (auto it = j.find(key); it != j.end()) out = it->template get<T>();
}

}  // namespace

AnnotationRecord annotation_from_json(std::string_view text) {
  const Json j = detail::parse_json(std::string(text), "annotation");
  return detail::guarded("annotation", [&] {
    if (!j.is_object()) throw DataError("annotation: expected an object");
    static const char* const known[] = {"id",      "borders",       "segment_fitness", "chorus",
                                        "summary", "explicit_pred", "explicit_prob",   "valence_pred",
                                        "arousal_pred", "topics",   "top_words"};
    for (const auto& item : j.items()) {
      bool ok = false;
      for (const char* k : known) ok = ok || item.key() == k;
      if (!ok) throw DataError("annotation: unknown field '" + item.key() + "'");
    }
    AnnotationRecord r;
    r.id = j.at("id").get<std::string>();
    read_optional(j, "borders", r.borders);
    read_optional(j, "segment_fitness", r.segment_fitness);
    read_optional(j, "chorus", r.chorus);
    read_optional(j, "summary", r.summary);
    read_optional(j, "explicit_pred", r.explicit_pred);
    read_optional(j, "explicit_prob", r.explicit_prob);
    std::optional<double> valence, arousal;
    read_optional(j, "valence_pred", valence);
    read_optional(j, "arousal_pred", arousal);
    if (valence.has_value() != arousal.has_value()) {
      throw DataError("annotation: valence_pred and arousal_pred must appear together");
    }
    if (valence) r.va_pred = VAPoint{*valence, *arousal};
    read_optional(j, "topics", r.topics);
    read_optional(j, "top_words", r.top_words);
    return r;
  });
}

void write_annotations(std::ostream& out, const std::vector<AnnotationRecord>& records) {
  for (const auto& r : records) out << annotation_to_json(r) << '\n';
}

std::vector<AnnotationRecord> read_annotations(std::istream& in, std::string_view source) {
  std::vector<AnnotationRecord> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    try {
      out.push_back(annotation_from_json(line));
    } catch (const DataError& e) {
      throw DataError(std::string(source) + ": line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

void save_annotations(const std::filesystem::path& path, const std::vector<AnnotationRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  write_annotations(out, records);
}

std::vector<AnnotationRecord> load_annotations(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return read_annotations(in, path.string());
}

std::vector<const AnnotationRecord*> align_annotations(const Corpus& corpus,
                                                       const std::vector<AnnotationRecord>& records) {
  std::vector<const AnnotationRecord*> out(corpus.size(), nullptr);
  for (const auto& r : records) {
    const auto pos = corpus.position(r.id);
    if (!pos) throw DataError("annotation for unknown song id '" + r.id + "'");
    out[*pos] = &r;
  }
  return out;
}

}  // namespace lyrica
