#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lyrica/corpus.hpp"
#include "lyrica/topics.hpp"

namespace lyrica {

/// Per-song output of the pipeline. Layers of stages that did not run stay
/// empty and are left out of the serialised record.
struct AnnotationRecord {
  std::string id;
  std::optional<std::vector<std::size_t>> borders;
  std::optional<std::vector<double>> segment_fitness;
  std::optional<std::size_t> chorus;
  std::optional<std::vector<std::string>> summary;
  std::optional<bool> explicit_pred;
  std::optional<double> explicit_prob;
  std::optional<VAPoint> va_pred;
  std::optional<TopicDistribution> topics;
  /// Top words of the song's most probable topic.
  std::optional<std::vector<std::string>> top_words;

  friend bool operator==(const AnnotationRecord&, const AnnotationRecord&) = default;
};

/// One JSON object, no trailing newline.
std::string annotation_to_json(const AnnotationRecord& record);
AnnotationRecord annotation_from_json(std::string_view text);

void write_annotations(std::ostream& out, const std::vector<AnnotationRecord>& records);
std::vector<AnnotationRecord> read_annotations(std::istream& in, std::string_view source = "<stream>");
void save_annotations(const std::filesystem::path& path, const std::vector<AnnotationRecord>& records);
std::vector<AnnotationRecord> load_annotations(const std::filesystem::path& path);

/// Records reordered to follow the corpus; records for unknown ids raise
/// DataError, songs without a record get nullptr.
std::vector<const AnnotationRecord*> align_annotations(const Corpus& corpus,
                                                       const std::vector<AnnotationRecord>& records);

}  // namespace lyrica
