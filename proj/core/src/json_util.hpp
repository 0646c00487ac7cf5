#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "lyrica/bow.hpp"
#include "lyrica/error.hpp"
#include "lyrica/linear_model.hpp"

namespace lyrica::detail {

using Json = nlohmann::ordered_json;

inline constexpr int kModelFormatVersion = 1;

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << text;
}

inline Json parse_json(const std::string& text, std::string_view what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw DataError(std::string(what) + ": invalid JSON: " + e.what());
  }
}

inline void check_version(const Json& j, std::string_view what) {
  if (!j.is_object() || !j.contains("version") || j["version"] != kModelFormatVersion) {
    throw DataError(std::string(what) + ": unsupported or missing format version");
  }
}

/// Wraps json type errors as DataError.
template <typename F>
auto guarded(std::string_view what, F&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw DataError(std::string(what) + ": " + e.what());
  }
}

inline Json to_json(const LinearModel& m) {
  Json j;
  j["kind"] = std::string(to_string(m.kind));
  j["weights"] = m.weights;
  j["bias"] = m.bias;
  j["l2"] = m.l2;
  j["seed"] = m.seed;
  return j;
}

inline LinearModel linear_model_from_json(const Json& j) {
  LinearModel m;
  m.kind = parse_model_kind(j.at("kind").get<std::string>());
  m.weights = j.at("weights").get<std::vector<double>>();
  m.bias = j.at("bias").get<double>();
  m.l2 = j.at("l2").get<double>();
  m.seed = j.at("seed").get<std::uint64_t>();
  return m;
}

inline Json to_json(const BowSpace& space) {
  Json j;
  j["weighting"] = space.weighting() == Weighting::TfIdf ? "tfidf" : "count";
  j["terms"] = space.terms();
  if (space.idf()) j["idf"] = *space.idf();
  j["document_count"] = space.document_count();
  return j;
}

inline BowSpace bow_space_from_json(const Json& j) {
  std::optional<std::vector<double>> idf;
  if (j.contains("idf")) idf = j.at("idf").get<std::vector<double>>();
  return BowSpace::restore(j.at("terms").get<std::vector<std::string>>(), std::move(idf),
                           j.at("document_count").get<std::size_t>());
}

}  // namespace lyrica::detail
