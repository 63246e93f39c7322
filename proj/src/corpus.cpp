#include "gibberline/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace gibberline::corpus {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr std::string_view kModelFormat = "gibberline-model";
constexpr int kModelVersion = 1;

bool is_valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto lead = static_cast<unsigned char>(s[i]);
    std::size_t length = 0;
    char32_t cp = 0;
    char32_t min = 0;
    if (lead < 0x80) {
      ++i;
      continue;
    } else if ((lead & 0xE0) == 0xC0) {
      length = 2, cp = lead & 0x1F, min = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      length = 3, cp = lead & 0x0F, min = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      length = 4, cp = lead & 0x07, min = 0x10000;
    } else {
      return false;
    }
    if (i + length > s.size()) return false;
    for (std::size_t k = 1; k < length; ++k) {
      const auto byte = static_cast<unsigned char>(s[i + k]);
      if ((byte & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (byte & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += length;
  }
  return true;
}

std::optional<std::string> read_whole(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buffer.str();
}

[[noreturn]] void corrupt(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kCorruptModelFile, "corrupt model file at " + where + ": " + what);
}

const json& require(const json& object, const char* key, json::value_t type,
                    const std::string& pointer) {
  const auto it = object.find(key);
  if (it == object.end()) corrupt(pointer, std::string("missing \"") + key + "\"");
  const bool numeric = type == json::value_t::number_float;
  const bool ok = numeric ? it->is_number() : it->type() == type;
  if (!ok) corrupt(pointer + "/" + key, "unexpected type " + std::string(it->type_name()));
  return *it;
}

std::size_t require_count(const json& object, const char* key, const std::string& pointer) {
  const auto it = object.find(key);
  if (it == object.end()) corrupt(pointer, std::string("missing \"") + key + "\"");
  if (!it->is_number_unsigned() || it->get<std::uint64_t>() == 0) {
    corrupt(pointer + "/" + key, "expected a positive integer");
  }
  return it->get<std::size_t>();
}

double feature_of(const CorpusEntry& e, Axis axis) {
  return (*e.features)[static_cast<std::size_t>(axis)];
}

}  // namespace

LoadedCorpus load_corpus(const fs::path& directory) {
  std::error_code ec;
  if (!fs::is_directory(directory, ec)) {
    throw Error(ErrorCode::kMissingDirectory, "not a directory: " + directory.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory)) {
    const std::string name = entry.path().filename().string();
    if (name.empty() || name.front() == '.') continue;
    std::error_code status_ec;
    if (entry.is_directory(status_ec)) continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

  LoadedCorpus corpus;
  for (const fs::path& path : files) {
    std::error_code status_ec;
    if (!fs::is_regular_file(path, status_ec)) {
      corpus.warnings.push_back({path, "not a regular file"});
      continue;
    }
    auto text = read_whole(path);
    if (!text) {
      corpus.warnings.push_back({path, "cannot read file"});
    } else if (text->empty()) {
      corpus.warnings.push_back({path, "empty file"});
    } else if (!is_valid_utf8(*text)) {
      corpus.warnings.push_back({path, "not valid UTF-8"});
    } else {
      corpus.documents.push_back({std::move(*text), path.string()});
    }
  }
  return corpus;
}

std::vector<LabeledDocument> with_label(std::vector<RawDocument> documents, Label label) {
  std::vector<LabeledDocument> out;
  out.reserve(documents.size());
  for (auto& d : documents) out.push_back({std::move(d), label});
  return out;
}

ScoredCorpus score_corpus(std::span<const LabeledDocument> documents, std::size_t n_top,
                          const textprep::PosTagger& tagger, std::size_t threads) {
  struct Outcome {
    std::optional<FeatureVector> features;
    ErrorCode code = ErrorCode::kInvalidArgument;
    std::string reason;
  };
  std::vector<Outcome> outcomes(documents.size());

  auto score_one = [&](std::size_t i) {
    try {
      const auto sectioned = textprep::prepare(documents[i].document, tagger);
      outcomes[i].features = features::extract_features(sectioned, n_top);
    } catch (const Error& e) {
      outcomes[i].code = e.code();
      outcomes[i].reason = e.what();
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, documents.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < documents.size(); ++i) score_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (std::size_t t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < documents.size(); i = next++) score_one(i);
      });
    }
  }

  ScoredCorpus scored;
  for (std::size_t i = 0; i < documents.size(); ++i) {
    const auto& doc = documents[i];
    if (outcomes[i].features) {
      scored.entries.push_back({doc.document.source_id, doc.label, outcomes[i].features});
    } else {
      scored.exclusions.push_back(
          {doc.document.source_id, outcomes[i].code, std::move(outcomes[i].reason)});
    }
  }
  return scored;
}

std::vector<classifier::LabeledPoint> to_labeled_points(std::span<const CorpusEntry> entries) {
  std::vector<classifier::LabeledPoint> points;
  for (const auto& e : entries) {
    if (!e.features || !e.label) continue;
    points.push_back({*e.features, *e.label, points.size(), e.source_id});
  }
  return points;
}

std::vector<CorpusEntry> to_entries(std::span<const classifier::LabeledPoint> points) {
  std::vector<CorpusEntry> entries;
  entries.reserve(points.size());
  for (const auto& p : points) entries.push_back({p.source_id, p.label, p.features});
  return entries;
}

std::string model_to_json(const classifier::Model& model, std::size_t n_top) {
  std::string out;
  out += "{\n";
  out += "  \"format\": " + json(kModelFormat).dump() + ",\n";
  out += "  \"version\": " + std::to_string(kModelVersion) + ",\n";
  out += "  \"k\": " + std::to_string(model.k()) + ",\n";
  out += "  \"n_top\": " + std::to_string(n_top) + ",\n";
  out += std::string("  \"scale\": ") + (model.scaled() ? "true" : "false") + ",\n";
  out += "  \"points\": [";
  const auto points = model.points();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"source_id\": " + json(p.source_id).dump();
    out += ", \"label\": " + json(classifier::to_string(p.label)).dump();
    out += ", \"s1\": " + format_full(p.features.s1);
    out += ", \"s2\": " + format_full(p.features.s2);
    out += ", \"s3\": " + format_full(p.features.s3) + "}";
  }
  out += points.empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

StoredModel model_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    corrupt("byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) corrupt("/", "expected an object");
  const auto& format = require(doc, "format", json::value_t::string, "");
  if (format.get<std::string>() != kModelFormat) corrupt("/format", "unknown format");
  const auto& version = require(doc, "version", json::value_t::number_unsigned, "");
  if (version.get<int>() != kModelVersion) corrupt("/version", "unsupported version");
  const std::size_t k = require_count(doc, "k", "");
  const std::size_t n_top = require_count(doc, "n_top", "");
  const bool scale = require(doc, "scale", json::value_t::boolean, "").get<bool>();
  const auto& items = require(doc, "points", json::value_t::array, "");

  std::vector<classifier::LabeledPoint> points;
  points.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string pointer = "/points/" + std::to_string(i);
    const json& item = items[i];
    if (!item.is_object()) corrupt(pointer, "expected an object");
    classifier::LabeledPoint p;
    p.ordinal = i;
    p.source_id = require(item, "source_id", json::value_t::string, pointer).get<std::string>();
    const auto label_name = require(item, "label", json::value_t::string, pointer).get<std::string>();
    const auto label = classifier::parse_label(label_name);
    if (!label) corrupt(pointer + "/label", "unknown label '" + label_name + "'");
    p.label = *label;
    for (std::size_t axis = 0; axis < features::kFeatureDims; ++axis) {
      const char* key = axis == 0 ? "s1" : axis == 1 ? "s2" : "s3";
      const double v = require(item, key, json::value_t::number_float, pointer).get<double>();
      if (!std::isfinite(v) || v < 0.0) corrupt(pointer + "/" + key, "expected a finite value >= 0");
      p.features[axis] = v;
    }
    points.push_back(std::move(p));
  }
  try {
    return StoredModel{classifier::Model(std::move(points), k, scale), n_top};
  } catch (const Error& e) {
    corrupt("/", e.what());
  }
}

void save_model(const fs::path& path, const classifier::Model& model, std::size_t n_top) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << model_to_json(model, n_top);
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path.string());
}

StoredModel load_model(const fs::path& path) {
  auto text = read_whole(path);
  if (!text) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  return model_from_json(*text);
}

std::string format_full(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string format_fixed6(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 6);
  return std::string(buf, res.ptr);
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void write_feature_table(std::ostream& out, std::span<const CorpusEntry> entries) {
  out << "source_id,label,s1,s2,s3\n";
  for (const auto& e : entries) {
    if (!e.features) continue;
    out << csv_field(e.source_id) << ','
        << (e.label ? classifier::to_string(*e.label) : std::string_view{}) << ','
        << format_full(e.features->s1) << ',' << format_full(e.features->s2) << ','
        << format_full(e.features->s3) << '\n';
  }
}

std::string_view to_string(Axis axis) {
  switch (axis) {
    case Axis::kS1: return "s1";
    case Axis::kS2: return "s2";
    case Axis::kS3: return "s3";
  }
  return "s1";
}

std::optional<Axis> parse_axis(std::string_view name) {
  for (Axis axis : {Axis::kS1, Axis::kS2, Axis::kS3}) {
    if (name == to_string(axis)) return axis;
  }
  return std::nullopt;
}

void ScatterExport::write_csv(std::ostream& out) const {
  out << "source_id,label," << to_string(x_axis) << ',' << to_string(y_axis) << '\n';
  for (const auto& row : rows) {
    out << csv_field(row.source_id) << ','
        << (row.label ? classifier::to_string(*row.label) : std::string_view{}) << ','
        << format_full(row.x) << ',' << format_full(row.y) << '\n';
  }
}

ScatterExport export_scatter(std::span<const CorpusEntry> entries, Axis x, Axis y) {
  ScatterExport scatter{x, y, {}};
  for (const auto& e : entries) {
    if (!e.features) continue;
    scatter.rows.push_back({e.source_id, e.label, feature_of(e, x), feature_of(e, y)});
  }
  return scatter;
}

}  // namespace gibberline::corpus
