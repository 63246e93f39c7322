#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gibberline/classifier.hpp"
#include "gibberline/error.hpp"
#include "gibberline/features.hpp"
#include "gibberline/textprep.hpp"

namespace gibberline::corpus {

using classifier::Label;
using features::FeatureVector;
using textprep::RawDocument;

struct LoadWarning {
  std::filesystem::path path;
  std::string message;
};

struct LoadedCorpus {
  std::vector<RawDocument> documents;
  std::vector<LoadWarning> warnings;
};

// One document per regular, non-hidden file in `directory` (not recursive),
// ordered by filename. Files that cannot be read, are empty or are not
// valid UTF-8 become warnings. source_id is the file path. Throws
// kMissingDirectory.
LoadedCorpus load_corpus(const std::filesystem::path& directory);

struct LabeledDocument {
  RawDocument document;
  Label label;
};

std::vector<LabeledDocument> with_label(std::vector<RawDocument> documents, Label label);

struct CorpusEntry {
  std::string source_id;
  std::optional<Label> label;
  std::optional<FeatureVector> features;
};

struct Exclusion {
  std::string source_id;
  ErrorCode code;
  std::string reason;
};

struct ScoredCorpus {
  std::vector<CorpusEntry> entries;
  std::vector<Exclusion> exclusions;
};

// prepare + extract_features for every document. Documents that fail are
// listed in `exclusions` instead of aborting the batch. Documents are scored
// on up to `threads` worker threads (0 = hardware concurrency); output order
// always follows input order.
ScoredCorpus score_corpus(std::span<const LabeledDocument> documents,
                          std::size_t n_top = features::kDefaultTopN,
                          const textprep::PosTagger& tagger = textprep::PosTagger::builtin(),
                          std::size_t threads = 1);

// Scored and labeled entries as classifier points; ordinals follow entry
// order. Entries without features or label are skipped.
std::vector<classifier::LabeledPoint> to_labeled_points(std::span<const CorpusEntry> entries);
std::vector<CorpusEntry> to_entries(std::span<const classifier::LabeledPoint> points);

// --- model persistence -----------------------------------------------------

struct StoredModel {
  classifier::Model model;
  // N used when the training documents were scored.
  std::size_t n_top = features::kDefaultTopN;
};

std::string model_to_json(const classifier::Model& model, std::size_t n_top);
// Throws kCorruptModelFile naming the byte offset or JSON pointer at fault.
StoredModel model_from_json(std::string_view text);

void save_model(const std::filesystem::path& path, const classifier::Model& model,
                std::size_t n_top);
StoredModel load_model(const std::filesystem::path& path);

// --- tabular exports -------------------------------------------------------

// "source_id,label,s1,s2,s3" with full-precision numbers; label is empty
// when unknown. Unscored entries are skipped.
void write_feature_table(std::ostream& out, std::span<const CorpusEntry> entries);

enum class Axis { kS1, kS2, kS3 };

std::string_view to_string(Axis axis);
std::optional<Axis> parse_axis(std::string_view name);

struct ScatterRow {
  std::string source_id;
  std::optional<Label> label;
  double x;
  double y;
};

struct ScatterExport {
  Axis x_axis = Axis::kS1;
  Axis y_axis = Axis::kS2;
  std::vector<ScatterRow> rows;

  // Header "source_id,label,<x>,<y>".
  void write_csv(std::ostream& out) const;
};

ScatterExport export_scatter(std::span<const CorpusEntry> entries, Axis x = Axis::kS1,
                             Axis y = Axis::kS2);

// 17 significant digits; reads back as the same double.
std::string format_full(double value);
std::string format_fixed6(double value);
std::string csv_field(std::string_view value);

}  // namespace gibberline::corpus
