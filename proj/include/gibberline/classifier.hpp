#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gibberline/features.hpp"

namespace gibberline::classifier {

using features::FeatureVector;

enum class Label { kHuman, kGenerated };

std::string_view to_string(Label label);
std::optional<Label> parse_label(std::string_view name);

inline constexpr std::size_t kDefaultK = 3;

struct LabeledPoint {
  FeatureVector features;
  Label label = Label::kHuman;
  // Unique within a model; breaks distance ties (lower wins).
  std::size_t ordinal = 0;
  std::string source_id;

  friend bool operator==(const LabeledPoint&, const LabeledPoint&) = default;
};

double squared_distance(const FeatureVector& a, const FeatureVector& b);

struct Neighbor {
  // Index into the point list the tree or model was built from.
  std::size_t index;
  double squared_distance;

  double distance() const;
};

// Median-split 3-d tree. Split axes cycle s1, s2, s3 with depth; equal
// coordinates are ordered by ordinal so construction is deterministic.
class KdTree {
 public:
  // Throws kEmptyTrainingSet.
  explicit KdTree(std::vector<LabeledPoint> points);

  // The k nearest points in Euclidean distance, nearest first. Equal
  // distances are ordered by ordinal. Throws kKTooLarge when k exceeds the
  // point count and kInvalidArgument for k == 0.
  std::vector<Neighbor> knn(const FeatureVector& query, std::size_t k) const;

  std::span<const LabeledPoint> points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  // Point indices in symmetric (left, node, right) order.
  std::vector<std::size_t> in_order() const;
  std::size_t depth() const;

 private:
  struct Node {
    std::size_t point;
    std::uint8_t axis;
    std::int32_t left = -1;
    std::int32_t right = -1;
  };

  std::int32_t build(std::span<std::size_t> indices, std::size_t depth);

  std::vector<LabeledPoint> points_;
  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
};

inline KdTree build(std::vector<LabeledPoint> points) { return KdTree(std::move(points)); }

inline std::vector<Neighbor> knn(const KdTree& tree, const FeatureVector& query, std::size_t k) {
  return tree.knn(query, k);
}

// Per-axis min-max scaling fitted on a training set. Axes with zero range
// map to 0.
struct MinMaxScaling {
  std::array<double, features::kFeatureDims> lower{};
  std::array<double, features::kFeatureDims> range{};

  static MinMaxScaling fit(std::span<const LabeledPoint> points);
  FeatureVector apply(const FeatureVector& v) const;
};

struct Classification {
  Label label;
  std::size_t human_votes = 0;
  std::size_t generated_votes = 0;
  // Distances are in the model's (possibly scaled) space.
  std::vector<Neighbor> neighbors;
};

class Model {
 public:
  // Throws kEmptyTrainingSet, kKTooLarge (k > points), kInvalidArgument
  // (k == 0 or duplicate ordinals).
  Model(std::vector<LabeledPoint> points, std::size_t k = kDefaultK, bool scale = false);

  std::span<const LabeledPoint> points() const { return points_; }
  std::size_t k() const { return k_; }
  bool scaled() const { return scaling_.has_value(); }

  // Majority vote of the k nearest points. An even split goes to the
  // nearest neighbor's label.
  Classification classify(const FeatureVector& query) const;
  Classification classify(const FeatureVector& query, std::size_t k) const;

 private:
  std::vector<LabeledPoint> points_;
  std::size_t k_;
  std::optional<MinMaxScaling> scaling_;
  KdTree tree_;
};

inline Classification classify(const Model& model, const FeatureVector& query) {
  return model.classify(query);
}

struct LoocvResult {
  std::size_t k = 0;
  double error_rate = 0.0;
  std::size_t total = 0;
  std::size_t misclassified = 0;
  // Human papers labeled Generated.
  std::size_t false_human_as_generated = 0;
  // Generated papers labeled Human.
  std::size_t false_generated_as_human = 0;

  friend bool operator==(const LoocvResult&, const LoocvResult&) = default;
};

// Classifies each point with a model of all the others. With `scale`, the
// scaling is fitted on each training fold. Throws kInsufficientPoints when
// there are fewer than k + 1 points.
LoocvResult loocv(std::span<const LabeledPoint> points, std::size_t k, bool scale = false);

struct CrossValReport {
  std::vector<LoocvResult> entries;
};

CrossValReport sweep_k(std::span<const LabeledPoint> points, std::span<const std::size_t> k_values,
                       bool scale = false);

}  // namespace gibberline::classifier
