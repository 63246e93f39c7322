#include "gibberline/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <unordered_set>

#include "gibberline/error.hpp"

namespace gibberline::classifier {
namespace {

// Candidate order: nearer first, then lower ordinal.
struct CandidateLess {
  std::span<const LabeledPoint> points;
  bool operator()(const Neighbor& a, const Neighbor& b) const {
    if (a.squared_distance != b.squared_distance) return a.squared_distance < b.squared_distance;
    return points[a.index].ordinal < points[b.index].ordinal;
  }
};

}  // namespace

std::string_view to_string(Label label) {
  return label == Label::kHuman ? "Human" : "Generated";
}

std::optional<Label> parse_label(std::string_view name) {
  if (name == "Human" || name == "human") return Label::kHuman;
  if (name == "Generated" || name == "generated") return Label::kGenerated;
  return std::nullopt;
}

double squared_distance(const FeatureVector& a, const FeatureVector& b) {
  const double d1 = a.s1 - b.s1;
  const double d2 = a.s2 - b.s2;
  const double d3 = a.s3 - b.s3;
  return d1 * d1 + d2 * d2 + d3 * d3;
}

double Neighbor::distance() const { return std::sqrt(squared_distance); }

KdTree::KdTree(std::vector<LabeledPoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorCode::kEmptyTrainingSet, "no training points");
  std::vector<std::size_t> indices(points_.size());
  std::iota(indices.begin(), indices.end(), 0);
  nodes_.reserve(points_.size());
  root_ = build(indices, 0);
}

std::int32_t KdTree::build(std::span<std::size_t> indices, std::size_t depth) {
  if (indices.empty()) return -1;
  const auto axis = static_cast<std::uint8_t>(depth % features::kFeatureDims);
  const std::size_t mid = indices.size() / 2;
  std::nth_element(indices.begin(), indices.begin() + static_cast<std::ptrdiff_t>(mid),
                   indices.end(), [&](std::size_t a, std::size_t b) {
                     const double ca = points_[a].features[axis];
                     const double cb = points_[b].features[axis];
                     if (ca != cb) return ca < cb;
                     return points_[a].ordinal < points_[b].ordinal;
                   });
  const auto id = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back(Node{indices[mid], axis});
  const std::int32_t left = build(indices.first(mid), depth + 1);
  const std::int32_t right = build(indices.subspan(mid + 1), depth + 1);
  nodes_[static_cast<std::size_t>(id)].left = left;
  nodes_[static_cast<std::size_t>(id)].right = right;
  return id;
}

std::vector<Neighbor> KdTree::knn(const FeatureVector& query, std::size_t k) const {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  if (k > points_.size()) {
    throw Error(ErrorCode::kKTooLarge, "k = " + std::to_string(k) + " exceeds " +
                                           std::to_string(points_.size()) + " points");
  }
  const CandidateLess less{points_};
  // Max-heap: worst of the current best k on top.
  std::priority_queue<Neighbor, std::vector<Neighbor>, CandidateLess> best(less);

  auto search = [&](auto&& self, std::int32_t id) -> void {
    if (id < 0) return;
    const Node& node = nodes_[static_cast<std::size_t>(id)];
    const Neighbor here{node.point, squared_distance(query, points_[node.point].features)};
    if (best.size() < k) {
      best.push(here);
    } else if (less(here, best.top())) {
      best.pop();
      best.push(here);
    }

    const double diff = query[node.axis] - points_[node.point].features[node.axis];
    const std::int32_t near = diff < 0 ? node.left : node.right;
    const std::int32_t far = diff < 0 ? node.right : node.left;
    self(self, near);
    // Points across the split are at least |diff| away along this axis.
    // Equality is kept so that ordinal ties are still resolved.
    if (best.size() < k || diff * diff <= best.top().squared_distance) self(self, far);
  };
  search(search, root_);

  std::vector<Neighbor> out;
  out.reserve(k);
  while (!best.empty()) {
    out.push_back(best.top());
    best.pop();
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> KdTree::in_order() const {
  std::vector<std::size_t> order;
  order.reserve(points_.size());
  auto walk = [&](auto&& self, std::int32_t id) -> void {
    if (id < 0) return;
    const Node& node = nodes_[static_cast<std::size_t>(id)];
    self(self, node.left);
    order.push_back(node.point);
    self(self, node.right);
  };
  walk(walk, root_);
  return order;
}

std::size_t KdTree::depth() const {
  auto walk = [&](auto&& self, std::int32_t id) -> std::size_t {
    if (id < 0) return 0;
    const Node& node = nodes_[static_cast<std::size_t>(id)];
    return 1 + std::max(self(self, node.left), self(self, node.right));
  };
  return walk(walk, root_);
}

MinMaxScaling MinMaxScaling::fit(std::span<const LabeledPoint> points) {
  MinMaxScaling s;
  for (std::size_t axis = 0; axis < features::kFeatureDims; ++axis) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& p : points) {
      lo = std::min(lo, p.features[axis]);
      hi = std::max(hi, p.features[axis]);
    }
    s.lower[axis] = points.empty() ? 0.0 : lo;
    s.range[axis] = points.empty() ? 0.0 : hi - lo;
  }
  return s;
}

FeatureVector MinMaxScaling::apply(const FeatureVector& v) const {
  FeatureVector out;
  for (std::size_t axis = 0; axis < features::kFeatureDims; ++axis) {
    out[axis] = range[axis] > 0.0 ? (v[axis] - lower[axis]) / range[axis] : 0.0;
  }
  return out;
}

namespace {

std::vector<LabeledPoint> validated(std::vector<LabeledPoint> points, std::size_t k) {
  if (points.empty()) throw Error(ErrorCode::kEmptyTrainingSet, "no training points");
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  if (k > points.size()) {
    throw Error(ErrorCode::kKTooLarge, "k = " + std::to_string(k) + " exceeds " +
                                           std::to_string(points.size()) + " points");
  }
  std::unordered_set<std::size_t> seen;
  for (const auto& p : points) {
    if (!seen.insert(p.ordinal).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate ordinal " + std::to_string(p.ordinal));
    }
  }
  return points;
}

std::optional<MinMaxScaling> fit_if(bool scale, std::span<const LabeledPoint> points) {
  if (!scale) return std::nullopt;
  return MinMaxScaling::fit(points);
}

std::vector<LabeledPoint> tree_points(std::span<const LabeledPoint> points,
                                      const std::optional<MinMaxScaling>& scaling) {
  std::vector<LabeledPoint> out(points.begin(), points.end());
  if (scaling) {
    for (auto& p : out) p.features = scaling->apply(p.features);
  }
  return out;
}

}  // namespace

Model::Model(std::vector<LabeledPoint> points, std::size_t k, bool scale)
    : points_(validated(std::move(points), k)),
      k_(k),
      scaling_(fit_if(scale, points_)),
      tree_(tree_points(points_, scaling_)) {}

Classification Model::classify(const FeatureVector& query) const { return classify(query, k_); }

Classification Model::classify(const FeatureVector& query, std::size_t k) const {
  Classification result;
  result.neighbors = tree_.knn(scaling_ ? scaling_->apply(query) : query, k);
  for (const Neighbor& n : result.neighbors) {
    (points_[n.index].label == Label::kHuman ? result.human_votes : result.generated_votes)++;
  }
  if (result.human_votes != result.generated_votes) {
    result.label = result.human_votes > result.generated_votes ? Label::kHuman : Label::kGenerated;
  } else {
    result.label = points_[result.neighbors.front().index].label;
  }
  return result;
}

LoocvResult loocv(std::span<const LabeledPoint> points, std::size_t k, bool scale) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  if (points.size() < k + 1) {
    throw Error(ErrorCode::kInsufficientPoints,
                "leave-one-out with k = " + std::to_string(k) + " needs at least " +
                    std::to_string(k + 1) + " points, have " + std::to_string(points.size()));
  }
  LoocvResult result;
  result.k = k;
  result.total = points.size();
  std::vector<LabeledPoint> training;
  training.reserve(points.size() - 1);
  for (std::size_t held_out = 0; held_out < points.size(); ++held_out) {
    training.clear();
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i != held_out) training.push_back(points[i]);
    }
    const Model model(training, k, scale);
    const LabeledPoint& probe = points[held_out];
    const Label predicted = model.classify(probe.features).label;
    if (predicted == probe.label) continue;
    ++result.misclassified;
    if (probe.label == Label::kHuman) {
      ++result.false_human_as_generated;
    } else {
      ++result.false_generated_as_human;
    }
  }
  result.error_rate =
      static_cast<double>(result.misclassified) / static_cast<double>(result.total);
  return result;
}

CrossValReport sweep_k(std::span<const LabeledPoint> points, std::span<const std::size_t> k_values,
                       bool scale) {
  CrossValReport report;
  report.entries.reserve(k_values.size());
  for (std::size_t k : k_values) report.entries.push_back(loocv(points, k, scale));
  return report;
}

}  // namespace gibberline::classifier
