#include "gibberline/features.hpp"

#include <algorithm>

#include "gibberline/error.hpp"

namespace gibberline::features {
namespace {

Ratio coverage(const KeywordSet& keys, const KeywordBag& body) {
  if (body.empty()) throw Error(ErrorCode::kEmptyBody, "body has no keywords");
  std::uint64_t hits = 0;
  for (const std::string& key : keys) hits += body.multiplicity(key);
  return {hits, body.total()};
}

}  // namespace

void KeywordBag::add(std::string_view stem, std::uint64_t count) {
  if (count == 0) return;
  if (auto it = index_.find(stem); it != index_.end()) {
    entries_[it->second].count += count;
  } else {
    index_.emplace(std::string(stem), entries_.size());
    entries_.push_back({std::string(stem), count});
  }
  total_ += count;
}

std::uint64_t KeywordBag::multiplicity(std::string_view stem) const {
  auto it = index_.find(stem);
  return it == index_.end() ? 0 : entries_[it->second].count;
}

KeywordSet KeywordBag::key_set() const {
  KeywordSet keys;
  for (const Entry& e : entries_) keys.insert(e.stem);
  return keys;
}

KeywordBag bag_of(std::span<const textprep::Token> tokens) {
  KeywordBag bag;
  for (const auto& t : tokens) bag.add(t.stem);
  return bag;
}

KeywordBag bag_of_stems(std::span<const std::string> stems) {
  KeywordBag bag;
  for (const auto& s : stems) bag.add(s);
  return bag;
}

KeywordSet set_of(std::span<const textprep::Token> tokens) {
  KeywordSet keys;
  for (const auto& t : tokens) keys.insert(t.stem);
  return keys;
}

RankedVocabulary RankedVocabulary::from(const KeywordBag& bag) {
  RankedVocabulary ranked{bag.entries()};
  std::stable_sort(ranked.entries.begin(), ranked.entries.end(),
                   [](const auto& a, const auto& b) { return a.count > b.count; });
  return ranked;
}

Ratio score_title_abstract(const KeywordSet& title_abstract, const KeywordBag& body) {
  return coverage(title_abstract, body);
}

Ratio score_references(const KeywordSet& references, const KeywordBag& body) {
  return coverage(references, body);
}

Ratio score_repetition(const KeywordBag& paper, std::size_t n_top) {
  if (n_top == 0) throw Error(ErrorCode::kInvalidArgument, "N must be at least 1");
  if (paper.distinct() < 2) {
    throw Error(ErrorCode::kDegenerateVocabulary,
                "need at least 2 distinct stems, have " + std::to_string(paper.distinct()));
  }
  const std::size_t effective = std::min(n_top, paper.distinct() - 1);
  const RankedVocabulary ranked = RankedVocabulary::from(paper);
  std::uint64_t top = 0;
  for (std::size_t i = 0; i < effective; ++i) top += ranked.entries[i].count;
  return {top, paper.total() - top};
}

FeatureRatios extract_feature_ratios(const textprep::SectionedDocument& doc, std::size_t n_top) {
  const KeywordBag body = bag_of(doc.body);
  if (body.empty()) throw Error(ErrorCode::kEmptyBody, "body has no keywords");

  KeywordBag paper;
  for (const auto* section : {&doc.title_abstract, &doc.body, &doc.references}) {
    for (const auto& t : *section) paper.add(t.stem);
  }

  return FeatureRatios{
      score_title_abstract(set_of(doc.title_abstract), body),
      score_repetition(paper, n_top),
      score_references(set_of(doc.references), body),
  };
}

FeatureVector extract_features(const textprep::SectionedDocument& doc, std::size_t n_top) {
  return extract_feature_ratios(doc, n_top).to_vector();
}

}  // namespace gibberline::features
