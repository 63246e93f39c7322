#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gibberline/pos_tagger.hpp"
#include "gibberline/textprep.hpp"

namespace gibberline::features {

inline constexpr std::size_t kDefaultTopN = 10;

// Non-negative rational kept as an integer pair until it is handed to the
// classifier. Equality is by value (2/4 == 1/2).
struct Ratio {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }

  Ratio reduced() const {
    const std::uint64_t g = std::gcd(numerator, denominator);
    return g == 0 ? *this : Ratio{numerator / g, denominator / g};
  }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    const Ratio ra = a.reduced();
    const Ratio rb = b.reduced();
    return ra.numerator == rb.numerator && ra.denominator == rb.denominator;
  }
};

using KeywordSet = std::unordered_set<std::string, textprep::StringHash, std::equal_to<>>;

// Multiset of stems. Entries are kept in first-occurrence order, which is
// what breaks ties when ranking.
class KeywordBag {
 public:
  struct Entry {
    std::string stem;
    std::uint64_t count;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  void add(std::string_view stem, std::uint64_t count = 1);

  std::uint64_t multiplicity(std::string_view stem) const;
  std::uint64_t total() const { return total_; }
  std::size_t distinct() const { return entries_.size(); }
  bool empty() const { return total_ == 0; }

  const std::vector<Entry>& entries() const { return entries_; }
  KeywordSet key_set() const;

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t, textprep::StringHash, std::equal_to<>> index_;
  std::uint64_t total_ = 0;
};

KeywordBag bag_of(std::span<const textprep::Token> tokens);
KeywordBag bag_of_stems(std::span<const std::string> stems);
KeywordSet set_of(std::span<const textprep::Token> tokens);

// Distinct stems by multiplicity, highest first; equal counts keep
// first-occurrence order.
struct RankedVocabulary {
  std::vector<KeywordBag::Entry> entries;

  static RankedVocabulary from(const KeywordBag& bag);
};

// Sum over the set of the body multiplicity, divided by the body size.
// Throws kEmptyBody when the body bag is empty.
Ratio score_title_abstract(const KeywordSet& title_abstract, const KeywordBag& body);
Ratio score_references(const KeywordSet& references, const KeywordBag& body);

// Occurrences of the n_top most frequent stems over the occurrences of all
// the others. n_top is clamped to distinct() - 1. Throws
// kDegenerateVocabulary with fewer than two distinct stems and
// kInvalidArgument for n_top == 0.
Ratio score_repetition(const KeywordBag& paper, std::size_t n_top = kDefaultTopN);

struct FeatureVector {
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;

  double operator[](std::size_t axis) const { return axis == 0 ? s1 : axis == 1 ? s2 : s3; }
  double& operator[](std::size_t axis) { return axis == 0 ? s1 : axis == 1 ? s2 : s3; }

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

inline constexpr std::size_t kFeatureDims = 3;

struct FeatureRatios {
  Ratio title_abstract;
  Ratio repetition;
  Ratio references;

  FeatureVector to_vector() const {
    return {title_abstract.value(), repetition.value(), references.value()};
  }
};

FeatureRatios extract_feature_ratios(const textprep::SectionedDocument& doc,
                                      std::size_t n_top = kDefaultTopN);

FeatureVector extract_features(const textprep::SectionedDocument& doc,
                               std::size_t n_top = kDefaultTopN);

}  // namespace gibberline::features
