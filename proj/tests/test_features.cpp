#include <algorithm>
#include <random>

#include "doctest.h"
#include "gibberline/error.hpp"
#include "gibberline/features.hpp"
#include "oracles.hpp"

using namespace gibberline;
using features::KeywordBag;
using features::KeywordSet;
using features::Ratio;
using textprep::PosTag;
using textprep::Token;

namespace {

KeywordBag bag(std::initializer_list<std::pair<const char*, std::uint64_t>> counts) {
  KeywordBag b;
  for (const auto& [stem, n] : counts) b.add(stem, n);
  return b;
}

std::vector<Token> tokens(const std::vector<std::string>& stems, std::size_t start = 0) {
  std::vector<Token> out;
  for (std::size_t i = 0; i < stems.size(); ++i) {
    out.push_back({stems[i], PosTag::kUnknown, stems[i], start + i});
  }
  return out;
}

std::vector<std::string> stems_of(const std::vector<Token>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(t.stem);
  return out;
}

textprep::SectionedDocument random_doc(std::mt19937_64& rng) {
  const std::size_t vocab = 2 + rng() % 12;
  auto draw = [&](std::size_t n) {
    std::vector<std::string> s;
    for (std::size_t i = 0; i < n; ++i) s.push_back("k" + std::to_string(rng() % vocab));
    return s;
  };
  textprep::SectionedDocument doc;
  doc.title_abstract = tokens(draw(rng() % 10));
  doc.body = tokens(draw(1 + rng() % 40), 100);
  doc.references = tokens(draw(rng() % 15), 1000);
  return doc;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kIo;
}

}  // namespace

TEST_CASE("bag_of counts stems") {
  const auto b = features::bag_of(tokens({"cat", "cat", "dog"}));
  CHECK(b.multiplicity("cat") == 2);
  CHECK(b.multiplicity("dog") == 1);
  CHECK(b.multiplicity("fish") == 0);
  CHECK(b.total() == 3);
  CHECK(b.distinct() == 2);

  const auto empty = features::bag_of(std::vector<Token>{});
  CHECK(empty.total() == 0);
  CHECK(empty.empty());
}

TEST_CASE("bag_of equals nested-loop counting") {
  std::mt19937_64 rng(23);
  std::vector<std::string> stems;
  for (int i = 0; i < 200; ++i) stems.push_back("s" + std::to_string(rng() % 37));
  const auto b = features::bag_of_stems(stems);
  std::uint64_t sum = 0;
  for (const auto& e : b.entries()) {
    CHECK(e.count == oracle::count(stems, e.stem));
    CHECK(e.count >= 1);
    sum += e.count;
  }
  CHECK(sum == b.total());
  CHECK(b.total() == 200);
  CHECK(b.distinct() == oracle::distinct(stems).size());
}

TEST_CASE("title/abstract score") {
  const KeywordSet a{"cat", "dog"};
  const auto b = bag({{"cat", 3}, {"fish", 2}, {"dog", 1}});
  CHECK(features::score_title_abstract(a, b) == Ratio{4, 6});
  CHECK(features::score_title_abstract(a, b) == Ratio{2, 3});
  CHECK(features::score_title_abstract(KeywordSet{"owl"}, b) == Ratio{0, 1});
  CHECK(features::score_title_abstract(KeywordSet{}, b).numerator == 0);
  CHECK(code_of([&] { features::score_title_abstract(a, KeywordBag{}); }) == ErrorCode::kEmptyBody);
}

TEST_CASE("title/abstract keywords count once") {
  const auto head = features::set_of(tokens({"cat", "cat", "cat", "dog"}));
  CHECK(head.size() == 2);
  CHECK(features::score_title_abstract(head, bag({{"cat", 1}, {"dog", 1}, {"eel", 2}})) == Ratio{1, 2});
}

TEST_CASE("repetition score") {
  const auto p = bag({{"a", 4}, {"b", 3}, {"c", 2}, {"d", 1}});
  CHECK(features::score_repetition(p, 2) == Ratio{7, 3});

  KeywordBag flat;
  for (int i = 0; i < 10; ++i) flat.add("w" + std::to_string(i));
  CHECK(features::score_repetition(flat, 1) == Ratio{1, 9});

  CHECK(code_of([] { features::score_repetition(bag({{"a", 5}}), 3); }) ==
        ErrorCode::kDegenerateVocabulary);
  CHECK(code_of([] { features::score_repetition(KeywordBag{}, 3); }) ==
        ErrorCode::kDegenerateVocabulary);
  CHECK(code_of([&] { features::score_repetition(p, 0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("repetition clamps N to |W| - 1") {
  const auto p = bag({{"a", 4}, {"b", 3}, {"c", 2}, {"d", 1}});
  // The least frequent stem is all that is left below the top N.
  CHECK(features::score_repetition(p, 3) == Ratio{9, 1});
  CHECK(features::score_repetition(p, 10) == Ratio{9, 1});
  CHECK(features::score_repetition(p, 1000) == features::score_repetition(p, 3));
}

TEST_CASE("ranking ties follow first occurrence") {
  KeywordBag p;
  for (const char* s : {"x", "y", "z", "y", "x", "w"}) p.add(s);
  const auto ranked = features::RankedVocabulary::from(p);
  REQUIRE(ranked.entries.size() == 4);
  CHECK(ranked.entries[0].stem == "x");
  CHECK(ranked.entries[1].stem == "y");
  CHECK(ranked.entries[2].stem == "z");
  CHECK(ranked.entries[3].stem == "w");
  for (std::size_t i = 1; i < ranked.entries.size(); ++i) {
    CHECK(ranked.entries[i - 1].count >= ranked.entries[i].count);
  }
}

TEST_CASE("references score") {
  const auto b = bag({{"network", 2}, {"graph", 1}});
  CHECK(features::score_references(KeywordSet{"smith", "network"}, b) == Ratio{2, 3});
  CHECK(features::score_references(KeywordSet{}, b) == Ratio{0, 3});
  CHECK(features::score_references(KeywordSet{"network", "graph", "extra"}, b) == Ratio{1, 1});
  CHECK(code_of([] { features::score_references(KeywordSet{"x"}, KeywordBag{}); }) == ErrorCode::kEmptyBody);
}

TEST_CASE("extract_features composes the three scores") {
  textprep::SectionedDocument doc;
  doc.title_abstract = tokens({"cat", "dog", "cat"});
  doc.body = tokens({"cat", "cat", "cat", "fish", "fish", "dog"}, 10);
  doc.references = tokens({"smith", "fish"}, 20);
  const auto r = features::extract_feature_ratios(doc, 2);
  CHECK(r.title_abstract == Ratio{4, 6});
  CHECK(r.references == Ratio{2, 6});
  // Whole paper: cat 5, fish 3, dog 2, smith 1 -> (5 + 3) / 3
  CHECK(r.repetition == Ratio{8, 3});
  const auto v = features::extract_features(doc, 2);
  CHECK(v.s1 == r.title_abstract.value());
  CHECK(v.s2 == r.repetition.value());
  CHECK(v.s3 == r.references.value());
}

TEST_CASE("s2 uses the whole paper even when the body has one stem") {
  textprep::SectionedDocument doc;
  doc.title_abstract = tokens({"qubit"});
  doc.body = tokens({"gate", "gate", "gate"}, 5);
  const auto r = features::extract_feature_ratios(doc, 10);
  CHECK(r.repetition == Ratio{3, 1});
  CHECK(r.title_abstract == Ratio{0, 3});
}

TEST_CASE("extract_features errors") {
  textprep::SectionedDocument empty_body;
  empty_body.title_abstract = tokens({"a", "b"});
  CHECK(code_of([&] { features::extract_features(empty_body); }) == ErrorCode::kEmptyBody);

  textprep::SectionedDocument one_stem;
  one_stem.body = tokens({"a", "a"});
  one_stem.title_abstract = tokens({"a"});
  CHECK(code_of([&] { features::extract_features(one_stem); }) == ErrorCode::kDegenerateVocabulary);
}

TEST_CASE("scores match the naive scorer on random documents") {
  std::mt19937_64 rng(29);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto doc = random_doc(rng);
    const std::size_t n_top = 1 + rng() % 12;
    std::vector<std::string> all = stems_of(doc.title_abstract);
    for (const auto& s : stems_of(doc.body)) all.push_back(s);
    for (const auto& s : stems_of(doc.references)) all.push_back(s);
    if (oracle::distinct(all).size() < 2) continue;
    const auto got = features::extract_features(doc, n_top);
    const auto want = oracle::score(stems_of(doc.title_abstract), stems_of(doc.body),
                                    stems_of(doc.references), n_top);
    CHECK(got.s1 == doctest::Approx(want.s1).epsilon(1e-12));
    CHECK(got.s2 == doctest::Approx(want.s2).epsilon(1e-12));
    CHECK(got.s3 == doctest::Approx(want.s3).epsilon(1e-12));
    CHECK(got.s1 <= 1.0);
    CHECK(got.s3 <= 1.0);
    CHECK(got.s2 >= 0.0);
    ++checked;
  }
  CHECK(checked > 900);
}

TEST_CASE("permutation and duplication invariance") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    auto doc = random_doc(rng);
    std::vector<std::string> all;
    for (const auto* s : {&doc.title_abstract, &doc.body, &doc.references}) {
      for (const auto& t : *s) all.push_back(t.stem);
    }
    if (oracle::distinct(all).size() < 2) continue;
    const auto base = features::extract_feature_ratios(doc, 10);

    auto shuffled = doc;
    std::shuffle(shuffled.body.begin(), shuffled.body.end(), rng);
    const auto permuted = features::extract_feature_ratios(shuffled, 10);
    CHECK(permuted.title_abstract == base.title_abstract);
    CHECK(permuted.references == base.references);
    // Moving tokens between positions can only reorder ties, which do not
    // change the top-N count.
    CHECK(permuted.repetition == base.repetition);

    auto doubled = doc;
    const std::size_t k = 2 + rng() % 3;
    for (std::size_t i = 1; i < k; ++i) {
      doubled.body.insert(doubled.body.end(), doc.body.begin(), doc.body.end());
    }
    const auto scaled = features::extract_feature_ratios(doubled, 10);
    CHECK(scaled.title_abstract == base.title_abstract);
    CHECK(scaled.references == base.references);
  }
}

TEST_CASE("adding a title keyword to the body moves s1 by the exact rational amount") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    auto doc = random_doc(rng);
    if (doc.title_abstract.empty()) continue;
    const auto head = features::set_of(doc.title_abstract);
    const auto before = features::score_title_abstract(head, features::bag_of(doc.body));
    doc.body.push_back(doc.title_abstract.front());
    const auto after = features::score_title_abstract(head, features::bag_of(doc.body));
    CHECK(after.numerator == before.numerator + 1);
    CHECK(after.denominator == before.denominator + 1);
    CHECK(after == Ratio{before.numerator + 1, before.denominator + 1});
  }
}
