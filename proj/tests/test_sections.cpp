#include <algorithm>
#include <random>

#include "doctest.h"
#include "gibberline/error.hpp"
#include "gibberline/textprep.hpp"

using namespace gibberline;
using textprep::BoundaryMethod;
using textprep::locate_sections;
using textprep::SectionBounds;

namespace {

std::vector<std::string> filler(std::size_t n) {
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < n; ++i) tokens.push_back("w" + std::to_string(i % 97));
  return tokens;
}

// Independent re-scan of the segmentation rule.
SectionBounds rescan(const std::vector<std::string>& t) {
  const std::size_t n = t.size();
  const std::size_t span = std::min<std::size_t>(300, std::max<std::size_t>(10, n / 20));
  SectionBounds b;
  b.token_count = n;
  std::size_t from = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i] == "abstract") {
      b.abstract_start = i;
      b.abstract_method = BoundaryMethod::kKeywordFound;
      from = i + 1;
      break;
    }
  }
  b.body_start = std::min(n, from + span);
  for (std::size_t i = from; i < n; ++i) {
    if (t[i] == "introduction") {
      b.body_start = i;
      b.body_method = BoundaryMethod::kKeywordFound;
      break;
    }
  }
  b.references_start = std::max(b.body_start, n - n / 10);
  for (std::size_t i = b.body_start; i < n; ++i) {
    if (t[i] == "references" || t[i] == "bibliography") {
      b.references_start = i;
      b.references_method = BoundaryMethod::kKeywordFound;
    }
  }
  return b;
}

}  // namespace

TEST_CASE("all three keywords found") {
  auto tokens = filler(4500);
  tokens[12] = "abstract";
  tokens[150] = "introduction";
  tokens[4000] = "references";
  const auto b = locate_sections(tokens);
  CHECK(b.abstract_start == 12);
  CHECK(b.body_start == 150);
  CHECK(b.references_start == 4000);
  CHECK(b.abstract_method == BoundaryMethod::kKeywordFound);
  CHECK(b.body_method == BoundaryMethod::kKeywordFound);
  CHECK(b.references_method == BoundaryMethod::kKeywordFound);
}

TEST_CASE("no keywords falls back to fixed fractions") {
  const auto b = locate_sections(filler(1000));
  CHECK(b.abstract_start == 0);
  CHECK(b.body_start == 50);
  CHECK(b.references_start == 900);
  CHECK(b.abstract_method == BoundaryMethod::kFractionFallback);
  CHECK(b.body_method == BoundaryMethod::kFractionFallback);
  CHECK(b.references_method == BoundaryMethod::kFractionFallback);
}

TEST_CASE("head fallback is clamped to [10, 300]") {
  CHECK(locate_sections(filler(30)).body_start == 10);
  CHECK(locate_sections(filler(100000)).body_start == 300);
}

TEST_CASE("abstract only: other boundaries by fallback") {
  auto tokens = filler(1000);
  tokens[40] = "abstract";
  const auto b = locate_sections(tokens);
  CHECK(b.abstract_method == BoundaryMethod::kKeywordFound);
  CHECK(b.body_method == BoundaryMethod::kFractionFallback);
  CHECK(b.references_method == BoundaryMethod::kFractionFallback);
  CHECK(b == rescan(tokens));
  CHECK(b.body_start == 91);
}

TEST_CASE("references is the last occurrence after the body start") {
  auto tokens = filler(600);
  tokens[3] = "references";  // before the body: ignored
  tokens[5] = "abstract";
  tokens[20] = "introduction";
  tokens[400] = "references";
  tokens[500] = "bibliography";
  const auto b = locate_sections(tokens);
  CHECK(b.references_start == 500);
  CHECK(b == rescan(tokens));
}

TEST_CASE("introduction before abstract is not a body boundary") {
  auto tokens = filler(200);
  tokens[2] = "introduction";
  tokens[30] = "abstract";
  const auto b = locate_sections(tokens);
  CHECK(b.body_method == BoundaryMethod::kFractionFallback);
  CHECK(b.body_start == 41);
}

TEST_CASE("fewer than 30 tokens is DocumentTooShort") {
  try {
    locate_sections(filler(29));
    FAIL("expected DocumentTooShort");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDocumentTooShort);
  }
  CHECK_NOTHROW(locate_sections(filler(30)));
}

TEST_CASE("random keyword placements match the re-scan and stay ordered") {
  std::mt19937_64 rng(3);
  const std::vector<std::string> keys = {"abstract", "introduction", "references", "bibliography"};
  for (int trial = 0; trial < 3000; ++trial) {
    auto tokens = filler(30 + rng() % 2000);
    const std::size_t inserts = rng() % 6;
    for (std::size_t i = 0; i < inserts; ++i) tokens[rng() % tokens.size()] = keys[rng() % keys.size()];
    const auto b = locate_sections(tokens);
    CHECK(b == rescan(tokens));
    CHECK(b.abstract_start <= b.body_start);
    CHECK(b.body_start <= b.references_start);
    CHECK(b.references_start <= tokens.size());
  }
}
