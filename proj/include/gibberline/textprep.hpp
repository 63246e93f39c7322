#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gibberline/pos_tagger.hpp"

namespace gibberline::textprep {

struct RawDocument {
  std::string text;
  std::string source_id;
};

struct Token {
  std::string surface;
  PosTag tag;
  std::string stem;
  // Index into the raw token stream the token came from.
  std::size_t position;

  friend bool operator==(const Token&, const Token&) = default;
};

enum class BoundaryMethod { kKeywordFound, kFractionFallback };

std::string_view to_string(BoundaryMethod method);

struct SectionBounds {
  std::size_t abstract_start = 0;
  std::size_t body_start = 0;
  std::size_t references_start = 0;
  std::size_t token_count = 0;
  BoundaryMethod abstract_method = BoundaryMethod::kFractionFallback;
  BoundaryMethod body_method = BoundaryMethod::kFractionFallback;
  BoundaryMethod references_method = BoundaryMethod::kFractionFallback;

  friend bool operator==(const SectionBounds&, const SectionBounds&) = default;
};

struct SectionedDocument {
  std::vector<Token> title_abstract;
  std::vector<Token> body;
  std::vector<Token> references;
  SectionBounds bounds;
};

inline constexpr std::size_t kMinDocumentTokens = 30;
inline constexpr std::size_t kFallbackHeadMin = 10;
inline constexpr std::size_t kFallbackHeadMax = 300;
inline constexpr std::size_t kFallbackHeadPercent = 5;
inline constexpr std::size_t kFallbackTailPercent = 10;

// Maximal runs of Unicode alphanumerics, lowercased. Runs without a letter
// and runs shorter than two UTF-8 code units are dropped. Invalid UTF-8
// bytes act as separators.
std::vector<std::string> tokenize(std::string_view text);

// Section heading keywords are matched as whole (already lowercased) tokens:
//   abstract      first occurrence
//   introduction  first occurrence after the abstract boundary
//   references | bibliography  last occurrence at or after the body start
// Missing keywords fall back to fixed fractions of the token stream: the
// head section spans 5% of the tokens clamped to [10, 300] (starting right
// after "abstract" when only that keyword was found), the references
// section is the last 10%. Throws kDocumentTooShort below 30 tokens.
SectionBounds locate_sections(std::span<const std::string> tokens);

// Full preprocessing: tokenize, locate sections on the raw stream, then per
// section tag, filter and stem. Heading tokens found by keyword are not
// part of any section.
SectionedDocument prepare(const RawDocument& doc,
                          const PosTagger& tagger = PosTagger::builtin());

}  // namespace gibberline::textprep
