#include "gibberline/textprep.hpp"

#include <algorithm>
#include <optional>

#include "gibberline/error.hpp"
#include "gibberline/porter_stemmer.hpp"

namespace gibberline::textprep {
namespace {

bool is_references_heading(std::string_view token) {
  return token == "references" || token == "bibliography";
}

// Appends tagged, filtered and stemmed tokens for tokens[begin, end),
// skipping the heading token at `skip` if there is one.
void emit_section(std::span<const std::string> tokens, std::size_t begin, std::size_t end,
                  std::optional<std::size_t> skip, const PosTagger& tagger,
                  std::vector<Token>& out) {
  for (std::size_t i = begin; i < end; ++i) {
    if (skip && *skip == i) continue;
    const PosTag tag = tagger.tag(tokens[i]);
    if (!is_keyword_tag(tag)) continue;
    out.push_back(Token{tokens[i], tag, porter_stem(tokens[i]), i});
  }
}

}  // namespace

std::string_view to_string(BoundaryMethod method) {
  return method == BoundaryMethod::kKeywordFound ? "keyword" : "fallback";
}

SectionBounds locate_sections(std::span<const std::string> tokens) {
  const std::size_t n = tokens.size();
  if (n < kMinDocumentTokens) {
    throw Error(ErrorCode::kDocumentTooShort,
                "document too short: " + std::to_string(n) + " tokens, need at least " +
                    std::to_string(kMinDocumentTokens));
  }

  SectionBounds bounds;
  bounds.token_count = n;
  const std::size_t head_span =
      std::clamp(n * kFallbackHeadPercent / 100, kFallbackHeadMin, kFallbackHeadMax);

  const auto abstract_it = std::find(tokens.begin(), tokens.end(), "abstract");
  std::size_t search_from = 0;
  if (abstract_it != tokens.end()) {
    bounds.abstract_start = static_cast<std::size_t>(abstract_it - tokens.begin());
    bounds.abstract_method = BoundaryMethod::kKeywordFound;
    search_from = bounds.abstract_start + 1;
  }

  const auto intro_it = std::find(tokens.begin() + search_from, tokens.end(), "introduction");
  if (intro_it != tokens.end()) {
    bounds.body_start = static_cast<std::size_t>(intro_it - tokens.begin());
    bounds.body_method = BoundaryMethod::kKeywordFound;
  } else {
    bounds.body_start = std::min(n, search_from + head_span);
  }

  std::optional<std::size_t> references_at;
  for (std::size_t i = n; i-- > bounds.body_start;) {
    if (is_references_heading(tokens[i])) {
      references_at = i;
      break;
    }
  }
  if (references_at) {
    bounds.references_start = *references_at;
    bounds.references_method = BoundaryMethod::kKeywordFound;
  } else {
    bounds.references_start = std::max(bounds.body_start, n - n * kFallbackTailPercent / 100);
  }
  return bounds;
}

SectionedDocument prepare(const RawDocument& doc, const PosTagger& tagger) {
  const std::vector<std::string> tokens = tokenize(doc.text);
  SectionedDocument out;
  out.bounds = locate_sections(tokens);
  const SectionBounds& b = out.bounds;

  auto heading = [](BoundaryMethod method, std::size_t at) -> std::optional<std::size_t> {
    if (method == BoundaryMethod::kKeywordFound) return at;
    return std::nullopt;
  };
  emit_section(tokens, 0, b.body_start, heading(b.abstract_method, b.abstract_start), tagger,
               out.title_abstract);
  emit_section(tokens, b.body_start, b.references_start, heading(b.body_method, b.body_start),
               tagger, out.body);
  emit_section(tokens, b.references_start, tokens.size(),
               heading(b.references_method, b.references_start), tagger, out.references);
  return out;
}

}  // namespace gibberline::textprep
