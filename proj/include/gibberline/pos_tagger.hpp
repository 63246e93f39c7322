#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gibberline::textprep {

enum class PosTag { kNoun, kAdjective, kUnknown, kOther };

std::string_view to_string(PosTag tag);
std::optional<PosTag> parse_pos_tag(std::string_view name);

// Tags that survive filtering: nouns, adjectives and anything the tagger
// could not place (jargon tends to land there).
constexpr bool is_keyword_tag(PosTag tag) { return tag != PosTag::kOther; }

struct TaggedWord {
  std::string word;
  PosTag tag;

  friend bool operator==(const TaggedWord&, const TaggedWord&) = default;
};

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

// Lexicon + suffix-rule tagger. Lookup order is: exact lexicon entry, then
// the longest matching suffix rule, then UNKNOWN. A suffix only matches when
// at least kMinSuffixStem characters remain in front of it.
class PosTagger {
 public:
  static constexpr std::size_t kMinSuffixStem = 2;

  PosTagger() = default;

  // Tables are "word<TAB>tag" and "suffix<TAB>tag", one entry per line.
  // Blank lines and lines starting with '#' are ignored.
  static PosTagger from_tables(std::string_view lexicon_tsv,
                               std::string_view suffix_tsv);
  static PosTagger from_files(const std::filesystem::path& lexicon,
                              const std::filesystem::path& suffixes);

  // Tables compiled into the library from data/lexicon.tsv and
  // data/suffixes.tsv.
  static const PosTagger& builtin();
  static std::string_view builtin_lexicon_table();
  static std::string_view builtin_suffix_table();

  PosTag tag(std::string_view word) const;

  std::size_t lexicon_size() const { return lexicon_.size(); }
  std::size_t suffix_rule_count() const { return suffixes_.size(); }

 private:
  std::unordered_map<std::string, PosTag, StringHash, std::equal_to<>> lexicon_;
  // Sorted longest first.
  std::vector<std::pair<std::string, PosTag>> suffixes_;
};

std::vector<TaggedWord> tag_pos(std::span<const std::string> words,
                                const PosTagger& tagger = PosTagger::builtin());

std::vector<std::string> filter_pos(std::span<const TaggedWord> tagged);

}  // namespace gibberline::textprep
