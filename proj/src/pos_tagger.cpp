#include "gibberline/pos_tagger.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gibberline/error.hpp"

namespace gibberline::textprep {
namespace detail {
extern const std::string_view kBuiltinLexicon;
extern const std::string_view kBuiltinSuffixes;
}  // namespace detail

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename Sink>
void parse_table(std::string_view table, std::string_view what, Sink&& sink) {
  std::size_t line_no = 0;
  while (!table.empty()) {
    const std::size_t eol = table.find('\n');
    std::string_view line = table.substr(0, eol);
    table = (eol == std::string_view::npos) ? std::string_view{} : table.substr(eol + 1);
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + " line " + std::to_string(line_no) +
                      ": expected <entry><TAB><tag>");
    }
    const std::string_view entry = trim(line.substr(0, tab));
    const std::string_view tag_name = trim(line.substr(tab + 1));
    const auto tag = parse_pos_tag(tag_name);
    if (entry.empty() || !tag) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + " line " + std::to_string(line_no) +
                      ": bad entry or unknown tag '" + std::string(tag_name) + "'");
    }
    sink(entry, *tag);
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::string_view to_string(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun: return "NOUN";
    case PosTag::kAdjective: return "ADJECTIVE";
    case PosTag::kUnknown: return "UNKNOWN";
    case PosTag::kOther: return "OTHER";
  }
  return "OTHER";
}

std::optional<PosTag> parse_pos_tag(std::string_view name) {
  for (PosTag tag : {PosTag::kNoun, PosTag::kAdjective, PosTag::kUnknown, PosTag::kOther}) {
    if (name == to_string(tag)) return tag;
  }
  return std::nullopt;
}

PosTagger PosTagger::from_tables(std::string_view lexicon_tsv, std::string_view suffix_tsv) {
  PosTagger tagger;
  // Later lines override earlier ones.
  parse_table(lexicon_tsv, "lexicon", [&](std::string_view word, PosTag tag) {
    tagger.lexicon_.insert_or_assign(std::string(word), tag);
  });
  parse_table(suffix_tsv, "suffix table", [&](std::string_view suffix, PosTag tag) {
    auto it = std::find_if(tagger.suffixes_.begin(), tagger.suffixes_.end(),
                           [&](const auto& rule) { return rule.first == suffix; });
    if (it != tagger.suffixes_.end()) {
      it->second = tag;
    } else {
      tagger.suffixes_.emplace_back(std::string(suffix), tag);
    }
  });
  std::stable_sort(tagger.suffixes_.begin(), tagger.suffixes_.end(),
                   [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  return tagger;
}

PosTagger PosTagger::from_files(const std::filesystem::path& lexicon,
                                const std::filesystem::path& suffixes) {
  return from_tables(read_file(lexicon), read_file(suffixes));
}

const PosTagger& PosTagger::builtin() {
  static const PosTagger tagger = from_tables(detail::kBuiltinLexicon, detail::kBuiltinSuffixes);
  return tagger;
}

std::string_view PosTagger::builtin_lexicon_table() { return detail::kBuiltinLexicon; }
std::string_view PosTagger::builtin_suffix_table() { return detail::kBuiltinSuffixes; }

PosTag PosTagger::tag(std::string_view word) const {
  if (auto it = lexicon_.find(word); it != lexicon_.end()) return it->second;
  for (const auto& [suffix, tag] : suffixes_) {
    if (word.size() >= suffix.size() + kMinSuffixStem && word.ends_with(suffix)) {
      return tag;
    }
  }
  return PosTag::kUnknown;
}

std::vector<TaggedWord> tag_pos(std::span<const std::string> words, const PosTagger& tagger) {
  std::vector<TaggedWord> tagged;
  tagged.reserve(words.size());
  for (const std::string& word : words) tagged.push_back({word, tagger.tag(word)});
  return tagged;
}

std::vector<std::string> filter_pos(std::span<const TaggedWord> tagged) {
  std::vector<std::string> kept;
  for (const TaggedWord& t : tagged) {
    if (is_keyword_tag(t.tag)) kept.push_back(t.word);
  }
  return kept;
}

}  // namespace gibberline::textprep
