#include <random>

#include "doctest.h"
#include "gibberline/error.hpp"
#include "gibberline/pos_tagger.hpp"

using namespace gibberline;
using textprep::PosTag;
using textprep::PosTagger;
using textprep::TaggedWord;

TEST_CASE("closed-class words are OTHER") {
  const std::vector<std::string> words = {"the", "quickly", "of"};
  for (const auto& t : textprep::tag_pos(words)) CHECK(t.tag == PosTag::kOther);
}

TEST_CASE("suffix rules") {
  const auto& tagger = PosTagger::builtin();
  CHECK(tagger.tag("formation") == PosTag::kNoun);
  CHECK(tagger.tag("replacement") == PosTag::kNoun);
  CHECK(tagger.tag("darkness") == PosTag::kNoun);
  CHECK(tagger.tag("locality") == PosTag::kNoun);
  CHECK(tagger.tag("scheduler") == PosTag::kNoun);
  CHECK(tagger.tag("famous") == PosTag::kAdjective);
  CHECK(tagger.tag("adaptive") == PosTag::kAdjective);
  CHECK(tagger.tag("adjustable") == PosTag::kAdjective);
  CHECK(tagger.tag("theoretical") == PosTag::kAdjective);
  CHECK(tagger.tag("carefully") == PosTag::kOther);
  // Lexicon entries beat suffix rules.
  CHECK(tagger.tag("family") == PosTag::kNoun);
  CHECK(tagger.tag("other") == PosTag::kOther);
}

TEST_CASE("unmatched words are UNKNOWN") {
  CHECK(PosTagger::builtin().tag("qubit") == PosTag::kUnknown);
  CHECK(PosTagger::builtin().tag("2nd") == PosTag::kUnknown);
}

TEST_CASE("suffix needs a stem of at least two characters") {
  const auto tagger = PosTagger::from_tables("", "er\tNOUN\n");
  CHECK(tagger.tag("her") == PosTag::kUnknown);
  CHECK(tagger.tag("tier") == PosTag::kNoun);
}

TEST_CASE("longest suffix wins regardless of table order") {
  const auto tagger = PosTagger::from_tables("", "al\tADJECTIVE\nical\tNOUN\n");
  CHECK(tagger.tag("radical") == PosTag::kNoun);
  CHECK(tagger.tag("formal") == PosTag::kAdjective);
}

TEST_CASE("table parsing") {
  const auto tagger = PosTagger::from_tables("# comment\n\nfoo\tNOUN\r\nfoo\tOTHER\n", "");
  CHECK(tagger.lexicon_size() == 1);
  CHECK(tagger.tag("foo") == PosTag::kOther);
  CHECK_THROWS_AS(PosTagger::from_tables("foo NOUN\n", ""), Error);
  CHECK_THROWS_AS(PosTagger::from_tables("foo\tVERB\n", ""), Error);
  CHECK_THROWS_AS(PosTagger::from_files("/nonexistent/lexicon.tsv", "/nonexistent/s.tsv"), Error);
}

TEST_CASE("builtin tables are loaded") {
  CHECK(PosTagger::builtin().lexicon_size() > 300);
  CHECK(PosTagger::builtin().suffix_rule_count() >= 20);
}

TEST_CASE("filter_pos keeps NOUN, ADJECTIVE and UNKNOWN in order") {
  const std::vector<TaggedWord> tagged = {{"algorithm", PosTag::kNoun}, {"the", PosTag::kOther}};
  CHECK(textprep::filter_pos(tagged) == std::vector<std::string>{"algorithm"});
  CHECK(textprep::filter_pos(std::vector<TaggedWord>{}).empty());
}

TEST_CASE("filter_pos equals predicate re-application") {
  std::mt19937_64 rng(5);
  const PosTag tags[] = {PosTag::kNoun, PosTag::kAdjective, PosTag::kUnknown, PosTag::kOther};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<TaggedWord> tagged;
    for (int i = 0; i < 50; ++i) tagged.push_back({"w" + std::to_string(rng() % 20), tags[rng() % 4]});
    std::vector<std::string> expected;
    for (const auto& t : tagged) {
      if (t.tag == PosTag::kNoun || t.tag == PosTag::kAdjective || t.tag == PosTag::kUnknown) {
        expected.push_back(t.word);
      }
    }
    CHECK(textprep::filter_pos(tagged) == expected);
  }
}

TEST_CASE("tagging is deterministic") {
  const std::vector<std::string> words = {"network", "the", "robust", "qubit", "network"};
  CHECK(textprep::tag_pos(words) == textprep::tag_pos(words));
  const auto tagged = textprep::tag_pos(words);
  CHECK(tagged[0].tag == tagged[4].tag);
}
