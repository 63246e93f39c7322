#include "gibberline/porter_stemmer.hpp"

#include <array>
#include <vector>

namespace gibberline::textprep {
namespace {

bool is_vowel_letter(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// consonant[i] for every position of s. 'y' is a consonant at the start of
// a word or after a vowel, otherwise a vowel.
std::vector<bool> consonant_flags(std::string_view s) {
  std::vector<bool> flags(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (is_vowel_letter(s[i])) {
      flags[i] = false;
    } else if (s[i] == 'y') {
      flags[i] = (i == 0) ? true : !flags[i - 1];
    } else {
      flags[i] = true;
    }
  }
  return flags;
}

// m in [C](VC){m}[V].
int measure(std::string_view s) {
  const auto flags = consonant_flags(s);
  int m = 0;
  for (std::size_t i = 1; i < flags.size(); ++i) {
    if (!flags[i - 1] && flags[i]) ++m;
  }
  return m;
}

bool contains_vowel(std::string_view s) {
  for (bool consonant : consonant_flags(s)) {
    if (!consonant) return true;
  }
  return false;
}

bool ends_double_consonant(std::string_view s) {
  const std::size_t n = s.size();
  return n >= 2 && s[n - 1] == s[n - 2] && consonant_flags(s)[n - 1];
}

// *o: ends consonant-vowel-consonant, last letter not w, x or y.
bool ends_cvc(std::string_view s) {
  const std::size_t n = s.size();
  if (n < 3) return false;
  const auto flags = consonant_flags(s);
  const char last = s[n - 1];
  return flags[n - 3] && !flags[n - 2] && flags[n - 1] && last != 'w' &&
         last != 'x' && last != 'y';
}

enum class Condition { kNone, kMeasureAbove0, kMeasureAbove1, kMeasureAbove1AndSorT };

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
  Condition condition;
};

bool holds(Condition condition, std::string_view stem) {
  switch (condition) {
    case Condition::kNone: return true;
    case Condition::kMeasureAbove0: return measure(stem) > 0;
    case Condition::kMeasureAbove1: return measure(stem) > 1;
    case Condition::kMeasureAbove1AndSorT:
      return measure(stem) > 1 && !stem.empty() &&
             (stem.back() == 's' || stem.back() == 't');
  }
  return false;
}

// Rules are listed so that the first suffix that matches is also the
// longest. Once a suffix matches, no other rule of the step is tried, even
// when its condition fails.
template <std::size_t N>
void apply_first_match(std::string& word, const std::array<Rule, N>& rules) {
  for (const Rule& rule : rules) {
    if (!word.ends_with(rule.suffix)) continue;
    const std::string_view stem(word.data(), word.size() - rule.suffix.size());
    if (holds(rule.condition, stem)) {
      word.resize(stem.size());
      word.append(rule.replacement);
    }
    return;
  }
}

constexpr std::array<Rule, 4> kStep1a{{
    {"sses", "ss", Condition::kNone},
    {"ies", "i", Condition::kNone},
    {"ss", "ss", Condition::kNone},
    {"s", "", Condition::kNone},
}};

constexpr std::array<Rule, 20> kStep2{{
    {"ational", "ate", Condition::kMeasureAbove0},
    {"tional", "tion", Condition::kMeasureAbove0},
    {"enci", "ence", Condition::kMeasureAbove0},
    {"anci", "ance", Condition::kMeasureAbove0},
    {"izer", "ize", Condition::kMeasureAbove0},
    {"abli", "able", Condition::kMeasureAbove0},
    {"alli", "al", Condition::kMeasureAbove0},
    {"entli", "ent", Condition::kMeasureAbove0},
    {"eli", "e", Condition::kMeasureAbove0},
    {"ousli", "ous", Condition::kMeasureAbove0},
    {"ization", "ize", Condition::kMeasureAbove0},
    {"ation", "ate", Condition::kMeasureAbove0},
    {"ator", "ate", Condition::kMeasureAbove0},
    {"alism", "al", Condition::kMeasureAbove0},
    {"iveness", "ive", Condition::kMeasureAbove0},
    {"fulness", "ful", Condition::kMeasureAbove0},
    {"ousness", "ous", Condition::kMeasureAbove0},
    {"aliti", "al", Condition::kMeasureAbove0},
    {"iviti", "ive", Condition::kMeasureAbove0},
    {"biliti", "ble", Condition::kMeasureAbove0},
}};

constexpr std::array<Rule, 7> kStep3{{
    {"icate", "ic", Condition::kMeasureAbove0},
    {"ative", "", Condition::kMeasureAbove0},
    {"alize", "al", Condition::kMeasureAbove0},
    {"iciti", "ic", Condition::kMeasureAbove0},
    {"ical", "ic", Condition::kMeasureAbove0},
    {"ful", "", Condition::kMeasureAbove0},
    {"ness", "", Condition::kMeasureAbove0},
}};

constexpr std::array<Rule, 19> kStep4{{
    {"al", "", Condition::kMeasureAbove1},
    {"ance", "", Condition::kMeasureAbove1},
    {"ence", "", Condition::kMeasureAbove1},
    {"er", "", Condition::kMeasureAbove1},
    {"ic", "", Condition::kMeasureAbove1},
    {"able", "", Condition::kMeasureAbove1},
    {"ible", "", Condition::kMeasureAbove1},
    {"ant", "", Condition::kMeasureAbove1},
    {"ement", "", Condition::kMeasureAbove1},
    {"ment", "", Condition::kMeasureAbove1},
    {"ent", "", Condition::kMeasureAbove1},
    {"ion", "", Condition::kMeasureAbove1AndSorT},
    {"ou", "", Condition::kMeasureAbove1},
    {"ism", "", Condition::kMeasureAbove1},
    {"ate", "", Condition::kMeasureAbove1},
    {"iti", "", Condition::kMeasureAbove1},
    {"ous", "", Condition::kMeasureAbove1},
    {"ive", "", Condition::kMeasureAbove1},
    {"ize", "", Condition::kMeasureAbove1},
}};

void step1b(std::string& word) {
  if (word.ends_with("eed")) {
    if (measure(std::string_view(word).substr(0, word.size() - 3)) > 0) {
      word.pop_back();
    }
    return;
  }
  std::size_t cut = 0;
  if (word.ends_with("ed")) {
    cut = 2;
  } else if (word.ends_with("ing")) {
    cut = 3;
  }
  if (cut == 0 || !contains_vowel(std::string_view(word).substr(0, word.size() - cut))) {
    return;
  }
  word.resize(word.size() - cut);

  if (word.ends_with("at") || word.ends_with("bl") || word.ends_with("iz")) {
    word.push_back('e');
  } else if (ends_double_consonant(word)) {
    const char last = word.back();
    if (last != 'l' && last != 's' && last != 'z') word.pop_back();
  } else if (measure(word) == 1 && ends_cvc(word)) {
    word.push_back('e');
  }
}

void step1c(std::string& word) {
  if (word.ends_with('y') &&
      contains_vowel(std::string_view(word).substr(0, word.size() - 1))) {
    word.back() = 'i';
  }
}

void step5a(std::string& word) {
  if (!word.ends_with('e')) return;
  const std::string_view stem(word.data(), word.size() - 1);
  const int m = measure(stem);
  if (m > 1 || (m == 1 && !ends_cvc(stem))) word.pop_back();
}

void step5b(std::string& word) {
  if (word.ends_with("ll") &&
      measure(std::string_view(word).substr(0, word.size() - 1)) > 1) {
    word.pop_back();
  }
}

}  // namespace

std::string porter_stem(std::string_view input) {
  std::string word(input);
  apply_first_match(word, kStep1a);
  step1b(word);
  step1c(word);
  apply_first_match(word, kStep2);
  apply_first_match(word, kStep3);
  apply_first_match(word, kStep4);
  step5a(word);
  step5b(word);
  if (word.empty()) return std::string(input);
  return word;
}

}  // namespace gibberline::textprep
