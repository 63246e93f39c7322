#include <locale>
#include <optional>

#include "gibberline/textprep.hpp"

namespace gibberline::textprep {
namespace {

constexpr char32_t kInvalid = 0xFFFFFFFF;

// Decodes one code point starting at text[i] and advances i. Malformed,
// overlong and surrogate sequences consume one byte and yield kInvalid.
char32_t decode_utf8(std::string_view text, std::size_t& i) {
  const auto lead = static_cast<unsigned char>(text[i]);
  if (lead < 0x80) {
    ++i;
    return lead;
  }
  std::size_t length = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((lead & 0xE0) == 0xC0) {
    length = 2, cp = lead & 0x1F, min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3, cp = lead & 0x0F, min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    length = 4, cp = lead & 0x07, min = 0x10000;
  } else {
    ++i;
    return kInvalid;
  }
  if (i + length > text.size()) {
    ++i;
    return kInvalid;
  }
  for (std::size_t k = 1; k < length; ++k) {
    const auto byte = static_cast<unsigned char>(text[i + k]);
    if ((byte & 0xC0) != 0x80) {
      ++i;
      return kInvalid;
    }
    cp = (cp << 6) | (byte & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    ++i;
    return kInvalid;
  }
  i += length;
  return cp;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Character classes come from the C.UTF-8 locale when the platform has it.
// Without it, ASCII is classified directly and every other code point is
// taken to be a letter.
class CharClasses {
 public:
  CharClasses() {
    for (const char* name : {"C.UTF-8", "C.utf8", "en_US.UTF-8"}) {
      try {
        locale_.emplace(name);
        ctype_ = &std::use_facet<std::ctype<wchar_t>>(*locale_);
        return;
      } catch (const std::runtime_error&) {
        locale_.reset();
      }
    }
  }

  bool is_alpha(char32_t cp) const {
    if (cp < 0x80) return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
    if (ctype_ == nullptr) return true;
    return ctype_->is(std::ctype_base::alpha, static_cast<wchar_t>(cp));
  }

  bool is_alnum(char32_t cp) const {
    if (cp < 0x80) return is_alpha(cp) || (cp >= '0' && cp <= '9');
    if (ctype_ == nullptr) return true;
    return ctype_->is(std::ctype_base::alnum, static_cast<wchar_t>(cp));
  }

  char32_t to_lower(char32_t cp) const {
    if (cp < 0x80) {
      return (cp >= 'A' && cp <= 'Z') ? cp + ('a' - 'A') : cp;
    }
    if (ctype_ == nullptr) return cp;
    return static_cast<char32_t>(ctype_->tolower(static_cast<wchar_t>(cp)));
  }

 private:
  std::optional<std::locale> locale_;
  const std::ctype<wchar_t>* ctype_ = nullptr;
};

const CharClasses& char_classes() {
  static const CharClasses classes;
  return classes;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  const CharClasses& classes = char_classes();
  std::vector<std::string> tokens;
  std::string current;
  bool has_letter = false;

  auto flush = [&] {
    if (has_letter && current.size() >= 2) tokens.push_back(std::move(current));
    current.clear();
    has_letter = false;
  };

  std::size_t i = 0;
  while (i < text.size()) {
    const char32_t cp = decode_utf8(text, i);
    if (cp == kInvalid || !classes.is_alnum(cp)) {
      flush();
      continue;
    }
    has_letter = has_letter || classes.is_alpha(cp);
    append_utf8(current, classes.to_lower(cp));
  }
  flush();
  return tokens;
}

}  // namespace gibberline::textprep
