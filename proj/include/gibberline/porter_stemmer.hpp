#pragma once

#include <string>
#include <string_view>

namespace gibberline::textprep {

// Porter (1980) suffix stripping, steps 1a through 5b, without the later
// extensions (no "logi", "bli" -> "ble" still spelled "abli"). Operates on
// bytes; only ASCII letters take part in suffix matching, any other byte is
// treated as a consonant. Expects lowercase input.
std::string porter_stem(std::string_view word);

}  // namespace gibberline::textprep
