#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace opinion {

// One decoded unit of a UTF-8 string. `cp` is the code point (U+FFFD for an
// invalid byte) and [offset, offset+length) the original byte range, so the
// exact input bytes can always be reassembled even for malformed input.
struct Utf8Unit {
  char32_t cp;
  uint32_t offset;
  uint32_t length;
};

std::vector<Utf8Unit> utf8_decode(std::string_view text);
std::vector<char32_t> utf8_codepoints(std::string_view text);
size_t utf8_length(std::string_view text);

void utf8_append(std::string& out, char32_t cp);
std::string utf8_encode(const std::vector<char32_t>& cps);
std::string utf8_encode(char32_t cp);

// Re-encodes, replacing invalid byte sequences with U+FFFD.
std::string utf8_sanitize(std::string_view text);

// Han ideographs (the scripts the trellis decodes).
bool is_cjk(char32_t cp);
bool is_space(char32_t cp);
// Material for new-word n-grams: CJK or ASCII alphanumeric.
bool is_word_char(char32_t cp);

// Maps fullwidth forms (U+FF01..U+FF5E) to their ASCII counterparts and the
// ideographic space to a plain space. Other code points pass through.
char32_t fold_width(char32_t cp);

}  // namespace opinion
