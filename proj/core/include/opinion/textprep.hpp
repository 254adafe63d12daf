#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace opinion {

enum class ContentType { Html, Plain };

// Visible text of a payload. For HTML this strips tags plus script/style and
// comment content; invalid UTF-8 bytes are replaced, never rejected. The
// result is width-folded, control characters are dropped and whitespace runs
// collapse to single spaces. Total function: worst case is "".
std::string extract_text(std::string_view raw, ContentType type);

// The normalization pass extract_text applies after markup removal.
std::string normalize_clean_text(std::string_view text);

struct StopwordList {
  std::unordered_set<std::string> words;
  std::string source_name;

  // One word per line, UTF-8, '#' starts a comment line.
  static StopwordList load(const std::filesystem::path& path);

  bool contains(const std::string& word) const { return words.count(word) > 0; }
};

// Order-preserving filter; idempotent by construction.
std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const StopwordList& stops);

}  // namespace opinion
