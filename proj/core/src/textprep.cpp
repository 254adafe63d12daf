#include "opinion/textprep.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "opinion/errors.hpp"
#include "opinion/utf8.hpp"

namespace opinion {

namespace {

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

size_t ifind(std::string_view haystack, std::string_view needle, size_t from) {
  if (needle.empty() || haystack.size() < needle.size()) return std::string_view::npos;
  for (size_t i = from; i + needle.size() <= haystack.size(); ++i) {
    if (iequals(haystack.substr(i, needle.size()), needle)) return i;
  }
  return std::string_view::npos;
}

// '<' opens markup only when followed by a letter, '/', '!' or '?';
// a bare '<' (as in "a < b") stays literal.
bool opens_tag(std::string_view s, size_t i) {
  if (i + 1 >= s.size()) return false;
  const char c = s[i + 1];
  return std::isalpha(static_cast<unsigned char>(c)) || c == '/' || c == '!' || c == '?';
}

std::string read_tag_name(std::string_view s, size_t i) {
  std::string name;
  while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
    name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(s[i]))));
    ++i;
  }
  return name;
}

std::string strip_markup(std::string_view html) {
  std::string out;
  out.reserve(html.size());
  size_t i = 0;
  while (i < html.size()) {
    if (html[i] != '<' || !opens_tag(html, i)) {
      out.push_back(html[i]);
      ++i;
      continue;
    }
    if (html.substr(i, 4) == "<!--") {
      const size_t end = html.find("-->", i + 4);
      i = (end == std::string_view::npos) ? html.size() : end + 3;
      out.push_back(' ');
      continue;
    }
    const std::string name = read_tag_name(html, i + 1);
    size_t close = html.find('>', i + 1);
    if (close == std::string_view::npos) break;  // unterminated tag at EOF
    i = close + 1;
    if (name == "script" || name == "style") {
      // Drop element content up to the matching close tag.
      const std::string closing = "</" + name;
      const size_t end = ifind(html, closing, i);
      if (end == std::string_view::npos) break;
      close = html.find('>', end);
      i = (close == std::string_view::npos) ? html.size() : close + 1;
    }
    out.push_back(' ');
  }
  return out;
}

}  // namespace

std::string normalize_clean_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  bool any_output = false;
  for (const auto& unit : utf8_decode(text)) {
    const char32_t cp = fold_width(unit.cp);
    if (is_space(cp) || cp < 0x20 || cp == 0x7F) {
      pending_space = any_output;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    utf8_append(out, cp);
    any_output = true;
  }
  return out;
}

std::string extract_text(std::string_view raw, ContentType type) {
  const std::string text = utf8_sanitize(raw);
  if (type == ContentType::Plain) return normalize_clean_text(text);
  return normalize_clean_text(strip_markup(text));
}

StopwordList StopwordList::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open stopword file " + path.string());
  StopwordList list;
  list.source_name = path.filename().string();
  std::string line;
  while (std::getline(in, line)) {
    // Tolerate BOM and CRLF endings.
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    const size_t begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    const size_t end = line.find_last_not_of(" \t");
    std::string word = line.substr(begin, end - begin + 1);
    if (word.empty() || word[0] == '#') continue;
    list.words.insert(std::move(word));
  }
  return list;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const StopwordList& stops) {
  std::vector<std::string> kept;
  kept.reserve(tokens.size());
  for (const auto& tok : tokens) {
    if (!stops.contains(tok)) kept.push_back(tok);
  }
  return kept;
}

}  // namespace opinion
