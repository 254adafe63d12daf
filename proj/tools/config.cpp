#include "config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace opinion::cli {

namespace {

std::string trim(std::string_view s) {
  size_t begin = 0;
  size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return std::string(s.substr(begin, end - begin));
}

[[noreturn]] void fail(const std::string& origin, size_t line_no, const std::string& what) {
  throw ConfigError(origin + ":" + std::to_string(line_no) + ": " + what);
}

// Parses a double-quoted string starting at s[pos] == '"'; advances pos
// past the closing quote.
std::string parse_quoted(std::string_view s, size_t& pos, const std::string& origin,
                         size_t line_no) {
  std::string out;
  ++pos;  // opening quote
  while (pos < s.size() && s[pos] != '"') {
    char c = s[pos];
    if (c == '\\') {
      ++pos;
      if (pos >= s.size()) fail(origin, line_no, "dangling escape");
      switch (s[pos]) {
        case '"': c = '"'; break;
        case '\\': c = '\\'; break;
        case 'n': c = '\n'; break;
        case 't': c = '\t'; break;
        default: fail(origin, line_no, "unsupported escape sequence");
      }
    }
    out.push_back(c);
    ++pos;
  }
  if (pos >= s.size()) fail(origin, line_no, "unterminated string");
  ++pos;  // closing quote
  return out;
}

Config::Value parse_value(std::string_view raw, const std::string& origin, size_t line_no) {
  const std::string text = trim(raw);
  if (text.empty()) fail(origin, line_no, "missing value");

  if (text[0] == '"') {
    size_t pos = 0;
    std::string s = parse_quoted(text, pos, origin, line_no);
    if (!trim(text.substr(pos)).empty()) fail(origin, line_no, "trailing characters");
    return s;
  }
  if (text[0] == '[') {
    std::vector<std::string> items;
    size_t pos = 1;
    bool expect_item = true;
    while (true) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos >= text.size()) fail(origin, line_no, "unterminated array");
      if (text[pos] == ']') {
        if (expect_item && !items.empty()) fail(origin, line_no, "trailing comma");
        ++pos;
        break;
      }
      if (!expect_item) {
        if (text[pos] != ',') fail(origin, line_no, "expected ',' in array");
        ++pos;
        expect_item = true;
        continue;
      }
      if (text[pos] != '"') fail(origin, line_no, "arrays hold quoted strings only");
      items.push_back(parse_quoted(text, pos, origin, line_no));
      expect_item = false;
    }
    if (!trim(text.substr(pos)).empty()) fail(origin, line_no, "trailing characters");
    return items;
  }
  if (text == "true") return true;
  if (text == "false") return false;

  try {
    size_t consumed = 0;
    const double value = std::stod(text, &consumed);
    if (consumed == text.size()) return value;
  } catch (const std::exception&) {
  }
  fail(origin, line_no, "cannot parse value: " + text);
}

// Strips a '#' comment that is not inside a quoted string.
std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (c == '\\' && in_string) {
      ++i;
      continue;
    }
    if (c == '"') in_string = !in_string;
    if (c == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

}  // namespace

Config Config::parse_string(std::string_view text, const std::string& origin) {
  Config config;
  config.origin_ = origin;
  std::istringstream in{std::string(text)};
  std::string line;
  std::string section;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string body = trim(strip_comment(line));
    if (body.empty()) continue;

    if (body.front() == '[') {
      if (body.back() != ']') fail(origin, line_no, "malformed section header");
      section = trim(body.substr(1, body.size() - 2));
      if (section.empty()) fail(origin, line_no, "empty section name");
      continue;
    }

    const size_t eq = body.find('=');
    if (eq == std::string::npos) fail(origin, line_no, "expected key = value");
    const std::string key = trim(body.substr(0, eq));
    if (key.empty()) fail(origin, line_no, "empty key");
    const std::string full_key = section.empty() ? key : section + "." + key;
    if (config.values_.count(full_key) > 0) {
      fail(origin, line_no, "duplicate key " + full_key);
    }
    config.values_.emplace(full_key, parse_value(body.substr(eq + 1), origin, line_no));
  }
  return config;
}

Config Config::parse_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Config config = parse_string(buffer.str(), path.string());
  config.base_dir_ = path.has_parent_path() ? path.parent_path() : ".";
  return config;
}

std::optional<std::string> Config::get_string(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  if (const auto* s = std::get_if<std::string>(&it->second)) return *s;
  throw ConfigError(origin_ + ": " + key + " is not a string");
}

std::optional<double> Config::get_number(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  if (const auto* n = std::get_if<double>(&it->second)) return *n;
  throw ConfigError(origin_ + ": " + key + " is not a number");
}

std::optional<bool> Config::get_bool(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  if (const auto* b = std::get_if<bool>(&it->second)) return *b;
  throw ConfigError(origin_ + ": " + key + " is not a bool");
}

std::optional<std::vector<std::string>> Config::get_string_array(
    const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  if (const auto* a = std::get_if<std::vector<std::string>>(&it->second)) return *a;
  throw ConfigError(origin_ + ": " + key + " is not a string array");
}

std::string Config::get_string_or(const std::string& key, const std::string& fallback) const {
  return get_string(key).value_or(fallback);
}

double Config::get_number_or(const std::string& key, double fallback) const {
  return get_number(key).value_or(fallback);
}

bool Config::get_bool_or(const std::string& key, bool fallback) const {
  return get_bool(key).value_or(fallback);
}

std::string Config::require_string(const std::string& key) const {
  if (auto v = get_string(key)) return *v;
  throw ConfigError(origin_ + ": missing required key " + key);
}

std::vector<std::string> Config::require_string_array(const std::string& key) const {
  if (auto v = get_string_array(key)) return *v;
  throw ConfigError(origin_ + ": missing required key " + key);
}

std::filesystem::path Config::resolve_path(const std::string& value) const {
  const std::filesystem::path p(value);
  if (p.is_absolute() || base_dir_.empty()) return p;
  return base_dir_ / p;
}

}  // namespace opinion::cli
