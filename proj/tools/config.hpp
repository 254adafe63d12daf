#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace opinion::cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Small TOML subset: [section] headers, `key = value` lines, values are
// quoted strings, numbers, true/false or arrays of quoted strings.
// Comments start with '#'.
class Config {
 public:
  using Value = std::variant<std::string, double, bool, std::vector<std::string>>;

  static Config parse_file(const std::filesystem::path& path);
  static Config parse_string(std::string_view text, const std::string& origin);

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  // Keys use "section.key" form. Typed getters throw ConfigError when
  // the key exists with a different type; *_or variants supply a
  // default when the key is absent.
  std::optional<std::string> get_string(const std::string& key) const;
  std::optional<double> get_number(const std::string& key) const;
  std::optional<bool> get_bool(const std::string& key) const;
  std::optional<std::vector<std::string>> get_string_array(const std::string& key) const;

  std::string get_string_or(const std::string& key, const std::string& fallback) const;
  double get_number_or(const std::string& key, double fallback) const;
  bool get_bool_or(const std::string& key, bool fallback) const;

  std::string require_string(const std::string& key) const;
  std::vector<std::string> require_string_array(const std::string& key) const;

  // Directory of the parsed file; resolves relative path values.
  const std::filesystem::path& base_dir() const { return base_dir_; }
  std::filesystem::path resolve_path(const std::string& value) const;

 private:
  std::map<std::string, Value> values_;
  std::filesystem::path base_dir_;
  std::string origin_;
};

}  // namespace opinion::cli
