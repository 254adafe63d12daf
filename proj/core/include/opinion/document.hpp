#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace opinion {

// One ingested comment/post. `clean_text` is markup-free and holds no control
// characters except newline.
struct Document {
  std::string id;
  std::string source;
  std::string fetched_at;  // UTC timestamp
  std::string raw;
  std::string clean_text;
  std::optional<std::string> content_type;  // "html" or "text"
  std::optional<std::string> lang_hint;
};

std::vector<Document> read_documents_jsonl(const std::filesystem::path& path);
void write_documents_jsonl(const std::filesystem::path& path,
                           const std::vector<Document>& docs);

}  // namespace opinion
