#include "opinion/document.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "opinion/errors.hpp"

namespace opinion {

std::vector<Document> read_documents_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<Document> docs;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw ParseError(path.string(), lineno, "invalid JSON record");
    }
    try {
      Document doc;
      doc.id = j.at("id").get<std::string>();
      doc.source = j.value("source", std::string{});
      doc.fetched_at = j.value("fetched_at", std::string{});
      doc.raw = j.value("raw", std::string{});
      doc.clean_text = j.value("clean_text", std::string{});
      if (j.contains("content_type") && !j["content_type"].is_null()) {
        doc.content_type = j["content_type"].get<std::string>();
      }
      if (j.contains("lang_hint") && !j["lang_hint"].is_null()) {
        doc.lang_hint = j["lang_hint"].get<std::string>();
      }
      docs.push_back(std::move(doc));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path.string(), lineno, e.what());
    }
  }
  return docs;
}

void write_documents_jsonl(const std::filesystem::path& path,
                           const std::vector<Document>& docs) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (const auto& doc : docs) {
    nlohmann::json j = {{"id", doc.id},
                        {"source", doc.source},
                        {"fetched_at", doc.fetched_at},
                        {"raw", doc.raw},
                        {"clean_text", doc.clean_text}};
    if (doc.content_type) j["content_type"] = *doc.content_type;
    if (doc.lang_hint) j["lang_hint"] = *doc.lang_hint;
    out << j.dump() << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace opinion
