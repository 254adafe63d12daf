#include "opinion/lexicon.hpp"

#include <fstream>

#include "opinion/errors.hpp"

namespace opinion {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    const size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      parts.push_back(s.substr(pos));
      return parts;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

bool valid_intensity(int v) {
  return v == 1 || v == 3 || v == 5 || v == 7 || v == 9;
}

SentimentEntry parse_entry(const std::string& line, const std::string& file,
                           size_t line_no) {
  const std::vector<std::string> cols = split(line, '\t');
  if (cols.size() < 3 || cols.size() > 4) {
    throw ParseError(file, line_no, "expected 3 or 4 tab-separated columns");
  }
  SentimentEntry entry;
  entry.word = cols[0];
  if (entry.word.empty()) throw ParseError(file, line_no, "empty word");

  if (cols[1] == "positive") {
    entry.polarity = Polarity::Positive;
  } else if (cols[1] == "negative") {
    entry.polarity = Polarity::Negative;
  } else if (cols[1] != "-") {
    throw ParseError(file, line_no, "polarity must be positive, negative or -");
  }

  if (!cols[2].empty() && cols[2] != "-") {
    for (const std::string& item : split(cols[2], ';')) {
      if (item.empty()) continue;
      const size_t eq = item.find('=');
      if (eq == std::string::npos) {
        throw ParseError(file, line_no, "emotion item lacks '='");
      }
      const auto emotion = emotion_from_name(item.substr(0, eq));
      if (!emotion) throw ParseError(file, line_no, "unknown emotion " + item);
      int intensity = 0;
      try {
        intensity = std::stoi(item.substr(eq + 1));
      } catch (const std::exception&) {
        throw ParseError(file, line_no, "bad intensity in " + item);
      }
      if (!valid_intensity(intensity)) {
        throw ParseError(file, line_no, "intensity must be one of 1,3,5,7,9");
      }
      entry.intensities[static_cast<int>(*emotion)] = intensity;
    }
  }

  if (cols.size() == 4) {
    if (cols[3] == "source=base") {
      entry.source = EntrySource::Base;
    } else if (cols[3] == "source=so_pmi") {
      entry.source = EntrySource::SoPmi;
    } else if (cols[3] == "source=new_word") {
      entry.source = EntrySource::NewWord;
    } else {
      throw ParseError(file, line_no, "bad source column " + cols[3]);
    }
  }

  if (!entry.polarity && !entry.has_emotions()) {
    throw ParseError(file, line_no, "entry carries neither polarity nor emotions");
  }
  return entry;
}

}  // namespace

const char* polarity_name(Polarity p) {
  return p == Polarity::Positive ? "positive" : "negative";
}

const char* entry_source_name(EntrySource s) {
  switch (s) {
    case EntrySource::Base:
      return "base";
    case EntrySource::SoPmi:
      return "so_pmi";
    case EntrySource::NewWord:
      return "new_word";
  }
  return "base";
}

double SentimentEntry::sign() const {
  return polarity == Polarity::Negative ? -1.0 : 1.0;
}

bool SentimentEntry::has_emotions() const {
  for (int v : intensities) {
    if (v != 0) return true;
  }
  return false;
}

const SentimentEntry* Lexicon::find(std::string_view word) const {
  const auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

void Lexicon::upsert(SentimentEntry entry) {
  std::string key = entry.word;
  entries_.insert_or_assign(std::move(key), std::move(entry));
}

bool Lexicon::insert_if_absent(SentimentEntry entry) {
  std::string key = entry.word;
  return entries_.emplace(std::move(key), std::move(entry)).second;
}

Lexicon Lexicon::load_merge(const std::vector<std::filesystem::path>& files) {
  Lexicon lex;
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open lexicon " + path.string());
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
      if (line.empty() || line[0] == '#') continue;
      lex.upsert(parse_entry(line, path.string(), line_no));
    }
  }
  return lex;
}

void Lexicon::save_tsv(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (const auto& [word, entry] : entries_) {
    out << word << '\t' << (entry.polarity ? polarity_name(*entry.polarity) : "-")
        << '\t';
    bool first = true;
    for (int e = 0; e < kEmotionCount; ++e) {
      if (entry.intensities[e] == 0) continue;
      if (!first) out << ';';
      out << emotion_name(static_cast<Emotion>(e)) << '=' << entry.intensities[e];
      first = false;
    }
    if (first) out << '-';
    out << "\tsource=" << entry_source_name(entry.source) << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

std::optional<double> FunctionWordTables::degree_multiplier(std::string_view word) const {
  const auto it = degree_adverbs.find(word);
  if (it == degree_adverbs.end()) return std::nullopt;
  return it->second;
}

FunctionWordTables FunctionWordTables::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open function words " + path.string());
  FunctionWordTables fw;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> cols = split(line, '\t');
    if (cols.size() < 2 || cols[0].empty()) {
      throw ParseError(path.string(), line_no, "expected word<TAB>kind");
    }
    const bool known = fw.negations.count(cols[0]) > 0 ||
                       fw.degree_adverbs.find(cols[0]) != fw.degree_adverbs.end();
    if (known) throw ParseError(path.string(), line_no, "duplicate word " + cols[0]);
    if (cols[1] == "neg") {
      if (cols.size() != 2) throw ParseError(path.string(), line_no, "neg takes no value");
      fw.negations.insert(cols[0]);
    } else if (cols[1] == "deg") {
      if (cols.size() != 3) {
        throw ParseError(path.string(), line_no, "deg needs a multiplier");
      }
      double mult = 0.0;
      try {
        mult = std::stod(cols[2]);
      } catch (const std::exception&) {
        throw ParseError(path.string(), line_no, "bad multiplier " + cols[2]);
      }
      if (!(mult > 0.0)) {
        throw ParseError(path.string(), line_no, "multiplier must be > 0");
      }
      fw.degree_adverbs.emplace(cols[0], mult);
    } else {
      throw ParseError(path.string(), line_no, "kind must be neg or deg");
    }
  }
  return fw;
}

}  // namespace opinion
