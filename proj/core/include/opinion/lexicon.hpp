#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "opinion/emotions.hpp"

namespace opinion {

enum class Polarity { Positive, Negative };

enum class EntrySource { Base, SoPmi, NewWord };

const char* polarity_name(Polarity p);
const char* entry_source_name(EntrySource s);

struct SentimentEntry {
  std::string word;
  std::optional<Polarity> polarity;
  // Intensity per emotion on the odd 1..9 scale; 0 means the emotion
  // is absent from this entry.
  std::array<int, kEmotionCount> intensities{};
  EntrySource source = EntrySource::Base;

  // Sign applied to score contributions: negative polarity flips the
  // contribution, anything else leaves it positive.
  double sign() const;
  bool has_emotions() const;
};

class Lexicon {
 public:
  const SentimentEntry* find(std::string_view word) const;
  bool contains(std::string_view word) const { return find(word) != nullptr; }

  // Insert or replace.
  void upsert(SentimentEntry entry);
  // Returns false (and leaves the lexicon unchanged) if the word exists.
  bool insert_if_absent(SentimentEntry entry);

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<std::string, SentimentEntry, std::less<>>& entries() const {
    return entries_;
  }

  // Merge TSV dictionaries in order; on a word collision the later file
  // wins. Throws ParseError with file and line on malformed input.
  static Lexicon load_merge(const std::vector<std::filesystem::path>& files);
  void save_tsv(const std::filesystem::path& path) const;

 private:
  std::map<std::string, SentimentEntry, std::less<>> entries_;
};

struct FunctionWordTables {
  std::set<std::string, std::less<>> negations;
  std::map<std::string, double, std::less<>> degree_adverbs;

  bool is_negation(std::string_view word) const {
    return negations.find(word) != negations.end();
  }
  std::optional<double> degree_multiplier(std::string_view word) const;

  // TSV rows are `word<TAB>neg` or `word<TAB>deg<TAB>multiplier`.
  // A word may appear in only one table and multipliers must be > 0.
  static FunctionWordTables load(const std::filesystem::path& path);
};

}  // namespace opinion
