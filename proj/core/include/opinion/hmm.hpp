#pragma once

#include <array>
#include <filesystem>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace opinion {

// Character tagging states for word segmentation, in fixed index order.
// B begins a multi-char word, E ends one, M sits inside, S is a
// single-char word. The index order matters: ties in Viterbi argmax
// resolve to the lowest index.
enum class HmmState : int { B = 0, E = 1, M = 2, S = 3 };

inline constexpr int kHmmStateCount = 4;
inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();

const char* hmm_state_name(HmmState s);

// Well-formedness of BEMS sequences: a word is S or B M* E, so only
// B->{E,M}, M->{E,M}, E->{B,S}, S->{B,S} can occur.
bool transition_allowed(HmmState from, HmmState to);

struct HmmModel {
  std::array<double, kHmmStateCount> initial{};
  std::array<std::array<double, kHmmStateCount>, kHmmStateCount> transition{};
  std::map<char32_t, std::array<double, kHmmStateCount>> emission;
  std::array<double, kHmmStateCount> unk_emission{};

  double emission_log_prob(HmmState s, char32_t cp) const;

  void save(const std::filesystem::path& path) const;
  static HmmModel load(const std::filesystem::path& path);
};

// One sentence per line, words separated by spaces; blank lines and
// '#' comment lines skipped.
std::vector<std::vector<std::string>> read_segmented_corpus(
    const std::filesystem::path& path);

// Tag sequence a single word of n_chars characters contributes: S for
// one char, B E for two, B M... E beyond.
std::vector<HmmState> word_tags(size_t n_chars);

// Supervised maximum-likelihood training. Emissions get add-lambda
// smoothing over the corpus character vocabulary; transitions and the
// initial distribution stay pure MLE with structural zeros at -inf.
// Throws std::invalid_argument on an empty corpus.
HmmModel hmm_train(const std::vector<std::vector<std::string>>& corpus);

}  // namespace opinion
