#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "opinion/document.hpp"
#include "opinion/hmm.hpp"
#include "opinion/textprep.hpp"

namespace opinion {

// Best tag sequence for a run of CJK characters. Paths are structurally
// valid: they start at B or S, follow only allowed transitions and end
// at E or S (a single character is always S). Every argmax tie resolves
// to the lowest state index, decided backwards from the final position,
// and a text with no finite-probability path decodes to the positional
// minimum outright.
std::vector<HmmState> viterbi_tags(const HmmModel& model,
                                   const std::vector<char32_t>& chars);

// Segment text into words. CJK runs go through the Viterbi trellis;
// anything else (latin, digits, punctuation, whitespace runs) passes
// through as one atomic token per run. Concatenating the result yields
// the input bytes exactly.
std::vector<std::string> viterbi_segment(const HmmModel& model, std::string_view text);

// Segmentation followed by whitespace-token and stopword removal.
std::vector<std::string> segment_pipeline(const Document& doc, const HmmModel& model,
                                          const StopwordList& stops);

}  // namespace opinion
