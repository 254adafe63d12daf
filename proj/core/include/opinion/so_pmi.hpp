#pragma once

#include <set>
#include <string>
#include <string_view>

#include "opinion/cooccurrence.hpp"
#include "opinion/lexicon.hpp"

namespace opinion {

// Pointwise mutual information in bits:
//   log2( pair(a,b) * total / (count(a) * count(b)) )
// With smoothing on, pair counts get +1 and word counts are clamped to
// at least 1, so unobserved words and pairs stay finite. With smoothing
// off the raw counts are used (both words must have been observed).
double pmi(const CooccurrenceStats& stats, std::string_view a, std::string_view b,
           bool smoothed = true);

// Semantic orientation: sum of PMI against positive seeds minus sum
// against negative seeds. Throws std::invalid_argument on an empty seed
// set and NotInCorpusError when word itself was never observed.
double so_pmi(const CooccurrenceStats& stats, std::string_view word,
              const std::set<std::string>& pos_seeds,
              const std::set<std::string>& neg_seeds, bool smoothed = true);

// Adds candidates whose |so_pmi| clears the threshold as new entries
// (positive -> Hopeful 5, negative -> Depressed 5, source so_pmi).
// Existing entries and candidates absent from the corpus are left
// alone. Throws std::invalid_argument for threshold <= 0.
Lexicon expand_lexicon(const Lexicon& lex, const CooccurrenceStats& stats,
                       const std::set<std::string>& candidates,
                       const std::set<std::string>& pos_seeds,
                       const std::set<std::string>& neg_seeds, double threshold);

}  // namespace opinion
