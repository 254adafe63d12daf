#include "opinion/segmenter.hpp"

#include <algorithm>

#include "opinion/utf8.hpp"

namespace opinion {

namespace {

constexpr int idx(HmmState s) { return static_cast<int>(s); }

constexpr HmmState kStates[kHmmStateCount] = {HmmState::B, HmmState::E, HmmState::M,
                                              HmmState::S};

enum class RunKind { Cjk, Space, Other };

RunKind run_kind(char32_t cp) {
  if (is_cjk(cp)) return RunKind::Cjk;
  if (is_space(cp)) return RunKind::Space;
  return RunKind::Other;
}

bool is_space_token(const std::string& token) {
  const auto cps = utf8_codepoints(token);
  return std::all_of(cps.begin(), cps.end(), [](char32_t c) { return is_space(c); });
}

}  // namespace

std::vector<HmmState> viterbi_tags(const HmmModel& model,
                                   const std::vector<char32_t>& chars) {
  const size_t n = chars.size();
  if (n == 0) return {};
  if (n == 1) return {HmmState::S};

  std::vector<std::array<double, kHmmStateCount>> weight(n);
  std::vector<std::array<int, kHmmStateCount>> path(n);

  // Only B and S can open a word, so the other states are unreachable
  // at position 0 no matter what the model says.
  for (const HmmState s : kStates) {
    const bool can_start = s == HmmState::B || s == HmmState::S;
    weight[0][idx(s)] =
        can_start ? model.initial[idx(s)] + model.emission_log_prob(s, chars[0])
                  : kLogZero;
    path[0][idx(s)] = -1;
  }

  for (size_t t = 1; t < n; ++t) {
    for (const HmmState s : kStates) {
      // The emission joins each candidate before the argmax: a -inf (or
      // rounding-collapsed) emission ties every predecessor, and the tie
      // must fall to the lowest state index like any other.
      const double emit = model.emission_log_prob(s, chars[t]);
      double best = kLogZero;
      int best_prev = -1;
      for (const HmmState prev : kStates) {
        if (!transition_allowed(prev, s)) continue;
        if (t == 1 && prev != HmmState::B && prev != HmmState::S) continue;
        const double cand =
            weight[t - 1][idx(prev)] + model.transition[idx(prev)][idx(s)] + emit;
        if (best_prev < 0 || cand > best) {
          best = cand;
          best_prev = idx(prev);
        }
      }
      weight[t][idx(s)] = best;
      path[t][idx(s)] = best_prev;
    }
  }

  // When no path keeps finite probability, every structurally valid
  // sequence ties at -inf and backpointers (chosen on prefix scores that
  // a later -inf then erased) are meaningless. The positional tie-break
  // then reduces to the lowest-index valid sequence from the end: E, B
  // alternating, bent to a legal start state at position 0.
  if (weight[n - 1][idx(HmmState::E)] == kLogZero &&
      weight[n - 1][idx(HmmState::S)] == kLogZero) {
    std::vector<HmmState> tags(n);
    for (size_t t = 0; t < n; ++t) {
      tags[t] = (n - 1 - t) % 2 == 0 ? HmmState::E : HmmState::B;
    }
    if (tags[0] == HmmState::E) tags[0] = HmmState::S;
    return tags;
  }

  // A sequence must close its last word: only E or S may end it.
  int last = idx(HmmState::E);
  if (weight[n - 1][idx(HmmState::S)] > weight[n - 1][idx(HmmState::E)]) {
    last = idx(HmmState::S);
  }

  std::vector<HmmState> tags(n);
  for (size_t t = n; t-- > 0;) {
    tags[t] = static_cast<HmmState>(last);
    last = path[t][last];
  }
  return tags;
}

std::vector<std::string> viterbi_segment(const HmmModel& model, std::string_view text) {
  const std::vector<Utf8Unit> units = utf8_decode(text);
  std::vector<std::string> tokens;

  const auto byte_range = [&](size_t first_unit, size_t last_unit) {
    const size_t begin = units[first_unit].offset;
    const size_t end = units[last_unit].offset + units[last_unit].length;
    return std::string(text.substr(begin, end - begin));
  };

  size_t i = 0;
  while (i < units.size()) {
    const RunKind kind = run_kind(units[i].cp);
    size_t j = i + 1;
    while (j < units.size() && run_kind(units[j].cp) == kind) ++j;

    if (kind != RunKind::Cjk) {
      tokens.push_back(byte_range(i, j - 1));
      i = j;
      continue;
    }

    std::vector<char32_t> chars;
    chars.reserve(j - i);
    for (size_t k = i; k < j; ++k) chars.push_back(units[k].cp);
    const std::vector<HmmState> tags = viterbi_tags(model, chars);

    size_t word_start = i;
    for (size_t k = i; k < j; ++k) {
      const HmmState tag = tags[k - i];
      if (tag == HmmState::E || tag == HmmState::S) {
        tokens.push_back(byte_range(word_start, k));
        word_start = k + 1;
      }
    }
    i = j;
  }
  return tokens;
}

std::vector<std::string> segment_pipeline(const Document& doc, const HmmModel& model,
                                          const StopwordList& stops) {
  std::vector<std::string> words;
  for (auto& token : viterbi_segment(model, doc.clean_text)) {
    if (!token.empty() && !is_space_token(token)) words.push_back(std::move(token));
  }
  return remove_stopwords(words, stops);
}

}  // namespace opinion
