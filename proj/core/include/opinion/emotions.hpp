#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace opinion {

// Fixed order; it is also the tie-break order when absolute scores are equal.
enum class Emotion : int {
  Hopeful = 0,
  Happy = 1,
  Depressed = 2,
  Angry = 3,
  Frightened = 4,
  Disappointed = 5,
  Shocked = 6,
};

inline constexpr int kEmotionCount = 7;

const char* emotion_name(Emotion e);
std::optional<Emotion> emotion_from_name(std::string_view name);

enum ScoreFlags : uint8_t {
  kFlagNone = 0,
  kFlagFallback = 1,       // scores came from the polarity classifier
  kFlagLexiconSilent = 2,  // the lexicon matched nothing
};

struct EmotionVector {
  std::array<double, kEmotionCount> scores{};
  double total_polarity = 0.0;
  uint8_t flags = kFlagNone;

  // Largest score by absolute value ("find the absolute value before
  // comparing"); ties resolve to the earliest emotion in the fixed order.
  Emotion dominant() const;
  bool all_zero() const;

  double& operator[](Emotion e) { return scores[static_cast<size_t>(e)]; }
  double operator[](Emotion e) const { return scores[static_cast<size_t>(e)]; }
};

}  // namespace opinion
