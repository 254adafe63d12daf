#include "opinion/emotions.hpp"

#include <cmath>

namespace opinion {

namespace {
constexpr std::array<const char*, kEmotionCount> kNames = {
    "Hopeful", "Happy", "Depressed", "Angry", "Frightened", "Disappointed", "Shocked"};
}

const char* emotion_name(Emotion e) { return kNames[static_cast<size_t>(e)]; }

std::optional<Emotion> emotion_from_name(std::string_view name) {
  for (size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<Emotion>(i);
  }
  return std::nullopt;
}

Emotion EmotionVector::dominant() const {
  int best = 0;
  for (int i = 1; i < kEmotionCount; ++i) {
    if (std::abs(scores[i]) > std::abs(scores[best])) best = i;
  }
  return static_cast<Emotion>(best);
}

bool EmotionVector::all_zero() const {
  for (double s : scores) {
    if (s != 0.0) return false;
  }
  return true;
}

}  // namespace opinion
