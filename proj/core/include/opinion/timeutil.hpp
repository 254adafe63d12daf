#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace opinion {

// Accepts "YYYY-MM-DDTHH:MM:SS" with optional trailing "Z" (a space instead
// of 'T' also works) and validates the field ranges.
bool is_utc_timestamp(std::string_view s);

// UTC day bucket ("YYYY-MM-DD") of a timestamp, or nullopt if malformed.
std::optional<std::string> utc_day(std::string_view timestamp);

}  // namespace opinion
