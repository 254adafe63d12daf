#include "opinion/timeutil.hpp"

#include <array>
#include <cctype>

namespace opinion {

namespace {

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return !s.empty();
}

int to_int(std::string_view s) {
  int v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

bool valid_date(int y, int m, int d) {
  static constexpr std::array<int, 12> days = {31, 28, 31, 30, 31, 30,
                                               31, 31, 30, 31, 30, 31};
  if (y < 1 || m < 1 || m > 12 || d < 1) return false;
  int dim = days[m - 1];
  const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
  if (m == 2 && leap) dim = 29;
  return d <= dim;
}

}  // namespace

bool is_utc_timestamp(std::string_view s) {
  // YYYY-MM-DD[T ]HH:MM:SS[Z]
  if (s.size() == 20 && s.back() == 'Z') s.remove_suffix(1);
  if (s.size() != 19) return false;
  if (s[4] != '-' || s[7] != '-' || (s[10] != 'T' && s[10] != ' ') ||
      s[13] != ':' || s[16] != ':') {
    return false;
  }
  if (!all_digits(s.substr(0, 4)) || !all_digits(s.substr(5, 2)) ||
      !all_digits(s.substr(8, 2)) || !all_digits(s.substr(11, 2)) ||
      !all_digits(s.substr(14, 2)) || !all_digits(s.substr(17, 2))) {
    return false;
  }
  if (!valid_date(to_int(s.substr(0, 4)), to_int(s.substr(5, 2)),
                  to_int(s.substr(8, 2)))) {
    return false;
  }
  const int hh = to_int(s.substr(11, 2));
  const int mm = to_int(s.substr(14, 2));
  const int ss = to_int(s.substr(17, 2));
  return hh < 24 && mm < 60 && ss < 61;
}

std::optional<std::string> utc_day(std::string_view timestamp) {
  if (!is_utc_timestamp(timestamp)) return std::nullopt;
  return std::string(timestamp.substr(0, 10));
}

}  // namespace opinion
