#include "opinion/frontier.hpp"

#include <cctype>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "opinion/errors.hpp"

namespace opinion {

namespace {

bool is_scheme_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
}

}  // namespace

std::string normalize_key(std::string_view key) {
  // URL shape: scheme "://" host [path...]
  const size_t sep = key.find("://");
  if (sep == std::string_view::npos || sep == 0) return std::string(key);
  for (size_t i = 0; i < sep; ++i) {
    if (!is_scheme_char(key[i])) return std::string(key);
  }

  std::string out;
  out.reserve(key.size());
  for (size_t i = 0; i < sep; ++i) {
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(key[i]))));
  }
  out += "://";

  size_t i = sep + 3;
  for (; i < key.size() && key[i] != '/' && key[i] != '?' && key[i] != '#'; ++i) {
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(key[i]))));
  }
  // Path and query keep their case and order; the fragment is dropped.
  for (; i < key.size() && key[i] != '#'; ++i) out.push_back(key[i]);
  return out;
}

Frontier::Frontier(BloomFilter filter, std::filesystem::path intake_log)
    : filter_(std::move(filter)), log_path_(std::move(intake_log)) {
  log_.open(log_path_, std::ios::app);
}

OfferResult Frontier::offer(const FrontierItem& item) {
  if (item.key.empty()) throw std::invalid_argument("frontier: empty item key");
  const std::string canonical = normalize_key(item.key);
  if (filter_.check_and_insert(canonical) == BloomFilter::Insert::Duplicate) {
    ++duplicates_;
    return OfferResult::RejectedDuplicate;
  }

  nlohmann::json line = {{"key", item.key},
                         {"payload_path", item.payload_path},
                         {"enqueued_at", item.enqueued_at}};
  {
    std::lock_guard lock(io_mutex_);
    if (!log_) throw IoError("frontier: intake log unavailable: " + log_path_.string());
    log_ << line.dump() << '\n';
    log_.flush();
    if (!log_) throw IoError("frontier: intake log append failed: " + log_path_.string());
  }
  ++accepted_;
  return OfferResult::Accepted;
}

}  // namespace opinion
