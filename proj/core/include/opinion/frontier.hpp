#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>
#include <string_view>

#include "opinion/bloom_filter.hpp"

namespace opinion {

struct FrontierItem {
  std::string key;           // URL or comment id; non-empty
  std::string payload_path;  // locator of the raw content
  std::string enqueued_at;   // UTC timestamp
};

// Canonical form used for dedup tests: URLs get a lowercased scheme and host
// and lose their fragment; the query keeps its order. Non-URL keys pass
// through unchanged.
std::string normalize_key(std::string_view key);

enum class OfferResult { Accepted, RejectedDuplicate };

// Deduplicating ingestion frontier: unique items land in a durable JSONL
// intake log, duplicates are dropped. A key wrongly flagged by a Bloom false
// positive is dropped silently. On a failed log append the key may stay
// marked in the filter (at-most-once ingestion).
class Frontier {
 public:
  Frontier(BloomFilter filter, std::filesystem::path intake_log);

  OfferResult offer(const FrontierItem& item);  // throws IoError on log failure

  const BloomFilter& filter() const { return filter_; }
  BloomFilter& filter() { return filter_; }
  uint64_t accepted() const { return accepted_; }
  uint64_t duplicates() const { return duplicates_; }

 private:
  BloomFilter filter_;
  std::filesystem::path log_path_;
  std::ofstream log_;
  std::mutex io_mutex_;
  std::atomic<uint64_t> accepted_ = 0;
  std::atomic<uint64_t> duplicates_ = 0;
};

}  // namespace opinion
