#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <string_view>
#include <vector>

namespace opinion {

// Probabilistic membership set for ingest dedup: no false negatives, tunable
// false-positive rate. The k probe positions come from two base hashes via
// double hashing (h1 + i*h2 mod m).
class BloomFilter {
 public:
  enum class Insert { New, Duplicate };

  // Throws std::invalid_argument unless bit_count >= 8 and 1 <= hash_count <= 16.
  BloomFilter(uint64_t bit_count, uint32_t hash_count, uint64_t seed);

  BloomFilter(BloomFilter&&) noexcept = default;
  BloomFilter& operator=(BloomFilter&&) noexcept = default;

  // Atomic test-and-set: New iff at least one probed bit was still zero.
  // A second call with the same key always reports Duplicate.
  Insert check_and_insert(std::string_view key);
  bool contains(std::string_view key) const;

  uint64_t bit_count() const { return bit_count_; }
  uint32_t hash_count() const { return hash_count_; }
  uint64_t seed() const { return seed_; }
  uint64_t inserted_count() const { return inserted_count_; }
  uint64_t ones_count() const;

  // Expected false-positive rate of a (m, k) filter holding n keys:
  // (1 - e^(-k*n/m))^k.
  static double analytic_fpr(uint64_t m, uint32_t k, uint64_t n);

  // Snapshot format: "BLMF", version u32, m u64, k u32, seed u64,
  // n_inserted u64 (all little-endian), then ceil(m/8) bytes with bit j
  // stored at byte j/8, position j%8 (LSB first).
  void save(std::ostream& out) const;
  static BloomFilter load(std::istream& in);
  void save_file(const std::filesystem::path& path) const;
  static BloomFilter load_file(const std::filesystem::path& path);

 private:
  void probe_positions(std::string_view key, std::vector<uint64_t>& out) const;

  uint64_t bit_count_ = 0;
  uint32_t hash_count_ = 0;
  uint64_t seed_ = 0;
  uint64_t seed1_ = 0;
  uint64_t seed2_ = 0;
  uint64_t inserted_count_ = 0;
  std::vector<uint8_t> bits_;
  mutable std::unique_ptr<std::mutex> mutex_;
};

}  // namespace opinion
