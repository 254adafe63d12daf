#include "opinion/bloom_filter.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "opinion/errors.hpp"

namespace opinion {

namespace {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Seeded FNV-1a with a splitmix finalizer; stable across platforms, which the
// snapshot format relies on.
uint64_t hash64(std::string_view data, uint64_t seed) {
  uint64_t h = seed ^ 0xCBF29CE484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  h ^= h >> 30;
  h *= 0xBF58476D1CE4E5B9ULL;
  h ^= h >> 27;
  h *= 0x94D049BB133111EBULL;
  h ^= h >> 31;
  return h;
}

void write_u32(std::ostream& out, uint32_t v) {
  uint8_t b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<uint8_t>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 4);
}

void write_u64(std::ostream& out, uint64_t v) {
  uint8_t b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<uint8_t>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

uint32_t read_u32(std::istream& in) {
  uint8_t b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
  return v;
}

uint64_t read_u64(std::istream& in) {
  uint8_t b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
  return v;
}

constexpr char kMagic[4] = {'B', 'L', 'M', 'F'};
constexpr uint32_t kVersion = 1;

}  // namespace

BloomFilter::BloomFilter(uint64_t bit_count, uint32_t hash_count, uint64_t seed)
    : bit_count_(bit_count),
      hash_count_(hash_count),
      seed_(seed),
      mutex_(std::make_unique<std::mutex>()) {
  if (bit_count < 8) throw std::invalid_argument("bloom: bit count must be >= 8");
  if (hash_count < 1 || hash_count > 16) {
    throw std::invalid_argument("bloom: hash count must be in [1, 16]");
  }
  uint64_t state = seed;
  seed1_ = splitmix64(state);
  seed2_ = splitmix64(state);
  bits_.assign((bit_count + 7) / 8, 0);
}

void BloomFilter::probe_positions(std::string_view key, std::vector<uint64_t>& out) const {
  const uint64_t h1 = hash64(key, seed1_);
  const uint64_t h2 = hash64(key, seed2_) | 1ULL;
  out.clear();
  for (uint32_t i = 0; i < hash_count_; ++i) {
    out.push_back((h1 + static_cast<uint64_t>(i) * h2) % bit_count_);
  }
}

BloomFilter::Insert BloomFilter::check_and_insert(std::string_view key) {
  if (key.empty()) throw std::invalid_argument("bloom: empty key");
  std::vector<uint64_t> positions;
  probe_positions(key, positions);
  std::lock_guard lock(*mutex_);
  bool fresh = false;
  for (uint64_t pos : positions) {
    uint8_t& byte = bits_[pos / 8];
    const uint8_t mask = static_cast<uint8_t>(1u << (pos % 8));
    if ((byte & mask) == 0) {
      fresh = true;
      byte |= mask;
    }
  }
  if (fresh) ++inserted_count_;
  return fresh ? Insert::New : Insert::Duplicate;
}

bool BloomFilter::contains(std::string_view key) const {
  if (key.empty()) throw std::invalid_argument("bloom: empty key");
  std::vector<uint64_t> positions;
  probe_positions(key, positions);
  std::lock_guard lock(*mutex_);
  for (uint64_t pos : positions) {
    if ((bits_[pos / 8] & (1u << (pos % 8))) == 0) return false;
  }
  return true;
}

uint64_t BloomFilter::ones_count() const {
  std::lock_guard lock(*mutex_);
  uint64_t n = 0;
  for (uint8_t b : bits_) n += std::popcount(b);
  return n;
}

double BloomFilter::analytic_fpr(uint64_t m, uint32_t k, uint64_t n) {
  const double exponent = -static_cast<double>(k) * static_cast<double>(n) /
                          static_cast<double>(m);
  return std::pow(1.0 - std::exp(exponent), static_cast<double>(k));
}

void BloomFilter::save(std::ostream& out) const {
  std::lock_guard lock(*mutex_);
  out.write(kMagic, 4);
  write_u32(out, kVersion);
  write_u64(out, bit_count_);
  write_u32(out, hash_count_);
  write_u64(out, seed_);
  write_u64(out, inserted_count_);
  out.write(reinterpret_cast<const char*>(bits_.data()),
            static_cast<std::streamsize>(bits_.size()));
  if (!out) throw IoError("bloom: snapshot write failed");
}

BloomFilter BloomFilter::load(std::istream& in) {
  char magic[4] = {};
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    throw IoError("bloom: bad snapshot magic");
  }
  const uint32_t version = read_u32(in);
  if (version != kVersion) throw IoError("bloom: unsupported snapshot version");
  const uint64_t m = read_u64(in);
  const uint32_t k = read_u32(in);
  const uint64_t seed = read_u64(in);
  const uint64_t inserted = read_u64(in);
  if (!in) throw IoError("bloom: truncated snapshot header");

  BloomFilter filter(m, k, seed);
  in.read(reinterpret_cast<char*>(filter.bits_.data()),
          static_cast<std::streamsize>(filter.bits_.size()));
  if (in.gcount() != static_cast<std::streamsize>(filter.bits_.size())) {
    throw IoError("bloom: truncated snapshot body");
  }
  filter.inserted_count_ = inserted;
  return filter;
}

void BloomFilter::save_file(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("bloom: cannot open " + path.string() + " for writing");
  save(out);
}

BloomFilter BloomFilter::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("bloom: cannot open " + path.string());
  return load(in);
}

}  // namespace opinion
