#pragma once

#include <atomic>
#include <cstdint>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace s2t {

// ---------------------------------------------------------------------------
// Seeded randomness.
//
// Every random draw in the project flows from an explicit 64-bit seed through
// SplitMix64. Streams are derived by hashing (seed, stream, index), which makes
// draws independent of each other and of evaluation order.
// ---------------------------------------------------------------------------

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t hash_combine(uint64_t a, uint64_t b) {
  return splitmix64(a ^ (splitmix64(b) + 0x9e3779b97f4a7c15ull));
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(splitmix64(seed)) {}

  // Counter-based stream: draws are a pure function of (seed, stream, index).
  static Rng stream(uint64_t seed, uint64_t stream_id, uint64_t index = 0) {
    return Rng(hash_combine(hash_combine(seed, stream_id), index));
  }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  // Uniform in [0, 1). 53-bit mantissa; identical on every platform.
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform integer in [0, n).
  uint64_t next_below(uint64_t n) {
    // Multiply-shift; bias is < 2^-64, irrelevant at our scales.
    return uint64_t((__uint128_t(next_u64()) * n) >> 64);
  }

  // In-place Fisher-Yates (std::shuffle is implementation-defined).
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = size_t(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t state_;
};

// ---------------------------------------------------------------------------
// Checksums. FNV-1a over bytes; used as cache keys, not for security.
// ---------------------------------------------------------------------------

inline uint64_t fnv1a64(const void* data, size_t n, uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

std::string checksum_hex(uint64_t h);
uint64_t checksum_file(const std::string& path);

// ---------------------------------------------------------------------------
// Byte buffer serialization (little-endian host assumed; see docs/formats.md).
// ---------------------------------------------------------------------------

struct ByteWriter {
  std::vector<char> bytes;
  void raw(const void* p, size_t n) {
    const char* c = static_cast<const char*>(p);
    bytes.insert(bytes.end(), c, c + n);
  }
  template <typename T>
  void pod(T v) {
    raw(&v, sizeof(T));
  }
  void str(const std::string& s) { raw(s.data(), s.size()); }
};

struct ByteReader {
  const char* p;
  size_t n;
  size_t off = 0;
  ByteReader(const char* data, size_t size) : p(data), n(size) {}
  void raw(void* out, size_t k) {
    if (off + k > n) throw std::runtime_error("truncated input");
    std::memcpy(out, p + off, k);
    off += k;
  }
  template <typename T>
  T pod() {
    T v;
    raw(&v, sizeof(T));
    return v;
  }
  size_t remaining() const { return n - off; }
};

std::vector<char> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const void* data, size_t n);

// ---------------------------------------------------------------------------
// parallel_for: runs fn(i) for i in [0, count) on up to `jobs` threads.
// jobs <= 1 runs inline. Items must be independent.
// ---------------------------------------------------------------------------

inline void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn) {
  if (jobs <= 0) jobs = int(std::thread::hardware_concurrency());
  if (jobs <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::string error;
  std::mutex* err_mx = new std::mutex;
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) break;
      try {
        fn(i);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lk(*err_mx);
        failed.store(true);
        if (error.empty()) error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  size_t nthreads = std::min<size_t>(size_t(jobs), count);
  pool.reserve(nthreads);
  for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  bool had_error = failed.load();
  std::string msg = error;
  delete err_mx;
  if (had_error) throw std::runtime_error(msg.empty() ? "parallel_for worker failed" : msg);
}

}  // namespace s2t
