#pragma once

#include <cmath>
#include <cstdint>

namespace fdaclust {

// splitmix64 finalizer (full-avalanche 64-bit mixer).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Counter-based generator: draw i of a stream is mix64(key ^ mix64(i)), so a
// stream is a pure function of its key and its draw index. Keys are derived
// from (seed, path...) which gives one independent stream per
// (replication, subject, ...) tuple; parallel and serial schedules see the
// same numbers.
class Rng {
 public:
  explicit Rng(std::uint64_t key) : key_(key) {}

  static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t a = 0,
                                  std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t k = mix64(seed ^ 0x8AF1B0A3E1D24C57ull);
    k = mix64(k ^ mix64(a ^ 0x6A09E667F3BCC909ull));
    k = mix64(k ^ mix64(b ^ 0xBB67AE8584CAA73Bull));
    k = mix64(k ^ mix64(c ^ 0x3C6EF372FE94F82Bull));
    return k;
  }

  std::uint64_t next_u64() { return mix64(key_ ^ mix64(ctr_++)); }

  // uniform on (0,1)
  double uniform01() {
    const std::uint64_t bits = next_u64() >> 11;  // 53 bits
    double u = static_cast<double>(bits) * 0x1.0p-53;
    return u > 0.0 ? u : 0x1.0p-53;
  }

  // standard normal via Box-Muller, second draw cached
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  // uniform integer in [lo, hi], inclusive
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const auto wide = static_cast<unsigned __int128>(next_u64()) * span;
    return lo + static_cast<int>(wide >> 64);
  }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace fdaclust
