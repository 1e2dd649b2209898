#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <random>
#include <string>

namespace compofuse {

/// Deterministic random stream. The engine is std::mt19937_64 (its output
/// sequence is pinned by the C++ standard); the distribution transforms are
/// spelled out here instead of using std::*_distribution, whose sequences are
/// implementation-defined and would break cross-toolchain reproducibility.
class Rng {
 public:
  Rng() : Rng(0) {}
  explicit Rng(uint64_t seed) : engine_(seed) {}

  /// Stream derived from a seed and a path of stream labels, e.g.
  /// {kAugment, epoch, sample_index}. Equal paths give equal streams.
  static Rng derive(uint64_t seed, std::initializer_list<uint64_t> path) {
    uint64_t h = mix(seed ^ 0x9e3779b97f4a7c15ull);
    for (uint64_t p : path) h = mix(h ^ mix(p + 0x9e3779b97f4a7c15ull));
    return Rng(h);
  }

  uint64_t next_u64() { return engine_(); }

  /// Uniform in [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi], inclusive.
  int64_t uniform_int(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(engine_() % span);
  }

  bool bernoulli(double p) { return uniform() < p; }

  /// Stateless Box-Muller: consumes two draws, returns one variate.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  void save(std::ostream& os) const { os << engine_; }
  void load(std::istream& is) { is >> engine_; }

  static uint64_t mix(uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  static uint64_t hash_string(const std::string& s) {
    // FNV-1a, then mixed; used to derive per-parameter init streams
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return mix(h);
  }

 private:
  std::mt19937_64 engine_;
};

/// Labels for derived streams so call sites cannot collide by accident.
namespace stream {
constexpr uint64_t kInit = 1;
constexpr uint64_t kShuffle = 2;
constexpr uint64_t kAugment = 3;
constexpr uint64_t kSynth = 4;
constexpr uint64_t kSplit = 5;
}  // namespace stream

}  // namespace compofuse
