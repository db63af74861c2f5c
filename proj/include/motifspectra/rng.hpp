#pragma once

// Seeded random streams. All draws go through mt19937_64 raw output and
// explicit bit manipulation, never through std:: distributions, whose
// algorithms are implementation-defined; this keeps samples identical across
// standard libraries.

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace motifspectra {

/// One step of the splitmix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// FNV-1a hash of a tag string.
constexpr std::uint64_t tag_hash(std::string_view tag) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Deterministic child seed; distinct tags give unrelated sub-streams.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) noexcept {
  return splitmix64(splitmix64(seed) ^ splitmix64(tag + 0x632be59bd9b4e019ULL));
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) noexcept {
  return derive_seed(seed, tag_hash(tag));
}

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1].
  double uniform_open() { return double((next() >> 11) + 1) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform integer in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do x = next(); while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

/// Calls f(index) for each index in [0, count) selected by an independent
/// Bernoulli(p) trial, in increasing order. Uses geometric gap sampling, so
/// the cost is proportional to the number of hits rather than count.
template <class F>
void for_each_bernoulli(std::uint64_t count, double p, RandomStream& rng, F&& f) {
  if (count == 0 || !(p > 0.0)) return;
  if (p >= 1.0) {
    for (std::uint64_t i = 0; i < count; ++i) f(i);
    return;
  }
  const double log_q = std::log1p(-p);
  auto gap = [&]() -> double { return std::floor(std::log(rng.uniform_open()) / log_q); };
  double next = gap();
  while (next < double(count)) {
    const auto idx = static_cast<std::uint64_t>(next);
    f(idx);
    next = double(idx) + 1.0 + gap();
  }
}

}  // namespace motifspectra
