#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace forge {

/// SplitMix64 finalizer; used to decorrelate derived seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seeded generator with platform-independent draws.
///
/// std::uniform_int_distribution is implementation-defined, so bounded
/// draws are done here by rejection on top of mt19937_64, whose output
/// sequence is fixed by the standard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n);

  /// k distinct indices from [0, n) in draw order (partial Fisher-Yates).
  std::vector<std::size_t> choose(std::size_t n, std::size_t k);

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Stream for one (article, task) pair; independent of processing order.
inline Rng derive_rng(std::uint64_t seed, std::uint64_t article_id, std::uint64_t stream) {
  return Rng(seed ^ mix64(article_id ^ mix64(stream + 0x51ed27ULL)));
}

}  // namespace forge
