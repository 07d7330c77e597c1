#pragma once

#include <cstdint>

namespace simbench {

/// Deterministic random stream. Uniform doubles come straight from the
/// splitmix64 bit stream, normals via Box-Muller and Poisson draws via
/// Knuth (small mean) or the PTRS transformed-rejection sampler, so the
/// sequence depends only on the seed, not on the standard library.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  /// Standard normal.
  double normal();
  /// Poisson with the given mean (mean >= 0).
  std::int64_t poisson(double mean);
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Derive an independent stream seed from a base seed and a salt.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt);

/// FNV-1a over a byte string; used for config provenance hashes.
std::uint64_t fnv1a_hash(const void* data, std::size_t n);

}  // namespace simbench
