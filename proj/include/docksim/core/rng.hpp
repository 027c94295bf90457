#pragma once

#include <cstdint>
#include <random>

namespace docksim {

// Seeded pseudo-random stream. One instance per (seed, stream_id) pair;
// single-owner per trial. Identical (seed, stream_id) replays the exact
// same sequence. The uniform/normal transforms are implemented here (not
// std::*_distribution) so the draw sequence is pinned by this code alone.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream_id);

  // Uniform double in [0, 1), 53-bit resolution.
  double uniform();
  double uniform(double lo, double hi);
  // Standard normal via Box-Muller (pairs cached).
  double normal();
  double normal(double mean, double stddev) { return mean + stddev * normal(); }
  // Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n);
  std::uint64_t next_u64() { return engine_(); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

// Factory per the (seed, stream_id) contract.
Rng rng_stream(std::uint64_t seed, std::uint64_t stream_id);

// SplitMix64 step; used for seed mixing and exposed for tests.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace docksim
