#pragma once

#include <cstdint>
#include <random>

namespace coefrand {

// splitmix64 mixing step; used both as a seed hash and to derive
// independent per-replication streams from (base_seed, index).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Stream seed for replication `index` of a run seeded with `base`.
// Replications draw from unrelated mt19937-64 states, so Monte Carlo
// loops parallelize without coordination and results do not depend on
// the thread schedule.
inline std::uint64_t substream(std::uint64_t base, std::uint64_t index) {
  return splitmix64(splitmix64(base) ^ splitmix64(index * 0xD1B54A32D192ED03ull + 1));
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(splitmix64(seed ^ 0xA24BAED4963EE407ull));
}

}  // namespace coefrand
