#pragma once
// Counter-based deterministic random words: every draw is a pure function of
// (seed, stream, counter), so any schedule position can be regenerated from
// the checkpoint coordinates alone and parallel workers need no shared state.

#include <cstdint>

namespace crosspart {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ counter);
}

// Maps a random word into [0, bound) by the multiply-shift reduction.
// Pre: bound >= 1.
inline std::uint64_t uniform_below(std::uint64_t word, std::uint64_t bound) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(word) * bound) >> 64);
}

}  // namespace crosspart
