#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace slrprune {

// Counter-based deterministic generator. Draw i is a pure function of
// (seed, i): the 64-bit SplitMix finalizer applied to seed + i * golden
// ratio constant. Identical seeds therefore give identical streams on
// every platform, and substreams can be forked without sharing state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64();

  // uniform in [0, 1), 53-bit resolution
  double uniform();
  double uniform(double lo, double hi);

  // standard normal via Box-Muller (two uniform draws per call)
  double normal();

  // uniform integer in [0, n), n > 0
  std::int64_t uniform_int(std::int64_t n);

  // Independent substream; decorrelated from this stream and from other ids.
  Rng fork(std::uint64_t stream_id) const;

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::int64_t i = static_cast<std::int64_t>(items.size()) - 1; i > 0; --i) {
      std::swap(items[static_cast<std::size_t>(i)], items[static_cast<std::size_t>(uniform_int(i + 1))]);
    }
  }

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace slrprune
