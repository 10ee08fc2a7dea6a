#pragma once

#include <cstdint>
#include <random>

namespace hamdisc {

// One step of the splitmix64 sequence starting from `state`.
uint64_t splitmix64_next(uint64_t& state);

// Fixed mixing function used everywhere a derived stream is needed
// (per-trial seeds, per-coset seeds, local-search restarts). Replaying a
// single trial only requires the master seed and the index.
uint64_t substream_seed(uint64_t master, uint64_t index);

// Deterministic 64-bit generator. The bounded draws avoid
// std::uniform_int_distribution so output depends only on the seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  // Low `count` uniform bits, 0 <= count <= 64.
  uint64_t bits(int count) {
    if (count <= 0) return 0;
    const uint64_t draw = engine_();
    return count >= 64 ? draw : draw & ((uint64_t{1} << count) - 1);
  }

  // Uniform in [0, bound) by masked rejection.
  uint64_t below(uint64_t bound);

  bool coin() { return (engine_() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hamdisc
