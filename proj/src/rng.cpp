#include "hamdisc/rng.hpp"

#include <bit>

namespace hamdisc {

uint64_t splitmix64_next(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t substream_seed(uint64_t master, uint64_t index) {
  uint64_t state = master ^ (0x9e3779b97f4a7c15ULL * (index + 1));
  return splitmix64_next(state);
}

uint64_t Rng::below(uint64_t bound) {
  if (bound <= 1) return 0;
  const uint64_t mask = ~uint64_t{0} >> std::countl_zero(bound - 1);
  uint64_t draw;
  do {
    draw = engine_() & mask;
  } while (draw >= bound);
  return draw;
}

}  // namespace hamdisc
