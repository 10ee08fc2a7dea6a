#pragma once

#include <cstdint>
#include <vector>

#include "hamdisc/core.hpp"

namespace hamdisc {

// Partition of the space into cosets of the subcube supported on the first k
// coordinates. Leader i contributes the coset { leader | low : low < 2^k }.
struct CosetPartition {
  int n = 0;
  int k = 0;
  std::vector<uint64_t> leaders;  // 2^{n-k} leaders, increasing

  uint64_t low_mask() const { return (uint64_t{1} << k) - 1; }
  std::size_t coset_of(uint64_t word) const { return static_cast<std::size_t>(word >> k); }
};

CosetPartition coset_partition(int n, int k);

// size distinct uniform points, distinctness enforced by rejection.
Code random_uniform_code(int n, uint64_t size, uint64_t seed);

// One uniform point per coset; size must be a power of two with
// 2 <= size <= 2^{n-1}. Per-coset streams make the output independent of
// evaluation order.
Code jittered_code(int n, uint64_t size, uint64_t seed);

// `pairs` random antipodal pairs, optionally one extra unpaired point whose
// antipode is excluded. Requires odd n.
Code antipodal_code(int n, uint64_t pairs, bool extra_point, uint64_t seed);

// Binary Hamming code of length n = 2^m - 1: kernel of the check matrix whose
// column at position j is the m-bit binary representation of j.
Code hamming_code(int m);
Code perfect_code_complement(int m);  // the complement, 2^n (1 - 2^{-m}) points

// κ(α, β) = (1 - entropy_step(1 + β - α)) / α, clamped to 0 for α <= 1/2 + β.
double jitter_exponent(double alpha, double beta);

}  // namespace hamdisc
