#include "hamdisc/constructions.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "hamdisc/rng.hpp"

namespace hamdisc {

CosetPartition coset_partition(int n, int k) {
  if (n < 2 || n > kMaxDimension) throw std::invalid_argument("coset_partition: n out of range");
  if (k < 1 || k >= n) throw std::invalid_argument("coset_partition: k outside [1, n-1]");
  if (n - k > kMaxSweepDimension) {
    throw infeasible_error("coset_partition: too many cosets to materialize");
  }
  CosetPartition partition;
  partition.n = n;
  partition.k = k;
  const uint64_t count = uint64_t{1} << (n - k);
  partition.leaders.reserve(count);
  for (uint64_t i = 0; i < count; ++i) {
    partition.leaders.push_back(i << k);
  }
  return partition;
}

Code random_uniform_code(int n, uint64_t size, uint64_t seed) {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("random code: n out of range");
  if (size < 1) throw std::invalid_argument("random code: size must be >= 1");
  if (n < 64 && size > (uint64_t{1} << n)) {
    throw infeasible_error("random code: size exceeds 2^n");
  }
  const uint64_t mask = dimension_mask(n);
  Rng rng(seed);
  std::unordered_set<uint64_t> seen;
  seen.reserve(size * 2);
  std::vector<uint64_t> words;
  words.reserve(size);
  while (words.size() < size) {
    const uint64_t draw = rng.next() & mask;
    if (seen.insert(draw).second) words.push_back(draw);
  }
  return Code(n, std::move(words));
}

Code jittered_code(int n, uint64_t size, uint64_t seed) {
  if (n < 2 || n > kMaxDimension) throw std::invalid_argument("jittered code: n out of range");
  if (!std::has_single_bit(size)) {
    throw infeasible_error("jittered code: size must be a power of two");
  }
  const int log_size = std::countr_zero(size);
  const int k = n - log_size;
  if (k < 1 || k >= n) {
    throw infeasible_error("jittered code: size must satisfy 2 <= size <= 2^{n-1}");
  }
  const CosetPartition partition = coset_partition(n, k);
  std::vector<uint64_t> words;
  words.reserve(size);
  for (uint64_t i = 0; i < size; ++i) {
    Rng stream(substream_seed(seed, i));
    words.push_back(partition.leaders[i] | stream.bits(k));
  }
  return Code(n, std::move(words));
}

Code antipodal_code(int n, uint64_t pairs, bool extra_point, uint64_t seed) {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("antipodal code: n out of range");
  if (n % 2 == 0) throw std::invalid_argument("antipodal code: n must be odd");
  if (pairs == 0 && !extra_point) {
    throw std::invalid_argument("antipodal code: empty construction");
  }
  const uint64_t half_space = n == 1 ? 1 : uint64_t{1} << (n - 1);
  const uint64_t needed = pairs + (extra_point ? 1 : 0);
  if (needed > half_space) {
    throw infeasible_error("antipodal code: capacity exceeded");
  }
  const uint64_t mask = dimension_mask(n);
  Rng rng(seed);
  std::unordered_set<uint64_t> chosen;
  chosen.reserve(needed * 2);
  std::vector<uint64_t> words;
  words.reserve(2 * pairs + (extra_point ? 1 : 0));
  // representatives are exactly the words with the top coordinate clear
  auto draw_rep = [&]() {
    uint64_t rep;
    do {
      rep = rng.below(half_space);
    } while (!chosen.insert(rep).second);
    return rep;
  };
  for (uint64_t i = 0; i < pairs; ++i) {
    const uint64_t rep = draw_rep();
    words.push_back(rep);
    words.push_back(~rep & mask);
  }
  if (extra_point) {
    const uint64_t rep = draw_rep();
    words.push_back(rng.coin() ? (~rep & mask) : rep);
  }
  return Code(n, std::move(words));
}

Code hamming_code(int m) {
  if (m < 2) throw std::invalid_argument("hamming_code: m must be >= 2");
  const int n = (1 << m) - 1;
  if (n > kMaxSweepDimension) {
    throw infeasible_error("hamming_code: length exceeds the sweep dimension cap");
  }
  const uint64_t space = uint64_t{1} << n;
  std::vector<uint64_t> words;
  words.reserve(space >> m);
  for (uint64_t x = 0; x < space; ++x) {
    unsigned syndrome = 0;
    uint64_t rest = x;
    while (rest != 0) {
      syndrome ^= static_cast<unsigned>(std::countr_zero(rest)) + 1;
      rest &= rest - 1;
    }
    if (syndrome == 0) words.push_back(x);
  }
  return Code(n, std::move(words));
}

Code perfect_code_complement(int m) { return complement_code(hamming_code(m)); }

double jitter_exponent(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("jitter_exponent: alpha outside (0, 1)");
  }
  if (!(beta > 0.0 && beta < 0.5)) {
    throw std::invalid_argument("jitter_exponent: beta outside (0, 1/2)");
  }
  if (alpha <= 0.5 + beta) return 0.0;
  return (1.0 - binary_entropy(1.0 + beta - alpha)) / alpha;
}

}  // namespace hamdisc
