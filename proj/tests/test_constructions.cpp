#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "hamdisc/constructions.hpp"
#include "hamdisc/discrepancy.hpp"
#include "hamdisc/rng.hpp"

using namespace hamdisc;

TEST_CASE("random code contract") {
  const Code first = random_uniform_code(10, 32, 1);
  const Code second = random_uniform_code(10, 32, 1);
  CHECK(first.words() == second.words());
  CHECK(first.size() == 32);
  CHECK(random_uniform_code(10, 32, 2).words() != first.words());

  const Code everything = random_uniform_code(3, 8, 99);
  std::vector<uint64_t> sorted = everything.words();
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<uint64_t>{0, 1, 2, 3, 4, 5, 6, 7});

  CHECK_THROWS_AS(random_uniform_code(3, 9, 1), infeasible_error);
  CHECK_THROWS_AS(random_uniform_code(3, 0, 1), std::invalid_argument);
}

TEST_CASE("coset partition covers the space with disjoint cosets") {
  const CosetPartition partition = coset_partition(4, 2);
  CHECK(partition.leaders.size() == 4);
  std::set<uint64_t> seen;
  for (uint64_t leader : partition.leaders) {
    for (uint64_t low = 0; low <= partition.low_mask(); ++low) {
      CHECK(seen.insert(leader | low).second);  // disjoint
    }
  }
  CHECK(seen.size() == 16);  // covers

  for (int n = 3; n <= 10; ++n) {
    for (int k = 1; k < n; ++k) {
      const CosetPartition p = coset_partition(n, k);
      CHECK(p.leaders.size() == (uint64_t{1} << (n - k)));
      // diameter of each coset is exactly k
      for (uint64_t leader : {p.leaders.front(), p.leaders.back()}) {
        int diameter = 0;
        for (uint64_t a = 0; a <= p.low_mask(); ++a) {
          for (uint64_t b = 0; b <= p.low_mask(); ++b) {
            diameter = std::max(diameter, std::popcount((leader | a) ^ (leader | b)));
          }
        }
        CHECK(diameter == k);
      }
    }
  }
  // disjoint cover of the whole space, exhaustively at n = 12
  const CosetPartition wide = coset_partition(12, 5);
  std::vector<int> hits(1 << 12, 0);
  for (uint64_t leader : wide.leaders) {
    for (uint64_t low = 0; low <= wide.low_mask(); ++low) ++hits[leader | low];
  }
  CHECK(std::all_of(hits.begin(), hits.end(), [](int count) { return count == 1; }));

  CHECK_THROWS_AS(coset_partition(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(coset_partition(4, 4), std::invalid_argument);
}

TEST_CASE("jittered code puts one point in each coset") {
  const Code code = jittered_code(4, 4, 7);
  CHECK(code.size() == 4);
  const CosetPartition partition = coset_partition(4, 2);
  for (std::size_t i = 0; i < code.size(); ++i) {
    CHECK(partition.coset_of(code.words()[i]) == i);
  }
  CHECK(jittered_code(12, 64, 3).words() == jittered_code(12, 64, 3).words());
  CHECK_THROWS_AS(jittered_code(4, 3, 1), infeasible_error);    // not a power of two
  CHECK_THROWS_AS(jittered_code(4, 16, 1), infeasible_error);   // k would be 0
  CHECK_THROWS_AS(jittered_code(4, 1, 1), infeasible_error);    // k would be n
}

TEST_CASE("straddling cosets fit inside the inflated ball") {
  for (int n : {8, 10, 14}) {
    for (int k : {2, 3, 5}) {
      const CosetPartition partition = coset_partition(n, k);
      Rng rng(substream_seed(77, static_cast<uint64_t>(n * 100 + k)));
      for (int trial = 0; trial < 4; ++trial) {
        const uint64_t y = rng.below(uint64_t{1} << n);
        for (int t = 0; t < n; ++t) {
          uint64_t straddling = 0;
          for (uint64_t leader : partition.leaders) {
            int lowest = n, highest = 0;
            for (uint64_t low = 0; low <= partition.low_mask(); ++low) {
              const int distance = std::popcount((leader | low) ^ y);
              lowest = std::min(lowest, distance);
              highest = std::max(highest, distance);
            }
            const bool inside = highest <= t;
            const bool outside = lowest > t;
            if (!inside && !outside) ++straddling;
          }
          const Integer allowed = ball_volume(n, t + k);
          CHECK(Integer(straddling) * pow2(static_cast<unsigned long>(k)) <= allowed);
        }
      }
    }
  }
}

TEST_CASE("antipodal construction") {
  const Code paired = antipodal_code(9, 5, false, 3);
  CHECK(paired.size() == 10);
  const uint64_t mask = dimension_mask(9);
  for (uint64_t w : paired.words()) {
    CHECK(std::find(paired.words().begin(), paired.words().end(), ~w & mask) !=
          paired.words().end());
  }
  for (double p : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
    CHECK(*hemisphere_discrepancy(paired, p).exact == 0);
  }

  const Code extra = antipodal_code(3, 1, true, 5);
  CHECK(extra.size() == 3);
  CHECK(*hemisphere_discrepancy(extra, 2.0).exact == Rational(1, 4));  // D_2 = 1/2

  CHECK(antipodal_code(7, 8, false, 11).words() == antipodal_code(7, 8, false, 11).words());
  CHECK_THROWS_AS(antipodal_code(4, 2, false, 1), std::invalid_argument);  // even n
  CHECK_THROWS_AS(antipodal_code(3, 4, true, 1), infeasible_error);        // capacity
}

TEST_CASE("hamming code and perfectness") {
  const Code tiny = hamming_code(2);
  CHECK(tiny.words() == std::vector<uint64_t>{0, 7});

  const Code seven = hamming_code(3);
  CHECK(seven.dimension() == 7);
  CHECK(seven.size() == 16);
  CHECK(std::find(seven.words().begin(), seven.words().end(), dimension_mask(7)) !=
        seven.words().end());  // self-complementary

  // radius-1 balls around codewords tile the space
  std::vector<int> covered(1 << 7, 0);
  for (uint64_t c : seven.words()) {
    ++covered[c];
    for (int bit = 0; bit < 7; ++bit) ++covered[c ^ (uint64_t{1} << bit)];
  }
  CHECK(std::all_of(covered.begin(), covered.end(), [](int count) { return count == 1; }));

  const Code complement = perfect_code_complement(2);
  CHECK(complement.size() == 6);
  CHECK(perfect_code_complement(3).size() == 112);
  CHECK_THROWS_AS(hamming_code(1), std::invalid_argument);
  CHECK_THROWS_AS(hamming_code(5), infeasible_error);
}

TEST_CASE("jitter exponent") {
  CHECK(jitter_exponent(0.5, 0.1) == 0.0);
  CHECK(jitter_exponent(0.9, 0.1) == doctest::Approx(0.30896878345848628).epsilon(1e-12));
  CHECK(jitter_exponent(0.8, 0.1) == doctest::Approx(0.14838637596163423).epsilon(1e-12));
  CHECK(jitter_exponent(0.75, 0.125) == doctest::Approx(0.060754662766713381).epsilon(1e-12));
  CHECK(jitter_exponent(0.7, 0.1) > 0.0);
  CHECK_THROWS_AS(jitter_exponent(1.2, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(jitter_exponent(0.5, 0.6), std::invalid_argument);
}
