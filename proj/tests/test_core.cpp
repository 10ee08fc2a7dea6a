#include <doctest.h>

#include <bit>

#include "hamdisc/core.hpp"
#include "hamdisc/io.hpp"
#include "hamdisc/rng.hpp"

#include <sstream>

using namespace hamdisc;

TEST_CASE("word parse and round trip") {
  const Word word = Word::parse("0101");
  CHECK(word.dimension() == 4);
  CHECK(word.to_string() == "0101");
  CHECK_THROWS_AS(Word::parse("01x1"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse(""), std::invalid_argument);
}

TEST_CASE("hamming distance basics") {
  CHECK(hamming_distance(Word::parse("000"), Word::parse("000")) == 0);
  CHECK(hamming_distance(Word::parse("000"), Word::parse("111")) == 3);
  CHECK(hamming_distance(Word::parse("0101"), Word::parse("0011")) == 2);
  CHECK_THROWS_AS(hamming_distance(Word::parse("00"), Word::parse("000")),
                  std::invalid_argument);
}

TEST_CASE("metric properties, exhaustive for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const uint64_t space = uint64_t{1} << n;
    for (uint64_t x = 0; x < space; ++x) {
      for (uint64_t y = 0; y < space; ++y) {
        const int dxy = std::popcount(x ^ y);
        CHECK(dxy >= 0);
        CHECK(dxy == std::popcount(y ^ x));
        CHECK((dxy == 0) == (x == y));
        for (uint64_t z = 0; z < space; ++z) {
          CHECK(dxy <= std::popcount(x ^ z) + std::popcount(z ^ y));
        }
      }
    }
  }
}

TEST_CASE("antipode is an involution and preserves distances") {
  CHECK(antipode(Word::parse("000")).to_string() == "111");
  CHECK(antipode(Word::parse("0101")).to_string() == "1010");
  for (int n = 1; n <= 6; ++n) {
    const uint64_t space = uint64_t{1} << n;
    const uint64_t mask = dimension_mask(n);
    for (uint64_t x = 0; x < space; ++x) {
      CHECK(antipode(antipode(Word(x, n))).bits() == x);
      for (uint64_t y = 0; y < space; ++y) {
        CHECK(std::popcount((~x & mask) ^ (~y & mask)) == std::popcount(x ^ y));
      }
    }
  }
}

TEST_CASE("ball-complement identity B(y,t) = X \\ B(antipode(y), n-1-t)") {
  for (int n = 1; n <= 6; ++n) {
    const uint64_t space = uint64_t{1} << n;
    const uint64_t mask = dimension_mask(n);
    for (uint64_t y = 0; y < space; ++y) {
      for (int t = 0; t <= n - 1; ++t) {
        for (uint64_t z = 0; z < space; ++z) {
          const bool inside = std::popcount(z ^ y) <= t;
          const bool opposite = std::popcount(z ^ (~y & mask)) <= n - 1 - t;
          CHECK(inside == !opposite);
        }
      }
    }
  }
}

TEST_CASE("ball volume conventions") {
  CHECK(ball_volume(3, 1) == 4);
  CHECK(ball_volume(3, -1) == 0);
  CHECK(ball_volume(3, 7) == 8);
  for (int m = 1; m <= 6; ++m) {
    const int n = 2 * m + 1;
    CHECK(ball_volume(n, m) == pow2(static_cast<unsigned long>(n - 1)));
  }
  for (int n = 1; n <= 30; ++n) {
    CHECK(ball_volume(n, n) == pow2(static_cast<unsigned long>(n)));
  }
}

TEST_CASE("entropy and the volume exponent bound") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.2) == doctest::Approx(0.72192809488736235).epsilon(1e-9));
  CHECK(entropy_step(0.5) == 1.0);
  CHECK(entropy_step(0.75) == 1.0);
  CHECK_THROWS_AS(binary_entropy(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(entropy_step(1.5), std::invalid_argument);

  CHECK(volume_exponent_bound(10, 0.5) == doctest::Approx(1024.0));
  CHECK(volume_exponent_bound(20, 0.2) == doctest::Approx(22204.460492503131).epsilon(1e-12));

  // v(floor(lambda n)) <= 2^{n H(lambda)} across a grid
  for (int n = 1; n <= 25; ++n) {
    for (int tenth = 0; tenth <= 10; ++tenth) {
      const double lambda = tenth / 10.0;
      const long t = static_cast<long>(lambda * n + 1e-9);
      CHECK(ball_volume(n, t).get_d() <= volume_exponent_bound(n, lambda) * (1 + 1e-12));
    }
  }
}

TEST_CASE("code validation and complement") {
  CHECK_THROWS_AS(Code(3, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Code(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(Code(3, {9}), std::invalid_argument);

  const Code pair(3, {0, 7});
  const Code rest = complement_code(pair);
  CHECK(rest.size() == 6);
  for (uint64_t w : rest.words()) {
    const int weight = std::popcount(w);
    CHECK((weight == 1 || weight == 2));
  }
  const Code back = complement_code(rest);
  CHECK(back.words() == std::vector<uint64_t>{0, 7});

  std::vector<uint64_t> seven;
  for (uint64_t x = 1; x < 8; ++x) seven.push_back(x);
  CHECK(complement_code(Code(3, seven)).words() == std::vector<uint64_t>{0});
  CHECK_THROWS_AS(complement_code(Code(1, {0, 1})), std::invalid_argument);
}

TEST_CASE("code file format round trip and errors") {
  const Code code(4, {0, 5, 10});
  std::ostringstream out;
  write_code(out, code);
  std::istringstream in(out.str());
  const Code parsed = read_code(in);
  CHECK(parsed.dimension() == 4);
  CHECK(parsed.words() == code.words());

  std::istringstream duplicate("n=3\n000\n000\n");
  CHECK_THROWS_AS(read_code(duplicate), std::invalid_argument);
  std::istringstream mismatch("n=3\n0000\n");
  CHECK_THROWS_AS(read_code(mismatch), std::invalid_argument);
  std::istringstream missing("000\n111\n");
  CHECK_THROWS_AS(read_code(missing), std::invalid_argument);
}

TEST_CASE("rational parsing") {
  CHECK(*parse_rational("3/4") == Rational(3, 4));
  CHECK(*parse_rational("-2") == -2);
  CHECK(*parse_rational("0.125") == Rational(1, 8));
  CHECK(*parse_rational("-0.5") == Rational(-1, 2));
  CHECK(*parse_rational("6/8") == Rational(3, 4));  // canonicalized
  CHECK_FALSE(parse_rational("1/0").has_value());
  CHECK_FALSE(parse_rational("abc").has_value());
  CHECK_FALSE(parse_rational("").has_value());
  CHECK_FALSE(parse_rational("1.2.3").has_value());
}

TEST_CASE("weight file format") {
  std::istringstream good("n=3\n1/2\n0.25\n1/4\n");
  const WeightVector weights = read_weights(good);
  CHECK(weights.weight(0) == Rational(1, 2));
  CHECK(weights.weight(1) == Rational(1, 4));
  CHECK(weights.weight(2) == Rational(1, 4));

  std::istringstream short_file("n=3\n1/2\n1/2\n");
  CHECK_THROWS_AS(read_weights(short_file), std::invalid_argument);
  std::istringstream bad_sum("n=2\n1/2\n1/3\n");
  CHECK_THROWS_AS(read_weights(bad_sum), std::invalid_argument);
  std::istringstream negative("n=2\n3/2\n-1/2\n");
  CHECK_THROWS_AS(read_weights(negative), std::invalid_argument);
  std::istringstream garbage("n=2\n1/2\nhalf\n");
  CHECK_THROWS_AS(read_weights(garbage), std::invalid_argument);
}

TEST_CASE("seed mixing function is frozen") {
  // replayability of published reports depends on these values never changing
  CHECK(substream_seed(0, 0) == 7960286522194355700ULL);
  CHECK(substream_seed(7, 3) == 13015481187462834606ULL);
  CHECK(substream_seed(20240811, 11) == 12623139217436444312ULL);
  CHECK(substream_seed(~uint64_t{0}, 1) == 15999695513772384452ULL);
}
