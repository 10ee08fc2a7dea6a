#include <doctest.h>

#include <cmath>

#include "hamdisc/bounds.hpp"
#include "hamdisc/constructions.hpp"
#include "hamdisc/discrepancy.hpp"
#include "hamdisc/rng.hpp"
#include "hamdisc/weights.hpp"

using namespace hamdisc;

TEST_CASE("random-choice bound values and applicability") {
  CHECK(*bound_random(2, 16).value == doctest::Approx(13.856406460551018).epsilon(1e-12));
  CHECK(*bound_random(0.5, 16).value == doctest::Approx(11.313708498984761).epsilon(1e-12));
  CHECK(*bound_random(1, 1).value == doctest::Approx(2.8284271247461903).epsilon(1e-12));

  const BoundReport checked = bound_random(2, 16, 10);
  CHECK(checked.applicable);
  const BoundReport too_big = bound_random(2, 600, 10);
  CHECK_FALSE(too_big.applicable);
  CHECK_FALSE(too_big.value.has_value());
  CHECK_THROWS_AS(bound_random(0.0, 16), std::invalid_argument);
}

TEST_CASE("jittered bound composes with the exponent") {
  // kappa = 0 reduces to the random bound
  const BoundReport flat = bound_jittered(2, 16, 0.5, 0.1);
  CHECK(*flat.value == doctest::Approx(*bound_random(2, 16).value));
  CHECK_FALSE(*flat.improves_random);

  const BoundReport improved = bound_jittered(2, uint64_t{1} << 18, 0.9, 0.1);
  CHECK(*improved.improves_random);
  CHECK(*improved.kappa == doctest::Approx(0.30896878345848628).epsilon(1e-12));
  CHECK(*improved.value == doctest::Approx(258.09568279517849).epsilon(1e-10));

  CHECK(*bound_jittered(2, 1 << 10, 0.8, 0.1).improves_random);
  CHECK_FALSE(bound_jittered(2, 100, 0.8, 0.1).applicable);  // not a power of two

  // never above the random bound
  for (double alpha : {0.55, 0.7, 0.9}) {
    for (double beta : {0.05, 0.1, 0.3}) {
      for (int log_size : {4, 8, 16}) {
        const uint64_t size = uint64_t{1} << log_size;
        CHECK(*bound_jittered(2, size, alpha, beta).value <= *bound_random(2, size).value + 1e-9);
      }
    }
  }
}

TEST_CASE("sup bounds") {
  CHECK(*bound_linf_general(3, 4).value == doctest::Approx(32.0));
  CHECK(*bound_linf_general(15, 16).value == doctest::Approx(128.0));
  CHECK_FALSE(bound_linf_general(3, 5).applicable);

  const BoundReport restricted = bound_linf_restricted(uint64_t{1} << 12, 0.75, 0.125);
  CHECK(*restricted.kappa == doctest::Approx(0.060754662766713381).epsilon(1e-12));
  CHECK(*restricted.value == doctest::Approx(1687.2224999866943).epsilon(1e-10));
  CHECK(*restricted.improves_random);

  // monotone decreasing in kappa at fixed size: raising alpha raises kappa
  const double lower_kappa = *bound_linf_restricted(1 << 12, 0.7, 0.125).value;
  const double higher_kappa = *bound_linf_restricted(1 << 12, 0.9, 0.125).value;
  CHECK(higher_kappa < lower_kappa);
}

TEST_CASE("every evaluator is monotone nondecreasing in the size") {
  for (int log_size = 2; log_size < 12; ++log_size) {
    const uint64_t small = uint64_t{1} << log_size;
    const uint64_t large = small << 1;
    CHECK(*bound_random(2, small).value <= *bound_random(2, large).value);
    CHECK(*bound_jittered(2, small, 0.8, 0.1).value <= *bound_jittered(2, large, 0.8, 0.1).value);
    CHECK(*bound_linf_general(14, small).value <= *bound_linf_general(14, large).value);
    CHECK(*bound_linf_restricted(small, 0.8, 0.1).value <=
          *bound_linf_restricted(large, 0.8, 0.1).value);
  }
}

TEST_CASE("sup discrepancy obeys the lp transfer bound") {
  // the p -> infinity limit of the prefactor is 1
  CHECK(linf_from_lp(5, 10, 1e9, 1.0) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(linf_from_lp(5, 10, 0.5, 1.0), std::invalid_argument);

  const uint64_t master = 31337;
  for (int i = 0; i < 50; ++i) {
    const int n = 3 + i % 6;  // 3..8
    Rng rng(substream_seed(master, static_cast<uint64_t>(i)));
    const uint64_t size = 1 + rng.below(uint64_t{1} << n);
    const Code code = random_uniform_code(n, size, substream_seed(master, 100 + i));

    const RadiusSet radii = RadiusSet::full(n);
    const WeightVector uniform = WeightVector::uniform(n);
    const double sup = linf_discrepancy(radii, code).get_d();
    const double transfer = linf_from_lp(radii.size(), n, 2.0,
                                         lp_discrepancy(uniform, code, 2.0).value);
    CHECK(sup <= transfer * (1 + 1e-12));
  }

  // the substitution p = n ties the transfer to the closed-form sup bound
  for (int n : {4, 8, 12}) {
    for (uint64_t size : {uint64_t{2}, uint64_t{8}}) {
      const double via_transfer = linf_from_lp(static_cast<std::size_t>(n), n,
                                               static_cast<double>(n),
                                               *bound_random(n, size).value);
      CHECK(via_transfer <= *bound_linf_general(n, size).value * (1 + 1e-12));
    }
  }
}

TEST_CASE("reference quadratic band") {
  const QuadraticBand degenerate = reference_quadratic_band(5, uint64_t{1} << 5, 1.0, 1.0);
  CHECK(degenerate.lower == 0.0);

  for (int n : {1, 4, 10, 30}) {
    const QuadraticBand band = reference_quadratic_band(n, 8, 1.0, 1.0);
    CHECK(band.lower <= band.upper);
  }

  const QuadraticBand frozen = reference_quadratic_band(10, 32, 1.0, 1.0);
  CHECK(frozen.lower == doctest::Approx(0.99010407263691103).epsilon(1e-12));
  CHECK(frozen.upper == doctest::Approx(3.1810829150682027).epsilon(1e-12));
  CHECK_THROWS_AS(reference_quadratic_band(10, 32, 0.0, 1.0), std::invalid_argument);
}
