#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "hamdisc/search.hpp"

using namespace hamdisc;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("objective parsing") {
  const Objective lp = parse_objective("lp:uniform:2", 5);
  CHECK(std::holds_alternative<LpObjective>(lp));
  CHECK(std::get<LpObjective>(lp).p == 2.0);

  const Objective cutoff = parse_objective("lp:cutoff:1/8:2", 16);
  CHECK(std::get<LpObjective>(cutoff).weights.support() == std::vector<int>{0, 1, 2});

  const Objective sup = parse_objective("linf:0,2,4-6", 8);
  CHECK(std::get<LinfObjective>(sup).radii.radii() == std::vector<int>{0, 2, 4, 5, 6});
  CHECK(std::get<LinfObjective>(parse_objective("linf:full", 4)).radii.size() == 4);

  const Objective hemisphere = parse_objective("hemisphere:inf", 5);
  CHECK(std::isinf(std::get<HemisphereObjective>(hemisphere).p));

  CHECK_THROWS_AS(parse_objective("lp:uniform:inf", 5), std::invalid_argument);
  CHECK_THROWS_AS(parse_objective("hemisphere:2", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_objective("nonsense", 4), std::invalid_argument);
}

TEST_CASE("exhaustive minimum over six-subsets of the 3-cube") {
  const SearchResult result = exhaustive_min(3, 6, LpObjective{WeightVector::uniform(3), 2.0});
  CHECK(result.method == "exhaustive");
  CHECK(result.evaluations == 28);
  CHECK(result.minimizer_count == 4);
  CHECK_FALSE(result.truncated);
  REQUIRE(result.minimum.exact.has_value());
  CHECK(*result.minimum.exact == Rational(1, 8));
  for (const Code& code : result.minimizers) {
    // each minimizer misses exactly one antipodal pair
    std::vector<uint64_t> missing;
    for (uint64_t x = 0; x < 8; ++x) {
      if (std::find(code.words().begin(), code.words().end(), x) == code.words().end()) {
        missing.push_back(x);
      }
    }
    REQUIRE(missing.size() == 2);
    CHECK(missing[0] == (~missing[1] & 7));
  }
}

TEST_CASE("hemisphere extremal values at n=3") {
  for (uint64_t size = 1; size <= 8; ++size) {
    for (double p : {1.0, 2.0, kInf}) {
      const SearchResult result = exhaustive_min(3, size, HemisphereObjective{p});
      REQUIRE(result.minimum.exact.has_value());
      if (size % 2 == 0) {
        CHECK(*result.minimum.exact == 0);
      } else if (std::isinf(p)) {
        CHECK(*result.minimum.exact == Rational(1, 2));
      } else {
        CHECK(*result.minimum.exact == Rational(1, pow2(static_cast<unsigned long>(p))));
      }
    }
  }
  // minimizers of the even case are exactly the antipodal pairs
  const SearchResult pairs = exhaustive_min(3, 2, HemisphereObjective{2.0});
  CHECK(pairs.minimizer_count == 4);
  const SearchResult sup = exhaustive_min(3, 3, HemisphereObjective{kInf});
  CHECK(*sup.minimum.exact == Rational(1, 2));
}

TEST_CASE("extremal value is symmetric under complementing the size") {
  for (uint64_t size = 1; size <= 4; ++size) {
    const Objective objective = LpObjective{WeightVector::uniform(3), 2.0};
    const SearchResult direct = exhaustive_min(3, size, objective);
    const SearchResult mirrored = exhaustive_min(3, 8 - size, objective);
    CHECK(*direct.minimum.exact == *mirrored.minimum.exact);
  }
}

TEST_CASE("budget overflow reports infeasible") {
  CHECK_THROWS_AS(exhaustive_min(9, 8, HemisphereObjective{2.0}, 1000), infeasible_error);
  CHECK_THROWS_AS(verify_hemisphere_characterization(9, 6, 1000), infeasible_error);
}

TEST_CASE("slow path matches the mask path") {
  // n = 7 forces the generic evaluator; cross-check a tiny case against n <= 6
  const SearchResult wide = exhaustive_min(7, 2, HemisphereObjective{2.0});
  CHECK(*wide.minimum.exact == 0);
  CHECK(wide.minimizer_count == 64);  // antipodal pairs in the 7-cube
}

TEST_CASE("local search descends to known minima") {
  const SearchResult exhaustive = exhaustive_min(3, 6, LpObjective{WeightVector::uniform(3), 2.0});
  const SearchResult local =
      local_search_min(3, 6, LpObjective{WeightVector::uniform(3), 2.0}, 17, 4);
  CHECK(local.method == "local-search");
  CHECK(*local.minimum.exact == *exhaustive.minimum.exact);

  const SearchResult hemisphere = local_search_min(5, 4, HemisphereObjective{2.0}, 23, 6);
  CHECK(*hemisphere.minimum.exact == 0);
  const auto& words = hemisphere.minimizers.front().words();
  for (uint64_t w : words) {
    CHECK(std::find(words.begin(), words.end(), ~w & 31) != words.end());
  }

  // never better than the true minimum
  for (uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const SearchResult trial = local_search_min(3, 3, HemisphereObjective{1.0}, seed, 2);
    const SearchResult truth = exhaustive_min(3, 3, HemisphereObjective{1.0});
    CHECK(compare_values(trial.minimum, truth.minimum) >= 0);
  }

  // generic-path local search (space > 64) still reaches an antipodal set
  const SearchResult wide = local_search_min(7, 4, HemisphereObjective{2.0}, 5, 3);
  CHECK(*wide.minimum.exact == 0);
}

TEST_CASE("characterization counts the zero sets") {
  const CharacterizationReport tiny = verify_hemisphere_characterization(3, 2);
  CHECK(tiny.holds);
  CHECK(tiny.zero_count == 4);
  CHECK(tiny.subsets == 28);

  const CharacterizationReport quad = verify_hemisphere_characterization(3, 4);
  CHECK(quad.holds);
  CHECK(quad.zero_count == 6);

  const CharacterizationReport wide = verify_hemisphere_characterization(5, 2);
  CHECK(wide.holds);
  CHECK(wide.zero_count == 16);

  CHECK_THROWS_AS(verify_hemisphere_characterization(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify_hemisphere_characterization(3, 3), std::invalid_argument);
}
