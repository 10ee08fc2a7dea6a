#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hamdisc/core.hpp"
#include "hamdisc/discrepancy.hpp"
#include "hamdisc/weights.hpp"

namespace hamdisc {

struct LpObjective {
  WeightVector weights;
  double p;  // finite, > 0
};

struct LinfObjective {
  RadiusSet radii;
};

struct HemisphereObjective {
  double p;  // may be infinity
};

using Objective = std::variant<LpObjective, LinfObjective, HemisphereObjective>;

// "lp:<weights>:<p>", "linf:<radii>|linf:full", "hemisphere:<p|inf>".
// Weight selectors as in weights_from_spec; radii as a comma list with ranges
// ("0,2,4-6").
Objective parse_objective(const std::string& text, int n);
std::string describe(const Objective& objective);

// exact is the comparison key: the weighted power sum D_p^p for integer p,
// the sup value itself for the sup forms. Non-integer p compares by value.
struct ObjectiveValue {
  double value = 0.0;
  std::optional<Rational> exact;
};

ObjectiveValue evaluate_objective(const Objective& objective, const Code& code);
int compare_values(const ObjectiveValue& a, const ObjectiveValue& b);  // <0, 0, >0

struct SearchResult {
  std::string objective;
  int n = 0;
  uint64_t size = 0;
  std::string method;  // "exhaustive" | "local-search"
  ObjectiveValue minimum;
  std::vector<Code> minimizers;   // in colex order, truncated at the cap
  uint64_t minimizer_count = 0;   // total number of minimizers found
  bool truncated = false;
  uint64_t evaluations = 0;
};

inline constexpr uint64_t kDefaultSearchBudget = 10'000'000;
inline constexpr std::size_t kMinimizerCap = 100;

// Global minimum over all size-subsets, enumerated in colexicographic order
// over the word values 0..2^n-1. Throws infeasible_error when the subset
// count exceeds the budget (use local search instead).
SearchResult exhaustive_min(int n, uint64_t size, const Objective& objective,
                            uint64_t budget = kDefaultSearchBudget,
                            std::size_t minimizer_cap = kMinimizerCap);

// Best-of-restarts single-swap strict hill descent; the result is an upper
// bound on the extremal value.
SearchResult local_search_min(int n, uint64_t size, const Objective& objective, uint64_t seed,
                              unsigned restarts, uint64_t max_steps = 100'000);

struct CharacterizationReport {
  bool holds = false;        // the four characterizations agree on every subset
  uint64_t zero_count = 0;   // subsets with zero hemisphere discrepancy
  uint64_t subsets = 0;
};

// Exhaustively checks, for every size-subset of the space (odd n, even size):
// zero quadratic hemisphere discrepancy <=> closed under antipodes <=>
// symmetric distance distribution <=> vanishing odd dual coefficients.
CharacterizationReport verify_hemisphere_characterization(int n, uint64_t size,
                                                          uint64_t budget = kDefaultSearchBudget);

}  // namespace hamdisc
