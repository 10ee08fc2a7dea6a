#include "hamdisc/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "hamdisc/io.hpp"
#include "hamdisc/kernels.hpp"
#include "hamdisc/rng.hpp"

namespace hamdisc {

namespace {

bool is_positive_integer(double p, long max_value = 64) {
  return p >= 1.0 && p <= static_cast<double>(max_value) && p == std::floor(p);
}

double parse_p(const std::string& token, bool allow_infinite) {
  if (token == "inf" || token == "infinity") {
    if (!allow_infinite) {
      throw std::invalid_argument("objective: p=inf is only valid for sup forms");
    }
    return std::numeric_limits<double>::infinity();
  }
  double p = 0.0;
  try {
    p = std::stod(token);
  } catch (const std::exception&) {
    throw std::invalid_argument("objective: bad exponent '" + token + "'");
  }
  if (!(p > 0.0)) throw std::invalid_argument("objective: p must be positive");
  return p;
}

std::vector<int> parse_radius_list(const std::string& text, int n) {
  if (text == "full") {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) all[static_cast<std::size_t>(t)] = t;
    return all;
  }
  std::vector<int> radii;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) throw std::invalid_argument("radii: empty list entry");
    const auto dash = item.find('-');
    try {
      if (dash == std::string::npos) {
        radii.push_back(std::stoi(item));
      } else {
        const int lo = std::stoi(item.substr(0, dash));
        const int hi = std::stoi(item.substr(dash + 1));
        for (int t = lo; t <= hi; ++t) radii.push_back(t);
      }
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("radii: bad entry '" + item + "'");
    }
  }
  return radii;
}

std::string format_p(double p) {
  if (std::isinf(p)) return "inf";
  std::ostringstream out;
  out << p;
  return out.str();
}

std::vector<long> needed_radii(const Objective& objective, int n) {
  if (const auto* lp = std::get_if<LpObjective>(&objective)) {
    const auto support = lp->weights.support();
    return std::vector<long>(support.begin(), support.end());
  }
  if (const auto* sup = std::get_if<LinfObjective>(&objective)) {
    const auto& radii = sup->radii.radii();
    return std::vector<long>(radii.begin(), radii.end());
  }
  return {static_cast<long>((n - 1) / 2)};
}

ObjectiveValue objective_from_histograms(const Objective& objective,
                                         std::span<const std::vector<uint64_t>> hists,
                                         std::span<const long> radii, int n, uint64_t size) {
  ObjectiveValue out;
  if (const auto* lp = std::get_if<LpObjective>(&objective)) {
    const double p = lp->p;
    if (is_positive_integer(p)) {
      Rational total = 0;
      for (std::size_t i = 0; i < radii.size(); ++i) {
        total += lp->weights.weight(static_cast<int>(radii[i])) *
                 histogram_power_sum(hists[i], n, size, radii[i],
                                     static_cast<unsigned long>(p)) /
                 Rational(pow2(static_cast<unsigned long>(n)));
      }
      out.exact = total;
      out.value = std::pow(total.get_d(), 1.0 / p);
    } else {
      double total = 0.0;
      const double scale = std::exp2(-static_cast<double>(n));
      for (std::size_t i = 0; i < radii.size(); ++i) {
        total += lp->weights.weight(static_cast<int>(radii[i])).get_d() * scale *
                 histogram_power_sum_real(hists[i], n, size, radii[i], p);
      }
      out.value = std::pow(total, 1.0 / p);
    }
    return out;
  }
  if (std::holds_alternative<LinfObjective>(objective)) {
    Rational best = 0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
      best = std::max(best, histogram_sup(hists[i], n, size, radii[i]));
    }
    out.exact = best;
    out.value = best.get_d();
    return out;
  }
  const auto& hemisphere = std::get<HemisphereObjective>(objective);
  const long m = radii[0];
  if (std::isinf(hemisphere.p)) {
    out.exact = histogram_sup(hists[0], n, size, m);
    out.value = out.exact->get_d();
  } else if (is_positive_integer(hemisphere.p)) {
    Rational total = histogram_power_sum(hists[0], n, size, m,
                                         static_cast<unsigned long>(hemisphere.p)) /
                     Rational(pow2(static_cast<unsigned long>(n)));
    out.exact = total;
    out.value = std::pow(total.get_d(), 1.0 / hemisphere.p);
  } else {
    const double total = std::exp2(-static_cast<double>(n)) *
                         histogram_power_sum_real(hists[0], n, size, m, hemisphere.p);
    out.value = std::pow(total, 1.0 / hemisphere.p);
  }
  return out;
}

// Per-center ball occupancy over a subset of a small space (2^n <= 64),
// expressed as one popcount per center.
class MaskEvaluator {
 public:
  MaskEvaluator(int n, const Objective& objective)
      : n_(n), space_(uint64_t{1} << n), objective_(&objective), radii_(needed_radii(objective, n)) {
    ball_masks_.resize(radii_.size());
    for (std::size_t i = 0; i < radii_.size(); ++i) {
      auto& masks = ball_masks_[i];
      masks.assign(space_, 0);
      for (uint64_t y = 0; y < space_; ++y) {
        uint64_t ball = 0;
        for (uint64_t x = 0; x < space_; ++x) {
          if (std::popcount(x ^ y) <= radii_[i]) ball |= uint64_t{1} << x;
        }
        masks[y] = ball;
      }
    }
  }

  ObjectiveValue evaluate(uint64_t subset_mask, uint64_t size) const {
    std::vector<std::vector<uint64_t>> hists(radii_.size());
    for (std::size_t i = 0; i < radii_.size(); ++i) {
      auto& hist = hists[i];
      hist.assign(size + 1, 0);
      for (uint64_t y = 0; y < space_; ++y) {
        ++hist[static_cast<std::size_t>(std::popcount(ball_masks_[i][y] & subset_mask))];
      }
    }
    return objective_from_histograms(*objective_, hists, radii_, n_, size);
  }

 private:
  int n_;
  uint64_t space_;
  const Objective* objective_;
  std::vector<long> radii_;
  std::vector<std::vector<uint64_t>> ball_masks_;
};

// Incremental occupancy maintenance for larger spaces: point insertions and
// removals touch only the balls around the moved point.
class SwapEvaluator {
 public:
  SwapEvaluator(int n, const Objective& objective)
      : n_(n), space_(uint64_t{1} << n), objective_(&objective), radii_(needed_radii(objective, n)) {}

  void reset(const std::vector<uint64_t>& words) {
    size_ = words.size();
    counts_.assign(radii_.size(), std::vector<uint32_t>(space_, 0));
    hists_.assign(radii_.size(), std::vector<uint64_t>(size_ + 1, 0));
    for (std::size_t i = 0; i < radii_.size(); ++i) {
      const long t = radii_[i];
      if (t >= 0) {
        for (uint64_t z : words) {
          for_each_ball_member(z, t, [&](uint64_t y) { ++counts_[i][y]; });
        }
      }
      for (uint64_t y = 0; y < space_; ++y) ++hists_[i][counts_[i][y]];
    }
  }

  void apply(uint64_t word, int delta) {
    for (std::size_t i = 0; i < radii_.size(); ++i) {
      const long t = radii_[i];
      if (t < 0) continue;
      auto& counts = counts_[i];
      auto& hist = hists_[i];
      for_each_ball_member(word, t, [&](uint64_t y) {
        --hist[counts[y]];
        counts[y] = static_cast<uint32_t>(static_cast<int64_t>(counts[y]) + delta);
        ++hist[counts[y]];
      });
    }
  }

  ObjectiveValue evaluate() const {
    return objective_from_histograms(*objective_, hists_, radii_, n_, size_);
  }

 private:
  template <typename Visit>
  void for_each_ball_member(uint64_t center, long t, Visit visit) const {
    visit(center);
    const long reach = std::min<long>(t, n_);
    for (long w = 1; w <= reach; ++w) {
      const uint64_t first = (uint64_t{1} << w) - 1;
      for (uint64_t mask = first; mask < space_;) {
        visit(center ^ mask);
        const uint64_t low = mask & (~mask + 1);
        const uint64_t ripple = mask + low;
        mask = ripple | (((mask ^ ripple) >> 2) / low);
      }
    }
  }

  int n_;
  uint64_t space_;
  const Objective* objective_;
  std::vector<long> radii_;
  uint64_t size_ = 0;
  std::vector<std::vector<uint32_t>> counts_;
  std::vector<std::vector<uint64_t>> hists_;
};

// Colex successor of an increasing index tuple over {0..space-1}.
bool next_combination_colex(std::vector<uint32_t>& indices, uint64_t space) {
  const std::size_t size = indices.size();
  for (std::size_t i = 0; i < size; ++i) {
    const uint64_t limit = (i + 1 < size) ? indices[i + 1] : space;
    if (indices[i] + 1 < limit) {
      ++indices[i];
      for (std::size_t j = 0; j < i; ++j) indices[j] = static_cast<uint32_t>(j);
      return true;
    }
  }
  return false;
}

void check_search_domain(int n, uint64_t size) {
  if (n < 1 || n > kMaxSweepDimension) {
    throw infeasible_error("search: n outside the sweep dimension cap");
  }
  const uint64_t space = uint64_t{1} << n;
  if (size < 1 || size > space) throw std::invalid_argument("search: size outside [1, 2^n]");
}

std::vector<uint64_t> words_from_indices(const std::vector<uint32_t>& indices) {
  return std::vector<uint64_t>(indices.begin(), indices.end());
}

}  // namespace

Objective parse_objective(const std::string& text, int n) {
  const auto first_colon = text.find(':');
  if (first_colon == std::string::npos) {
    throw std::invalid_argument("objective: expected 'kind:...' in '" + text + "'");
  }
  const std::string kind = text.substr(0, first_colon);
  const std::string rest = text.substr(first_colon + 1);
  if (kind == "lp") {
    const auto last_colon = rest.rfind(':');
    if (last_colon == std::string::npos || last_colon == 0) {
      throw std::invalid_argument("objective: expected lp:<weights>:<p>");
    }
    const std::string weight_spec = rest.substr(0, last_colon);
    const double p = parse_p(rest.substr(last_colon + 1), false);
    return LpObjective{weights_from_spec(weight_spec, n), p};
  }
  if (kind == "linf") {
    return LinfObjective{RadiusSet(n, parse_radius_list(rest, n))};
  }
  if (kind == "hemisphere") {
    if (n % 2 == 0) throw std::invalid_argument("objective: hemisphere requires odd n");
    return HemisphereObjective{parse_p(rest, true)};
  }
  throw std::invalid_argument("objective: unknown kind '" + kind + "'");
}

std::string describe(const Objective& objective) {
  if (const auto* lp = std::get_if<LpObjective>(&objective)) {
    return "lp:p=" + format_p(lp->p);
  }
  if (const auto* sup = std::get_if<LinfObjective>(&objective)) {
    std::ostringstream out;
    out << "linf:t=";
    const auto& radii = sup->radii.radii();
    for (std::size_t i = 0; i < radii.size(); ++i) {
      if (i > 0) out << ',';
      out << radii[i];
    }
    return out.str();
  }
  return "hemisphere:p=" + format_p(std::get<HemisphereObjective>(objective).p);
}

ObjectiveValue evaluate_objective(const Objective& objective, const Code& code) {
  const std::vector<long> radii = needed_radii(objective, code.dimension());
  const auto hists = ball_count_histograms(code, radii);
  return objective_from_histograms(objective, hists, radii, code.dimension(), code.size());
}

int compare_values(const ObjectiveValue& a, const ObjectiveValue& b) {
  if (a.exact && b.exact) return cmp(*a.exact, *b.exact);
  if (a.value < b.value) return -1;
  if (a.value > b.value) return 1;
  return 0;
}

SearchResult exhaustive_min(int n, uint64_t size, const Objective& objective, uint64_t budget,
                            std::size_t minimizer_cap) {
  check_search_domain(n, size);
  const uint64_t space = uint64_t{1} << n;
  const Integer total = binomial(static_cast<unsigned long>(space), static_cast<long>(size));
  if (total > budget) {
    throw infeasible_error("exhaustive search: subset count exceeds the evaluation budget");
  }

  std::optional<MaskEvaluator> mask_eval;
  if (space <= 64) mask_eval.emplace(n, objective);

  SearchResult result;
  result.objective = describe(objective);
  result.n = n;
  result.size = size;
  result.method = "exhaustive";

  std::vector<uint32_t> indices(size);
  for (uint64_t i = 0; i < size; ++i) indices[i] = static_cast<uint32_t>(i);
  std::vector<std::vector<uint32_t>> best_indices;
  std::optional<ObjectiveValue> best;

  do {
    ObjectiveValue value;
    if (mask_eval) {
      uint64_t mask = 0;
      for (uint32_t index : indices) mask |= uint64_t{1} << index;
      value = mask_eval->evaluate(mask, size);
    } else {
      value = evaluate_objective(objective, Code(n, words_from_indices(indices)));
    }
    ++result.evaluations;
    const int order = best ? compare_values(value, *best) : -1;
    if (order < 0) {
      best = value;
      best_indices.clear();
      best_indices.push_back(indices);
      result.minimizer_count = 1;
    } else if (order == 0) {
      ++result.minimizer_count;
      if (best_indices.size() < minimizer_cap) best_indices.push_back(indices);
    }
  } while (next_combination_colex(indices, space));

  result.minimum = *best;
  result.truncated = result.minimizer_count > best_indices.size();
  result.minimizers.reserve(best_indices.size());
  for (const auto& chosen : best_indices) {
    result.minimizers.emplace_back(n, words_from_indices(chosen));
  }
  return result;
}

SearchResult local_search_min(int n, uint64_t size, const Objective& objective, uint64_t seed,
                              unsigned restarts, uint64_t max_steps) {
  check_search_domain(n, size);
  if (restarts < 1) throw std::invalid_argument("local search: restarts must be >= 1");
  const uint64_t space = uint64_t{1} << n;

  std::optional<MaskEvaluator> mask_eval;
  std::optional<SwapEvaluator> swap_eval;
  if (space <= 64) {
    mask_eval.emplace(n, objective);
  } else {
    swap_eval.emplace(n, objective);
  }

  SearchResult result;
  result.objective = describe(objective);
  result.n = n;
  result.size = size;
  result.method = "local-search";

  std::optional<ObjectiveValue> best;
  std::vector<uint64_t> best_words;

  for (unsigned restart = 0; restart < restarts; ++restart) {
    Rng rng(substream_seed(seed, restart));
    std::vector<uint64_t> words;
    std::vector<bool> member(space, false);
    words.reserve(size);
    while (words.size() < size) {
      const uint64_t draw = rng.below(space);
      if (!member[draw]) {
        member[draw] = true;
        words.push_back(draw);
      }
    }

    uint64_t mask = 0;
    if (mask_eval) {
      for (uint64_t w : words) mask |= uint64_t{1} << w;
    } else {
      swap_eval->reset(words);
    }
    ObjectiveValue current = mask_eval ? mask_eval->evaluate(mask, size) : swap_eval->evaluate();
    ++result.evaluations;

    uint64_t steps = 0;
    bool improved = true;
    while (improved && steps < max_steps) {
      improved = false;
      for (std::size_t i = 0; i < words.size() && !improved; ++i) {
        const uint64_t out = words[i];
        for (uint64_t candidate = 0; candidate < space && !improved; ++candidate) {
          if (member[candidate]) continue;
          ObjectiveValue trial;
          if (mask_eval) {
            const uint64_t trial_mask =
                (mask & ~(uint64_t{1} << out)) | (uint64_t{1} << candidate);
            trial = mask_eval->evaluate(trial_mask, size);
          } else {
            swap_eval->apply(out, -1);
            swap_eval->apply(candidate, +1);
            trial = swap_eval->evaluate();
          }
          ++result.evaluations;
          if (compare_values(trial, current) < 0) {
            words[i] = candidate;
            member[out] = false;
            member[candidate] = true;
            if (mask_eval) mask = (mask & ~(uint64_t{1} << out)) | (uint64_t{1} << candidate);
            current = trial;
            improved = true;
            ++steps;
          } else if (!mask_eval) {
            swap_eval->apply(candidate, -1);
            swap_eval->apply(out, +1);
          }
        }
      }
    }

    if (!best || compare_values(current, *best) < 0) {
      best = current;
      best_words = words;
    }
  }

  std::sort(best_words.begin(), best_words.end());
  result.minimum = *best;
  result.minimizers.emplace_back(n, best_words);
  result.minimizer_count = 1;
  return result;
}

CharacterizationReport verify_hemisphere_characterization(int n, uint64_t size, uint64_t budget) {
  check_search_domain(n, size);
  if (n % 2 == 0) throw std::invalid_argument("characterization: n must be odd");
  if (size % 2 != 0 || size == 0) throw std::invalid_argument("characterization: size must be even");
  const uint64_t space = uint64_t{1} << n;
  const Integer total = binomial(static_cast<unsigned long>(space), static_cast<long>(size));
  if (total > budget) {
    throw infeasible_error("characterization: subset count exceeds the evaluation budget");
  }
  const int m = (n - 1) / 2;
  const uint64_t full = dimension_mask(n);

  // odd-degree Krawtchouk rows as machine integers (n is small here)
  const KrawtchoukTable table(n);
  std::vector<std::vector<int64_t>> odd_rows;
  for (int k = 1; k <= n; k += 2) {
    std::vector<int64_t> row(static_cast<std::size_t>(n) + 1);
    for (int w = 0; w <= n; ++w) row[static_cast<std::size_t>(w)] = table.value(k, w).get_si();
    odd_rows.push_back(std::move(row));
  }

  std::vector<uint64_t> ball_masks;
  if (space <= 64) {
    ball_masks.assign(space, 0);
    for (uint64_t y = 0; y < space; ++y) {
      uint64_t ball = 0;
      for (uint64_t x = 0; x < space; ++x) {
        if (std::popcount(x ^ y) <= m) ball |= uint64_t{1} << x;
      }
      ball_masks[y] = ball;
    }
  }

  CharacterizationReport report;
  report.holds = true;

  std::vector<uint32_t> indices(size);
  for (uint64_t i = 0; i < size; ++i) indices[i] = static_cast<uint32_t>(i);
  std::vector<uint64_t> pair_counts(static_cast<std::size_t>(n) + 1);

  do {
    ++report.subsets;

    bool zero_discrepancy = true;
    if (!ball_masks.empty()) {
      uint64_t mask = 0;
      for (uint32_t index : indices) mask |= uint64_t{1} << index;
      for (uint64_t y = 0; y < space && zero_discrepancy; ++y) {
        zero_discrepancy =
            2 * static_cast<uint64_t>(std::popcount(ball_masks[y] & mask)) == size;
      }
    } else {
      for (uint64_t y = 0; y < space && zero_discrepancy; ++y) {
        uint64_t count = 0;
        for (uint32_t index : indices) {
          if (std::popcount(static_cast<uint64_t>(index) ^ y) <= m) ++count;
        }
        zero_discrepancy = 2 * count == size;
      }
    }

    bool antipodal = true;
    for (uint32_t index : indices) {
      const uint32_t opposite = static_cast<uint32_t>(~static_cast<uint64_t>(index) & full);
      if (!std::binary_search(indices.begin(), indices.end(), opposite)) {
        antipodal = false;
        break;
      }
    }

    std::fill(pair_counts.begin(), pair_counts.end(), 0);
    pair_counts[0] = size;
    for (std::size_t i = 0; i < indices.size(); ++i) {
      for (std::size_t j = i + 1; j < indices.size(); ++j) {
        pair_counts[static_cast<std::size_t>(
            std::popcount(static_cast<uint64_t>(indices[i] ^ indices[j])))] += 2;
      }
    }
    bool symmetric = true;
    for (int w = 0; w <= n && symmetric; ++w) {
      symmetric = pair_counts[static_cast<std::size_t>(w)] ==
                  pair_counts[static_cast<std::size_t>(n - w)];
    }

    bool odd_duals_vanish = true;
    for (const auto& row : odd_rows) {
      int64_t dot = 0;
      for (int w = 0; w <= n; ++w) {
        dot += static_cast<int64_t>(pair_counts[static_cast<std::size_t>(w)]) *
               row[static_cast<std::size_t>(w)];
      }
      if (dot != 0) {
        odd_duals_vanish = false;
        break;
      }
    }

    if (zero_discrepancy != antipodal || zero_discrepancy != symmetric ||
        zero_discrepancy != odd_duals_vanish) {
      report.holds = false;
    }
    if (zero_discrepancy) ++report.zero_count;
  } while (next_combination_colex(indices, space));

  return report;
}

}  // namespace hamdisc
