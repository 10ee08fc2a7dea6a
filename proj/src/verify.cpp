#include "hamdisc/verify.hpp"

#include <cmath>
#include <sstream>

#include "hamdisc/constructions.hpp"
#include "hamdisc/discrepancy.hpp"
#include "hamdisc/experiment.hpp"
#include "hamdisc/io.hpp"
#include "hamdisc/kernels.hpp"
#include "hamdisc/rng.hpp"
#include "hamdisc/search.hpp"

namespace hamdisc {

namespace {

constexpr uint64_t kVerifyMaster = 20240811;

Code worked_code(std::initializer_list<const char*> words) {
  std::vector<Word> parsed;
  for (const char* text : words) parsed.push_back(Word::parse(text));
  return Code::from_words(parsed);
}

Code random_code_for_trial(uint64_t master, uint64_t index, int n, uint64_t max_size) {
  const uint64_t trial_seed = substream_seed(master, index);
  Rng rng(trial_seed);
  const uint64_t size = 1 + rng.below(max_size);
  return random_uniform_code(n, size, substream_seed(trial_seed, 1));
}

struct Failures {
  int count = 0;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++count;
      if (count <= 4) detail << (count > 1 ? "; " : "") << what;
    }
  }
};

CheckResult finish(const std::string& name, Failures& failures, const std::string& summary) {
  CheckResult result;
  result.name = name;
  result.passed = failures.count == 0;
  result.detail = result.passed ? summary
                                : summary + " [" + std::to_string(failures.count) +
                                      " failure(s): " + failures.detail.str() + "]";
  return result;
}

CheckResult check_stolarsky_uniform(bool full) {
  Failures failures;
  const Code worked = worked_code({"000", "111"});
  const StolarskyUniform base = stolarsky_uniform(worked);
  failures.expect(base.lhs == 3 && base.rhs == 3, "worked case {000,111} != 3");

  const int codes = full ? 200 : 40;
  const int max_n = full ? 10 : 8;
  const uint64_t master = substream_seed(kVerifyMaster, 1);
  for (int i = 0; i < codes; ++i) {
    const int n = 3 + i % (max_n - 2);
    const Code code = random_code_for_trial(master, static_cast<uint64_t>(i), n,
                                            uint64_t{1} << (n - 1));
    const StolarskyUniform identity = stolarsky_uniform(code);
    failures.expect(identity.lhs == identity.rhs,
                    "identity failed at n=" + std::to_string(n) +
                        " N=" + std::to_string(code.size()));
  }
  return finish("stolarsky-uniform", failures,
                std::to_string(codes) + " random codes, n in {3.." + std::to_string(max_n) +
                    "}, exact");
}

CheckResult check_stolarsky_hemisphere(bool full) {
  Failures failures;
  {
    const StolarskyHemisphere zero = stolarsky_hemisphere(worked_code({"000", "111"}));
    failures.expect(zero.lhs == 0 && zero.rhs_mu == 0 && zero.rhs_dual == 0,
                    "worked case {000,111} != 0");
    const StolarskyHemisphere one = stolarsky_hemisphere(worked_code({"000", "100"}));
    failures.expect(one.lhs == 1 && one.rhs_mu == 1 && one.rhs_dual == 1,
                    "worked case {000,100} != 1");
  }
  const int codes = full ? 200 : 60;
  const int odd_count = full ? 4 : 3;  // n in {3,5,7,9}
  const uint64_t master = substream_seed(kVerifyMaster, 2);
  for (int i = 0; i < codes; ++i) {
    const int n = 3 + 2 * (i % odd_count);
    const Code code = random_code_for_trial(master, static_cast<uint64_t>(i), n,
                                            uint64_t{1} << (n - 1));
    const StolarskyHemisphere identity = stolarsky_hemisphere(code);
    failures.expect(identity.lhs == identity.rhs_mu && identity.lhs == identity.rhs_dual,
                    "triple identity failed at n=" + std::to_string(n) +
                        " N=" + std::to_string(code.size()));
  }
  return finish("stolarsky-hemisphere", failures,
                std::to_string(codes) + " random codes, odd n up to " +
                    std::to_string(1 + 2 * odd_count) + ", exact");
}

CheckResult check_hemisphere_extremal(bool full) {
  Failures failures;
  const double infinity = std::numeric_limits<double>::infinity();
  int combos = 0;
  auto run_dimension = [&](int n, uint64_t max_size) {
    for (uint64_t size = 1; size <= max_size; ++size) {
      for (double p : {1.0, 2.0, infinity}) {
        const SearchResult result = exhaustive_min(n, size, HemisphereObjective{p});
        ++combos;
        Rational expected;
        if (size % 2 == 0) {
          expected = 0;
        } else if (std::isinf(p)) {
          expected = Rational(1, 2);
        } else {
          expected = Rational(1, pow2(static_cast<unsigned long>(p)));  // D_p^p = (1/2)^p
        }
        failures.expect(result.minimum.exact && *result.minimum.exact == expected,
                        "extremal value wrong at n=" + std::to_string(n) +
                            " N=" + std::to_string(size) + " p=" + std::to_string(p));
      }
    }
  };
  run_dimension(3, 8);
  if (full) run_dimension(5, 4);
  return finish("hemisphere-extremal-values", failures,
                std::to_string(combos) + " (n,N,p) exhaustive minimizations");
}

CheckResult check_characterization(bool full) {
  Failures failures;
  int cases = 0;
  auto run_case = [&](int n, uint64_t size, unsigned long pair_pool) {
    const CharacterizationReport report = verify_hemisphere_characterization(n, size);
    ++cases;
    failures.expect(report.holds, "equivalence failed at n=" + std::to_string(n) +
                                      " N=" + std::to_string(size));
    const Integer expected = binomial(pair_pool, static_cast<long>(size / 2));
    failures.expect(report.zero_count == expected,
                    "zero-set count at n=" + std::to_string(n) + " N=" + std::to_string(size) +
                        " is " + std::to_string(report.zero_count) + ", expected " +
                        expected.get_str());
  };
  for (uint64_t size : full ? std::vector<uint64_t>{2, 4, 6, 8} : std::vector<uint64_t>{2, 4}) {
    run_case(3, size, 4);
  }
  if (full) {
    run_case(5, 2, 16);
    run_case(5, 4, 16);
  }
  return finish("zero-discrepancy-characterization", failures,
                std::to_string(cases) + " exhaustive four-way equivalences");
}

CheckResult check_kernel_algebra(bool full) {
  Failures failures;
  const int max_n = full ? 15 : 9;
  const int max_m = full ? 7 : 4;

  for (int n = 1; n <= max_n; ++n) {
    const KrawtchoukTable table(n);
    for (int k = 0; k <= n; ++k) {
      for (int x = 0; x <= n; ++x) {
        failures.expect(table.value(k, x) == krawtchouk(n, k, x),
                        "recurrence/sum mismatch at n=" + std::to_string(n));
        const Integer sym = (k % 2 == 0) ? table.value(k, n - x) : Integer(-table.value(k, n - x));
        failures.expect(table.value(k, x) == sym, "symmetry failed at n=" + std::to_string(n));
      }
    }
    // full-range orthogonality for all degree pairs
    for (int k = 0; k <= n; ++k) {
      for (int j = 0; j <= n; ++j) {
        Integer dot = 0;
        for (int w = 0; w <= n; ++w) {
          dot += table.value(k, w) * table.value(j, w) * binomial(static_cast<unsigned long>(n), w);
        }
        const Integer expected =
            j == k ? Integer(binomial(static_cast<unsigned long>(n), k) *
                             pow2(static_cast<unsigned long>(n)))
                   : Integer(0);
        failures.expect(dot == expected, "full-range orthogonality failed at n=" + std::to_string(n));
      }
    }
    // half-range orthogonality for odd degrees, odd n
    if (n % 2 == 1) {
      const int m = (n - 1) / 2;
      for (int k = 1; k <= n; k += 2) {
        for (int j = 1; j <= n; j += 2) {
          Integer dot = 0;
          for (int w = 0; w <= m; ++w) {
            dot += table.value(k, w) * table.value(j, w) *
                   binomial(static_cast<unsigned long>(n), w);
          }
          const Integer expected =
              j == k ? Integer(pow2(static_cast<unsigned long>(n - 1)) *
                               binomial(static_cast<unsigned long>(n), k))
                     : Integer(0);
          failures.expect(dot == expected,
                          "half-range orthogonality failed at n=" + std::to_string(n));
        }
      }
    }
  }

  for (int m = 1; m <= max_m; ++m) {
    const int n = 2 * m + 1;
    const KrawtchoukTable table(n);
    const BallIntersectionExpansion expansion = ball_intersection_expansion(m);
    failures.expect(expansion.constant == Rational(pow2(static_cast<unsigned long>(n - 2))),
                    "expansion constant wrong at m=" + std::to_string(m));
    for (const Rational& coeff : expansion.odd_coeffs) {
      failures.expect(coeff > 0, "nonpositive expansion coefficient at m=" + std::to_string(m));
    }
    for (int w = 0; w <= n; ++w) {
      failures.expect(evaluate_expansion(expansion, table, w) ==
                          Rational(ball_intersection(m, w)),
                      "expansion reconstruction failed at m=" + std::to_string(m));
    }
    const OddKrawtchoukMatrix matrix = odd_krawtchouk_matrix(m);
    failures.expect(odd_matrix_diagonal_identity(matrix),
                    "diagonal identity failed at m=" + std::to_string(m));
    failures.expect(odd_matrix_rank(matrix) == m + 1, "rank != m+1 at m=" + std::to_string(m));
  }
  return finish("kernel-algebra", failures,
                "tables to n=" + std::to_string(max_n) + ", expansions to m=" +
                    std::to_string(max_m) + ", exact");
}

CheckResult check_macwilliams(bool full) {
  Failures failures;
  const int codes = full ? 100 : 30;
  const uint64_t master = substream_seed(kVerifyMaster, 6);
  for (int i = 0; i < codes; ++i) {
    const int n = 3 + i % 8;  // 3..10
    const Code code = random_code_for_trial(master, static_cast<uint64_t>(i), n,
                                            (uint64_t{1} << n) - 1);
    const Integer size(static_cast<unsigned long>(code.size()));
    const Spectrum distribution = distance_distribution(code);
    const Spectrum dual = macwilliams_transform(distribution, size);
    failures.expect(dual.values[0] == 1, "dual A_0 != 1 at n=" + std::to_string(n));
    const Spectrum back = macwilliams_inverse(dual, size);
    bool equal = true;
    for (int w = 0; w <= n; ++w) {
      equal = equal &&
              back.values[static_cast<std::size_t>(w)] ==
                  distribution.values[static_cast<std::size_t>(w)];
    }
    failures.expect(equal, "round trip failed at n=" + std::to_string(n));
  }
  return finish("macwilliams-involution", failures,
                std::to_string(codes) + " random codes, round trip exact");
}

CheckResult check_perfect_code_minimizer(bool) {
  Failures failures;
  const SearchResult result = exhaustive_min(3, 6, LpObjective{WeightVector::uniform(3), 2.0});
  failures.expect(result.evaluations == 28, "expected 28 six-subsets");
  failures.expect(result.minimizer_count == 4, "expected exactly 4 minimizers");
  failures.expect(result.minimum.exact && *result.minimum.exact == Rational(1, 8),
                  "minimum D_2^2 != 1/8");

  std::vector<std::vector<uint64_t>> expected;
  for (uint64_t y : {uint64_t{0}, uint64_t{1}, uint64_t{2}, uint64_t{3}}) {
    std::vector<uint64_t> words;
    for (uint64_t x = 0; x < 8; ++x) {
      if (x != y && x != (~y & 7)) words.push_back(x);
    }
    expected.push_back(std::move(words));
  }
  for (const auto& want : expected) {
    bool found = false;
    for (const Code& code : result.minimizers) found = found || code.words() == want;
    failures.expect(found, "missing minimizer of the form X\\{y,antipode}");
  }
  const Code complement = perfect_code_complement(2);
  bool has_complement = false;
  for (const Code& code : result.minimizers) {
    has_complement = has_complement || code.words() == complement.words();
  }
  failures.expect(has_complement, "Hamming-code complement not among minimizers");
  return finish("perfect-code-minimizer", failures,
                "all 28 six-subsets of the 3-cube, 4 minimizers");
}

CheckResult check_symmetry_identities(bool full) {
  Failures failures;
  const int codes = full ? 50 : 20;
  const uint64_t master = substream_seed(kVerifyMaster, 8);
  for (int i = 0; i < codes; ++i) {
    const int n = 3 + i % 6;  // 3..8
    const uint64_t trial_seed = substream_seed(master, static_cast<uint64_t>(i));
    Rng rng(trial_seed);
    const uint64_t size = 1 + rng.below((uint64_t{1} << n) - 1);  // keep complement nonempty
    const Code code = random_uniform_code(n, size, substream_seed(trial_seed, 1));
    const Code complement = complement_code(code);

    const WeightVector uniform = WeightVector::uniform(n);
    for (double p : {1.0, 2.0}) {
      const LpValue direct = lp_discrepancy(uniform, code, p);
      const LpValue mirrored = lp_discrepancy(uniform, complement, p);
      failures.expect(direct.exact && mirrored.exact && *direct.exact == *mirrored.exact,
                      "complement identity failed at n=" + std::to_string(n));
    }

    // random exact weights
    std::vector<Rational> raw(static_cast<std::size_t>(n));
    Integer total = 0;
    for (int t = 0; t < n; ++t) {
      const unsigned long a = static_cast<unsigned long>(rng.below(9) + (t == 0 ? 1 : 0));
      raw[static_cast<std::size_t>(t)] = Rational(a);
      total += a;
    }
    for (Rational& g : raw) {
      g /= Rational(total);
    }
    const WeightVector weights(n, std::move(raw));
    const LpValue plain = lp_discrepancy(weights, code, 2.0);
    const LpValue folded = lp_discrepancy(fold_weights(weights), code, 2.0);
    failures.expect(plain.exact && folded.exact && *plain.exact == *folded.exact,
                    "folding identity failed at n=" + std::to_string(n));

    const double d1 = lp_discrepancy(uniform, code, 1.0).value;
    const double d2 = lp_discrepancy(uniform, code, 2.0).value;
    const double d4 = lp_discrepancy(uniform, code, 4.0).value;
    failures.expect(d1 <= d2 + 1e-12, "monotonicity D_1 <= D_2 failed");
    failures.expect(d2 <= d4 + 1e-12, "monotonicity D_2 <= D_4 failed");
  }
  return finish("symmetry-identities", failures,
                std::to_string(codes) +
                    " random codes: complement, folding (exact), monotonicity (1e-12)");
}

CheckResult check_expectation_bound(bool full) {
  Failures failures;
  const int trials = full ? 1000 : 200;
  const int n = 10;
  const uint64_t size = 32;
  const uint64_t master = substream_seed(kVerifyMaster, 9);
  const WeightVector uniform = WeightVector::uniform(n);
  const RadiusSet all_radii = RadiusSet::full(n);
  const double linf_bound = 8.0 * std::sqrt(1.0 + n) * std::sqrt(static_cast<double>(size));

  std::vector<double> power_means[2];
  power_means[0].reserve(trials);
  power_means[1].reserve(trials);
  for (int i = 0; i < trials; ++i) {
    const Code code = random_uniform_code(n, size, substream_seed(master, static_cast<uint64_t>(i)));
    const LpValue d1 = lp_discrepancy(uniform, code, 1.0);
    const LpValue d2 = lp_discrepancy(uniform, code, 2.0);
    power_means[0].push_back(d1.exact->get_d());
    power_means[1].push_back(d2.exact->get_d());
    const Rational sup = linf_discrepancy(all_radii, code);
    failures.expect(sup.get_d() <= linf_bound, "individual sup bound violated");
  }
  const double bounds[2] = {16.0, 384.0};  // 2^p (p+1)^{p/2} N^{p/2} at N=32
  for (int pi = 0; pi < 2; ++pi) {
    double mean = 0.0;
    for (double v : power_means[pi]) mean += v;
    mean /= trials;
    double variance = 0.0;
    for (double v : power_means[pi]) variance += (v - mean) * (v - mean);
    variance /= (trials - 1);
    const double margin = 3.0 * std::sqrt(variance / trials);
    failures.expect(mean + margin < bounds[pi],
                    "mean D_" + std::to_string(pi + 1) + "^p too close to the bound");
  }
  return finish("random-expectation-bound", failures,
                std::to_string(trials) + " iid codes at (n=10, N=32), 3-sigma margin");
}

CheckResult check_jittered_improvement(bool full) {
  Failures failures;
  const int n = full ? 16 : 12;
  const uint64_t size = full ? 4096 : 512;  // alpha = 0.75 either way
  const int trials = full ? 50 : 25;
  const WeightVector weights = WeightVector::cutoff(n, Rational(1, 8));
  const uint64_t master = substream_seed(kVerifyMaster, 10);

  double jittered_mean = 0.0;
  double random_mean = 0.0;
  for (int i = 0; i < trials; ++i) {
    const uint64_t seed_j = substream_seed(master, static_cast<uint64_t>(i));
    const uint64_t seed_r = substream_seed(master, static_cast<uint64_t>(trials + i));
    jittered_mean += lp_discrepancy(weights, jittered_code(n, size, seed_j), 2.0).value;
    random_mean += lp_discrepancy(weights, random_uniform_code(n, size, seed_r), 2.0).value;
  }
  jittered_mean /= trials;
  random_mean /= trials;
  failures.expect(jittered_mean < random_mean,
                  "jittered mean " + std::to_string(jittered_mean) + " not below iid mean " +
                      std::to_string(random_mean));
  std::ostringstream summary;
  summary << trials << " trials at n=" << n << ", N=" << size << ": jittered mean "
          << jittered_mean << " vs iid mean " << random_mean;
  return finish("jittered-improvement", failures, summary.str());
}

CheckResult check_determinism(bool, unsigned threads) {
  Failures failures;
  ExperimentSpec spec;
  spec.construction = "random";
  spec.versus = "jittered";
  spec.n = 10;
  spec.size = 32;
  spec.objective = "lp:uniform:2";
  spec.trials = 8;
  spec.seed = 7;
  spec.threads = 1;
  const std::string first = experiment_json(run_experiment(spec));
  const std::string second = experiment_json(run_experiment(spec));
  failures.expect(first == second, "same spec produced different reports");
  spec.threads = threads > 1 ? threads : 3;
  const std::string threaded = experiment_json(run_experiment(spec));
  failures.expect(first == threaded, "thread count changed the report bytes");
  return finish("determinism", failures, "byte-identical reports across reruns and thread counts");
}

CheckResult check_mutation_sensitivity(bool) {
  Failures failures;
  const Code code = worked_code({"000", "100"});
  const StolarskyUniform identity = stolarsky_uniform(code);
  failures.expect(identity.lhs == identity.rhs, "unperturbed identity does not hold");

  // Recompute the right side with the kernel perturbed at w=1; the identity
  // must detect the mutation.
  auto kernel = stolarsky_kernel_table(3);
  kernel[1] += 1;
  Integer pair_sum = 0;
  const auto& words = code.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i != j) pair_sum += kernel[static_cast<std::size_t>(
                      std::popcount(words[i] ^ words[j]))];
    }
  }
  Rational constant(Integer(3 * 4) * binomial(6, 3), pow2(4));
  constant.canonicalize();
  const Rational mutated_rhs = constant - Rational(pair_sum);
  failures.expect(identity.lhs != mutated_rhs, "perturbed kernel went undetected");
  return finish("mutation-sensitivity", failures,
                "perturbed pair kernel breaks the quadratic identity");
}

}  // namespace

std::vector<CheckResult> run_verification(VerifyLevel level, unsigned threads) {
  const bool full = level == VerifyLevel::full;
  std::vector<CheckResult> results;
  results.push_back(check_stolarsky_uniform(full));
  results.push_back(check_stolarsky_hemisphere(full));
  results.push_back(check_hemisphere_extremal(full));
  results.push_back(check_characterization(full));
  results.push_back(check_kernel_algebra(full));
  results.push_back(check_macwilliams(full));
  results.push_back(check_perfect_code_minimizer(full));
  results.push_back(check_symmetry_identities(full));
  results.push_back(check_expectation_bound(full));
  results.push_back(check_jittered_improvement(full));
  results.push_back(check_determinism(full, threads));
  results.push_back(check_mutation_sensitivity(full));
  return results;
}

std::vector<CheckResult> run_acceptance(unsigned threads) {
  std::vector<CheckResult> results = run_verification(VerifyLevel::full, threads);
  results.pop_back();  // the mutation self-test is not an acceptance criterion
  return results;
}

}  // namespace hamdisc
