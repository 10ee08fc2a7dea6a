// Command-line front end: constructions, discrepancy evaluation, kernel
// tables, bound evaluation, extremal search, Monte Carlo experiments, and the
// verification suite. Exit codes: 0 success, 1 usage error, 2 infeasible
// parameters, 3 verification failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamdisc/bounds.hpp"
#include "hamdisc/constructions.hpp"
#include "hamdisc/discrepancy.hpp"
#include "hamdisc/experiment.hpp"
#include "hamdisc/io.hpp"
#include "hamdisc/kernels.hpp"
#include "hamdisc/search.hpp"
#include "hamdisc/verify.hpp"

namespace {

using hamdisc::Rational;
using ordered_json = nlohmann::ordered_json;

struct GlobalOptions {
  uint64_t seed = 0;
  bool seed_given = false;
  std::string format = "json";
  bool format_given = false;
  std::string out_path;
  unsigned threads = 1;
};

void emit(const GlobalOptions& global, const std::string& text) {
  if (global.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(global.out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + global.out_path);
  out << text;
}

uint64_t require_seed(const GlobalOptions& global) {
  if (!global.seed_given) {
    throw std::invalid_argument("this command is randomized; pass --seed");
  }
  return global.seed;
}

std::string json_or_csv(const GlobalOptions& global, const ordered_json& node) {
  if (global.format == "json") return node.dump(2) + "\n";
  // flat key,value rows
  std::ostringstream out;
  out << "key,value\n";
  for (auto it = node.begin(); it != node.end(); ++it) {
    out << it.key() << ',' << (it.value().is_string() ? it.value().get<std::string>()
                                                      : it.value().dump())
        << '\n';
  }
  return out.str();
}

ordered_json exact_fields(const std::optional<Rational>& exact) {
  ordered_json node;
  node["exact_numerator"] = exact ? ordered_json(exact->get_num().get_str()) : ordered_json(nullptr);
  node["exact_denominator"] = exact ? ordered_json(exact->get_den().get_str()) : ordered_json(nullptr);
  return node;
}

int run_construct(const GlobalOptions& global, const std::string& kind, int n, uint64_t size) {
  const bool randomized = kind == "random" || kind == "jittered" || kind == "antipodal";
  const uint64_t seed = randomized ? require_seed(global) : global.seed;
  const hamdisc::Code code = hamdisc::build_construction(kind, n, size, seed);
  std::ostringstream out;
  hamdisc::write_code(out, code);
  emit(global, out.str());
  return 0;
}

int run_discrepancy_lp(const GlobalOptions& global, const std::string& code_path,
                       const std::string& weights_spec, double p) {
  const hamdisc::Code code = hamdisc::read_code_file(code_path);
  const hamdisc::WeightVector weights =
      hamdisc::weights_from_spec(weights_spec, code.dimension());
  const hamdisc::LpValue result = hamdisc::lp_discrepancy(weights, code, p);
  ordered_json node;
  node["value"] = result.value;
  node.update(exact_fields(result.exact));
  node["identity_residual"] = nullptr;
  emit(global, json_or_csv(global, node));
  return 0;
}

int run_discrepancy_linf(const GlobalOptions& global, const std::string& code_path,
                         const std::string& radii_text) {
  const hamdisc::Code code = hamdisc::read_code_file(code_path);
  const hamdisc::Objective objective =
      hamdisc::parse_objective("linf:" + radii_text, code.dimension());
  const hamdisc::ObjectiveValue result = hamdisc::evaluate_objective(objective, code);
  ordered_json node;
  node["value"] = result.value;
  node.update(exact_fields(result.exact));
  node["identity_residual"] = nullptr;
  emit(global, json_or_csv(global, node));
  return 0;
}

int run_discrepancy_stolarsky(const GlobalOptions& global, const std::string& variant,
                              const std::string& code_path) {
  const hamdisc::Code code = hamdisc::read_code_file(code_path);
  ordered_json node;
  if (variant == "uniform") {
    const hamdisc::StolarskyUniform identity = hamdisc::stolarsky_uniform(code);
    const int n = code.dimension();
    // identity lhs = 2^n n D_2^2
    const double d2 = std::sqrt(identity.lhs.get_d() / (std::exp2(n) * n));
    node["value"] = d2;
    node.update(exact_fields(identity.lhs));
    node["identity_residual"] = hamdisc::to_string(Rational(identity.lhs - identity.rhs));
  } else if (variant == "hemisphere") {
    const hamdisc::StolarskyHemisphere identity = hamdisc::stolarsky_hemisphere(code);
    const double scale = std::exp2(code.dimension()) /
                         (static_cast<double>(code.size()) * static_cast<double>(code.size()));
    node["value"] = std::sqrt(identity.lhs.get_d() / scale);
    node.update(exact_fields(identity.lhs));
    const Rational residual_mu = identity.lhs - identity.rhs_mu;
    const Rational residual_dual = identity.lhs - identity.rhs_dual;
    const Rational worst = std::max(hamdisc::rational_abs(residual_mu),
                                    hamdisc::rational_abs(residual_dual));
    node["identity_residual"] = hamdisc::to_string(worst);
    node["rhs_mu"] = hamdisc::to_string(identity.rhs_mu);
    node["rhs_dual"] = hamdisc::to_string(identity.rhs_dual);
  } else {
    throw std::invalid_argument("stolarsky variant must be uniform or hemisphere");
  }
  emit(global, json_or_csv(global, node));
  return 0;
}

std::string table_output(const GlobalOptions& global, const char* index_name,
                         const std::vector<std::pair<std::string, std::string>>& rows) {
  if (global.format == "csv") {
    std::ostringstream out;
    out << index_name << ",value\n";
    for (const auto& [key, value] : rows) out << key << ',' << value << '\n';
    return out.str();
  }
  ordered_json node;
  for (const auto& [key, value] : rows) node[key] = value;
  return node.dump(2) + "\n";
}

int run_kernels(const GlobalOptions& global, const std::string& table, int n, int m, int k) {
  std::vector<std::pair<std::string, std::string>> rows;
  if (table == "krawtchouk") {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("kernels krawtchouk needs --n and --k");
    for (int w = 0; w <= n; ++w) {
      rows.emplace_back(std::to_string(w), hamdisc::krawtchouk(n, k, w).get_str());
    }
    emit(global, table_output(global, "w", rows));
    return 0;
  }
  if (table == "ball-intersection") {
    if (m < 1) throw std::invalid_argument("kernels ball-intersection needs --m");
    const auto values = hamdisc::ball_intersection_table(m);
    for (std::size_t w = 0; w < values.size(); ++w) {
      rows.emplace_back(std::to_string(w), values[w].get_str());
    }
    emit(global, table_output(global, "w", rows));
    return 0;
  }
  if (table == "stolarsky") {
    if (n < 1) throw std::invalid_argument("kernels stolarsky needs --n");
    const auto values = hamdisc::stolarsky_kernel_table(n);
    for (std::size_t w = 0; w < values.size(); ++w) {
      rows.emplace_back(std::to_string(w), values[w].get_str());
    }
    emit(global, table_output(global, "w", rows));
    return 0;
  }
  if (table == "expansion") {
    if (m < 1) throw std::invalid_argument("kernels expansion needs --m");
    const auto expansion = hamdisc::ball_intersection_expansion(m);
    rows.emplace_back("0", hamdisc::to_string(expansion.constant));
    for (int r = 0; r <= m; ++r) {
      rows.emplace_back(std::to_string(2 * r + 1),
                        hamdisc::to_string(expansion.odd_coeffs[static_cast<std::size_t>(r)]));
    }
    emit(global, table_output(global, "k", rows));
    return 0;
  }
  if (table == "odd-matrix") {
    if (m < 1) throw std::invalid_argument("kernels odd-matrix needs --m");
    const auto matrix = hamdisc::odd_krawtchouk_matrix(m);
    for (int r = 0; r <= m; ++r) {
      for (int c = 0; c <= m; ++c) {
        rows.emplace_back(std::to_string(r) + "," + std::to_string(c),
                          matrix.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]
                              .get_str());
      }
    }
    if (global.format == "csv") {
      std::ostringstream out;
      out << "row,col,value\n";
      for (const auto& [key, value] : rows) out << key << ',' << value << '\n';
      emit(global, out.str());
    } else {
      ordered_json node;
      node["m"] = m;
      node["rank"] = hamdisc::odd_matrix_rank(matrix);
      ordered_json matrix_rows = ordered_json::array();
      for (const auto& row : matrix.rows) {
        ordered_json row_node = ordered_json::array();
        for (const auto& value : row) row_node.push_back(value.get_str());
        matrix_rows.push_back(std::move(row_node));
      }
      node["rows"] = std::move(matrix_rows);
      emit(global, node.dump(2) + "\n");
    }
    return 0;
  }
  throw std::invalid_argument("unknown kernels table '" + table + "'");
}

int run_bounds_eval(const GlobalOptions& global, const std::string& which, double p, uint64_t size,
                    int n, double alpha, double beta, double c_lower, double c_upper) {
  if (which == "band") {
    const hamdisc::QuadraticBand band = hamdisc::reference_quadratic_band(n, size, c_lower, c_upper);
    ordered_json node;
    node["name"] = "quadratic-band";
    node["note"] = "shape only; constants supplied by the caller";
    node["lower"] = band.lower;
    node["upper"] = band.upper;
    emit(global, json_or_csv(global, node));
    return 0;
  }
  hamdisc::BoundReport report;
  if (which == "random") {
    report = n > 0 ? hamdisc::bound_random(p, size, n) : hamdisc::bound_random(p, size);
  } else if (which == "jittered") {
    report = hamdisc::bound_jittered(p, size, alpha, beta);
  } else if (which == "linf") {
    report = hamdisc::bound_linf_general(n, size);
  } else if (which == "linf-restricted") {
    report = hamdisc::bound_linf_restricted(size, alpha, beta);
  } else {
    throw std::invalid_argument("unknown bound '" + which + "'");
  }
  emit(global, json_or_csv(global, hamdisc::bound_report_to_json(report)));
  return 0;
}

int run_bounds_compare(const GlobalOptions& global, const std::string& code_path) {
  const hamdisc::Code code = hamdisc::read_code_file(code_path);
  const int n = code.dimension();
  const uint64_t size = code.size();
  const hamdisc::WeightVector uniform = hamdisc::WeightVector::uniform(n);

  std::ostringstream out;
  out << "quantity,measured,bound_name,bound,applicable\n";
  for (double p : {1.0, 2.0}) {
    const double measured = hamdisc::lp_discrepancy(uniform, code, p).value;
    const hamdisc::BoundReport bound = hamdisc::bound_random(p, size, n);
    out << "D_" << p << "(G1),"
        << hamdisc::format_double_17(measured) << ',' << bound.name << ','
        << (bound.value ? hamdisc::format_double_17(*bound.value) : "") << ','
        << (bound.applicable ? "true" : "false") << '\n';
  }
  const Rational sup = hamdisc::linf_discrepancy(hamdisc::RadiusSet::full(n), code);
  const hamdisc::BoundReport sup_bound = hamdisc::bound_linf_general(n, size);
  out << "D_inf(full)," << hamdisc::format_double_17(sup.get_d()) << ',' << sup_bound.name << ','
      << (sup_bound.value ? hamdisc::format_double_17(*sup_bound.value) : "") << ','
      << (sup_bound.applicable ? "true" : "false") << '\n';
  emit(global, out.str());
  return 0;
}

ordered_json search_result_json(const hamdisc::SearchResult& result) {
  ordered_json node;
  node["objective"] = result.objective;
  node["n"] = result.n;
  node["size"] = result.size;
  node["method"] = result.method;
  node["evaluations"] = result.evaluations;
  ordered_json minimum;
  minimum["value"] = result.minimum.value;
  minimum.update(exact_fields(result.minimum.exact));
  node["minimum"] = minimum;
  node["minimizer_count"] = result.minimizer_count;
  node["truncated"] = result.truncated;
  ordered_json minimizers = ordered_json::array();
  for (const hamdisc::Code& code : result.minimizers) {
    ordered_json words = ordered_json::array();
    for (std::size_t i = 0; i < code.size(); ++i) words.push_back(code.word(i).to_string());
    minimizers.push_back(std::move(words));
  }
  node["minimizers"] = std::move(minimizers);
  return node;
}

int run_search(const GlobalOptions& global, const std::string& method, int n, uint64_t size,
               const std::string& objective_text, unsigned restarts, uint64_t max_steps,
               uint64_t budget) {
  const hamdisc::Objective objective = hamdisc::parse_objective(objective_text, n);
  hamdisc::SearchResult result;
  if (method == "exhaustive") {
    result = hamdisc::exhaustive_min(n, size, objective, budget);
  } else if (method == "local") {
    result = hamdisc::local_search_min(n, size, objective, require_seed(global), restarts,
                                       max_steps);
  } else {
    throw std::invalid_argument("search method must be exhaustive or local");
  }
  ordered_json node = search_result_json(result);
  node["objective"] = objective_text;
  emit(global, node.dump(2) + "\n");
  return 0;
}

int run_experiment_cmd(const GlobalOptions& global, hamdisc::ExperimentSpec spec) {
  spec.seed = require_seed(global);
  spec.threads = global.threads;
  const hamdisc::ExperimentReport report = hamdisc::run_experiment(spec);
  emit(global, global.format == "csv" ? hamdisc::experiment_csv(report)
                                      : hamdisc::experiment_json(report));
  return 0;
}

int run_verify(const GlobalOptions& global, const std::string& level) {
  hamdisc::VerifyLevel parsed;
  if (level == "quick") {
    parsed = hamdisc::VerifyLevel::quick;
  } else if (level == "full") {
    parsed = hamdisc::VerifyLevel::full;
  } else {
    throw std::invalid_argument("verify level must be quick or full");
  }
  const auto results = hamdisc::run_verification(parsed, global.threads);
  bool all_passed = true;
  for (const auto& result : results) all_passed = all_passed && result.passed;
  // human-readable lines by default; structured output on explicit request
  if (global.format_given && global.format == "json") {
    ordered_json nodes = ordered_json::array();
    for (const auto& result : results) {
      ordered_json node;
      node["name"] = result.name;
      node["passed"] = result.passed;
      node["detail"] = result.detail;
      nodes.push_back(std::move(node));
    }
    ordered_json root;
    root["level"] = level;
    root["passed"] = all_passed;
    root["checks"] = std::move(nodes);
    emit(global, root.dump(2) + "\n");
  } else {
    std::ostringstream out;
    for (const auto& result : results) {
      out << (result.passed ? "[PASS] " : "[FAIL] ") << result.name << " — " << result.detail
          << '\n';
    }
    out << (all_passed ? "all checks passed\n" : "some checks FAILED\n");
    emit(global, out.str());
  }
  return all_passed ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact ball discrepancies, constructions, and bounds in the binary Hamming space"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may appear after the subcommand

  GlobalOptions global;
  app.add_option("--seed", global.seed, "master seed for randomized commands")
      ->each([&](const std::string&) { global.seed_given = true; });
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->each([&](const std::string&) { global.format_given = true; });
  app.add_option("--out", global.out_path, "write output to a file instead of stdout");
  app.add_option("--threads", global.threads, "worker threads for experiments")
      ->check(CLI::PositiveNumber);

  // construct
  auto* construct = app.add_subcommand("construct", "build a point set and emit the code file");
  std::string construct_kind;
  int construct_n = 0;
  uint64_t construct_size = 0;
  construct->add_option("kind", construct_kind, "construction")
      ->required()
      ->check(CLI::IsMember({"random", "jittered", "antipodal", "hamming", "hamming-complement"}));
  construct->add_option("--n", construct_n, "dimension")->required();
  construct->add_option("--size", construct_size, "number of points");

  // discrepancy
  auto* discrepancy = app.add_subcommand("discrepancy", "evaluate discrepancies of a code file");
  discrepancy->require_subcommand(1);
  auto* lp = discrepancy->add_subcommand("lp", "weighted L_p discrepancy");
  std::string lp_code, lp_weights = "uniform";
  double lp_p = 2.0;
  lp->add_option("--code", lp_code, "code file")->required();
  lp->add_option("--weights", lp_weights, "uniform|hemisphere|cutoff:BETA|file:PATH");
  lp->add_option("--p", lp_p, "exponent (finite, positive)");
  auto* linf = discrepancy->add_subcommand("linf", "sup discrepancy over a radius set");
  std::string linf_code, linf_radii;
  linf->add_option("--code", linf_code, "code file")->required();
  linf->add_option("--radii", linf_radii, "comma list with ranges, or 'full'")->required();
  auto* stolarsky = discrepancy->add_subcommand("stolarsky", "invariance identities, both sides");
  std::string stolarsky_variant, stolarsky_code;
  stolarsky->add_option("variant", stolarsky_variant, "uniform|hemisphere")->required();
  stolarsky->add_option("--code", stolarsky_code, "code file")->required();

  // kernels
  auto* kernels = app.add_subcommand("kernels", "emit kernel tables");
  std::string kernels_table;
  int kernels_n = 0, kernels_m = 0, kernels_k = 0;
  kernels->add_option("table", kernels_table, "table name")
      ->required()
      ->check(CLI::IsMember(
          {"krawtchouk", "ball-intersection", "stolarsky", "expansion", "odd-matrix"}));
  kernels->add_option("--n", kernels_n, "dimension");
  kernels->add_option("--m", kernels_m, "half dimension (n = 2m+1)");
  kernels->add_option("--k", kernels_k, "polynomial degree");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "closed-form bounds");
  bounds->require_subcommand(1);
  auto* bounds_eval = bounds->add_subcommand("eval", "evaluate one bound");
  std::string bounds_which;
  double bounds_p = 2.0, bounds_alpha = 0.0, bounds_beta = 0.0;
  double bounds_c = 1.0, bounds_C = 1.0;
  uint64_t bounds_size = 0;
  int bounds_n = 0;
  bounds_eval->add_option("--which", bounds_which, "bound name")
      ->required()
      ->check(CLI::IsMember({"random", "jittered", "linf", "linf-restricted", "band"}));
  bounds_eval->add_option("--p", bounds_p, "exponent");
  bounds_eval->add_option("--size", bounds_size, "number of points N")->required();
  bounds_eval->add_option("--n", bounds_n, "dimension");
  bounds_eval->add_option("--alpha", bounds_alpha, "rate alpha with N = 2^{alpha n}");
  bounds_eval->add_option("--beta", bounds_beta, "radius fraction beta");
  bounds_eval->add_option("--c", bounds_c, "lower-band constant");
  bounds_eval->add_option("--C", bounds_C, "upper-band constant");
  auto* bounds_compare = bounds->add_subcommand("compare", "measured vs bound table (CSV)");
  std::string bounds_code;
  bounds_compare->add_option("--code", bounds_code, "code file")->required();

  // search
  auto* search = app.add_subcommand("search", "extremal discrepancy search");
  std::string search_method, search_objective;
  int search_n = 0;
  uint64_t search_size = 0, search_max_steps = 100000, search_budget = hamdisc::kDefaultSearchBudget;
  unsigned search_restarts = 4;
  search->add_option("method", search_method, "exhaustive|local")->required();
  search->add_option("--n", search_n, "dimension")->required();
  search->add_option("--size", search_size, "subset size")->required();
  search->add_option("--objective", search_objective, "lp:<weights>:<p> | linf:<radii> | hemisphere:<p|inf>")
      ->required();
  search->add_option("--restarts", search_restarts, "local-search restarts");
  search->add_option("--max-steps", search_max_steps, "local-search step cap");
  search->add_option("--budget", search_budget, "exhaustive evaluation budget");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Monte Carlo campaign over a construction");
  hamdisc::ExperimentSpec spec;
  experiment->add_option("--construction", spec.construction, "random|jittered|antipodal|hamming|hamming-complement")
      ->required();
  experiment->add_option("--versus", spec.versus, "optional second construction to compare");
  experiment->add_option("--n", spec.n, "dimension")->required();
  experiment->add_option("--size", spec.size, "points per trial")->required();
  experiment->add_option("--objective", spec.objective, "objective spec")->required();
  experiment->add_option("--trials", spec.trials, "number of trials")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run the identity/characterization suites");
  std::string verify_level = "quick";
  verify->add_option("--level", verify_level, "quick|full")
      ->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? 0 : 1;
  }

  try {
    if (construct->parsed()) return run_construct(global, construct_kind, construct_n, construct_size);
    if (lp->parsed()) return run_discrepancy_lp(global, lp_code, lp_weights, lp_p);
    if (linf->parsed()) return run_discrepancy_linf(global, linf_code, linf_radii);
    if (stolarsky->parsed()) {
      return run_discrepancy_stolarsky(global, stolarsky_variant, stolarsky_code);
    }
    if (kernels->parsed()) return run_kernels(global, kernels_table, kernels_n, kernels_m, kernels_k);
    if (bounds_eval->parsed()) {
      return run_bounds_eval(global, bounds_which, bounds_p, bounds_size, bounds_n, bounds_alpha,
                             bounds_beta, bounds_c, bounds_C);
    }
    if (bounds_compare->parsed()) return run_bounds_compare(global, bounds_code);
    if (search->parsed()) {
      return run_search(global, search_method, search_n, search_size, search_objective,
                        search_restarts, search_max_steps, search_budget);
    }
    if (experiment->parsed()) return run_experiment_cmd(global, spec);
    if (verify->parsed()) return run_verify(global, verify_level);
  } catch (const hamdisc::infeasible_error& error) {
    std::cerr << "infeasible: " << error.what() << '\n';
    return 2;
  } catch (const std::bad_alloc&) {
    std::cerr << "infeasible: parameters exceed the memory budget\n";
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  }
  return 0;
}
