#include "hamdisc/experiment.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hamdisc/constructions.hpp"
#include "hamdisc/rng.hpp"

namespace hamdisc {

namespace {

using ordered_json = nlohmann::ordered_json;

int hamming_order(int n) {
  const unsigned length = static_cast<unsigned>(n) + 1;
  if (!std::has_single_bit(length) || n < 3) {
    throw std::invalid_argument("hamming construction requires n = 2^m - 1");
  }
  return std::countr_zero(length);
}

struct ParsedObjective {
  Objective objective;
  std::optional<Rational> cutoff_beta;  // present for lp:cutoff:BETA:p
  double p = 0.0;
  bool is_lp = false;
  bool is_linf = false;
};

ParsedObjective analyze_objective(const std::string& text, int n) {
  ParsedObjective parsed{parse_objective(text, n), std::nullopt, 0.0, false, false};
  if (const auto* lp = std::get_if<LpObjective>(&parsed.objective)) {
    parsed.is_lp = true;
    parsed.p = lp->p;
    if (text.rfind("lp:cutoff:", 0) == 0) {
      const std::string rest = text.substr(10);
      const auto colon = rest.rfind(':');
      if (colon != std::string::npos) parsed.cutoff_beta = parse_rational(rest.substr(0, colon));
    }
  } else if (std::holds_alternative<LinfObjective>(parsed.objective)) {
    parsed.is_linf = true;
  } else {
    parsed.p = std::get<HemisphereObjective>(parsed.objective).p;
  }
  return parsed;
}

}  // namespace

std::string format_double_17(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

nlohmann::ordered_json rational_to_json(const std::optional<Rational>& value) {
  if (!value) return nullptr;
  ordered_json node;
  node["num"] = value->get_num().get_str();
  node["den"] = value->get_den().get_str();
  return node;
}

nlohmann::ordered_json bound_report_to_json(const BoundReport& report) {
  ordered_json node;
  node["name"] = report.name;
  ordered_json params;
  if (report.p) params["p"] = *report.p;
  if (report.size) params["size"] = *report.size;
  if (report.n) params["n"] = *report.n;
  if (report.alpha) params["alpha"] = *report.alpha;
  if (report.beta) params["beta"] = *report.beta;
  if (report.kappa) params["kappa"] = *report.kappa;
  node["params"] = params;
  node["applicable"] = report.applicable;
  if (!report.applicable) node["reason"] = report.reason;
  if (report.value) node["value"] = *report.value;
  if (report.improves_random) node["improves_random"] = *report.improves_random;
  return node;
}

Code build_construction(const std::string& name, int n, uint64_t size, uint64_t seed) {
  if (name == "random") return random_uniform_code(n, size, seed);
  if (name == "jittered") return jittered_code(n, size, seed);
  if (name == "antipodal") return antipodal_code(n, size / 2, size % 2 != 0, seed);
  if (name == "hamming" || name == "hamming-complement") {
    const int m = hamming_order(n);
    Code code = name == "hamming" ? hamming_code(m) : perfect_code_complement(m);
    if (size != 0 && size != code.size()) {
      throw std::invalid_argument("construction size does not match n=2^m-1 (got " +
                                  std::to_string(code.size()) + " words)");
    }
    return code;
  }
  throw std::invalid_argument("unknown construction '" + name + "'");
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  if (spec.trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
  if (spec.n < 1 || spec.n > kMaxDimension) {
    throw std::invalid_argument("experiment: n out of range");
  }
  const ParsedObjective parsed = analyze_objective(spec.objective, spec.n);

  std::vector<std::string> arm_names{spec.construction};
  if (!spec.versus.empty()) arm_names.push_back(spec.versus);

  ExperimentReport report;
  report.spec = spec;

  for (std::size_t arm_index = 0; arm_index < arm_names.size(); ++arm_index) {
    ArmReport arm;
    arm.construction = arm_names[arm_index];
    arm.trials.assign(spec.trials, TrialRecord{});

    const uint64_t arm_master = substream_seed(spec.seed, arm_index);
    auto run_range = [&](uint64_t begin, uint64_t end) {
      for (uint64_t t = begin; t < end; ++t) {
        TrialRecord& record = arm.trials[t];
        record.index = t;
        record.seed = substream_seed(arm_master, t);
        const Code code = build_construction(arm.construction, spec.n, spec.size, record.seed);
        const ObjectiveValue value = evaluate_objective(parsed.objective, code);
        record.value = value.value;
        record.exact = value.exact;
      }
    };

    const unsigned workers =
        std::max(1u, std::min<unsigned>(spec.threads, static_cast<unsigned>(spec.trials)));
    if (workers == 1) {
      run_range(0, spec.trials);
    } else {
      std::vector<std::thread> pool;
      const uint64_t chunk = (spec.trials + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        const uint64_t begin = w * chunk;
        const uint64_t end = std::min<uint64_t>(spec.trials, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(run_range, begin, end);
      }
      for (auto& worker : pool) worker.join();
    }

    double total = 0.0;
    arm.min = arm.trials.front().value;
    arm.max = arm.trials.front().value;
    bool all_exact = true;
    Rational exact_total = 0;
    for (const TrialRecord& record : arm.trials) {
      total += record.value;
      arm.min = std::min(arm.min, record.value);
      arm.max = std::max(arm.max, record.value);
      if (record.exact) {
        exact_total += *record.exact;
      } else {
        all_exact = false;
      }
    }
    arm.mean = total / static_cast<double>(spec.trials);
    if (all_exact) {
      Rational mean = exact_total / Rational(static_cast<unsigned long>(spec.trials));
      arm.mean_exact = mean;
    }
    report.arms.push_back(std::move(arm));
  }

  if (parsed.is_lp) {
    report.bounds.push_back(bound_random(parsed.p, spec.size, spec.n));
    const bool has_jittered_arm =
        std::any_of(arm_names.begin(), arm_names.end(),
                    [](const std::string& name) { return name == "jittered"; });
    if (parsed.cutoff_beta && has_jittered_arm && std::has_single_bit(spec.size)) {
      const double alpha =
          static_cast<double>(std::countr_zero(spec.size)) / static_cast<double>(spec.n);
      report.bounds.push_back(
          bound_jittered(parsed.p, spec.size, alpha, parsed.cutoff_beta->get_d()));
    }
  } else if (parsed.is_linf) {
    report.bounds.push_back(bound_linf_general(spec.n, spec.size));
  }
  return report;
}

std::string experiment_json(const ExperimentReport& report) {
  ordered_json root;
  root["tool"] = kToolVersion;
  ordered_json spec;
  spec["construction"] = report.spec.construction;
  if (!report.spec.versus.empty()) spec["versus"] = report.spec.versus;
  spec["n"] = report.spec.n;
  spec["size"] = report.spec.size;
  spec["objective"] = report.spec.objective;
  spec["trials"] = report.spec.trials;
  spec["seed"] = report.spec.seed;
  root["spec"] = spec;

  ordered_json arms = ordered_json::array();
  for (const ArmReport& arm : report.arms) {
    ordered_json node;
    node["construction"] = arm.construction;
    ordered_json trials = ordered_json::array();
    for (const TrialRecord& record : arm.trials) {
      ordered_json trial;
      trial["trial"] = record.index;
      trial["seed"] = record.seed;
      trial["value"] = record.value;
      trial["exact"] = rational_to_json(record.exact);
      trials.push_back(std::move(trial));
    }
    node["trials"] = std::move(trials);
    ordered_json summary;
    summary["mean"] = arm.mean;
    summary["min"] = arm.min;
    summary["max"] = arm.max;
    summary["mean_exact"] = rational_to_json(arm.mean_exact);
    node["summary"] = summary;
    arms.push_back(std::move(node));
  }
  root["arms"] = std::move(arms);

  ordered_json bounds = ordered_json::array();
  for (const BoundReport& bound : report.bounds) bounds.push_back(bound_report_to_json(bound));
  root["bounds"] = std::move(bounds);
  return root.dump(2) + "\n";
}

std::string experiment_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "arm,trial,seed,value,exact_num,exact_den\n";
  for (const ArmReport& arm : report.arms) {
    for (const TrialRecord& record : arm.trials) {
      out << arm.construction << ',' << record.index << ',' << record.seed << ','
          << format_double_17(record.value) << ',';
      if (record.exact) {
        out << record.exact->get_num().get_str() << ',' << record.exact->get_den().get_str();
      } else {
        out << ',';
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace hamdisc
