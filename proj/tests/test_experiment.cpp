#include <doctest.h>

#include <json.hpp>

#include "hamdisc/experiment.hpp"
#include "hamdisc/verify.hpp"

using namespace hamdisc;

namespace {

ExperimentSpec small_spec() {
  ExperimentSpec spec;
  spec.construction = "random";
  spec.n = 8;
  spec.size = 16;
  spec.objective = "lp:uniform:2";
  spec.trials = 6;
  spec.seed = 42;
  return spec;
}

}  // namespace

TEST_CASE("experiment reports are deterministic and thread-invariant") {
  ExperimentSpec spec = small_spec();
  const std::string once = experiment_json(run_experiment(spec));
  const std::string twice = experiment_json(run_experiment(spec));
  CHECK(once == twice);
  spec.threads = 4;
  CHECK(experiment_json(run_experiment(spec)) == once);
}

TEST_CASE("experiment json round-trips") {
  const std::string text = experiment_json(run_experiment(small_spec()));
  const nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(text);
  CHECK(parsed.dump(2) + "\n" == text);
  CHECK(parsed["spec"]["seed"] == 42);
  CHECK(parsed["arms"].size() == 1);
  CHECK(parsed["arms"][0]["trials"].size() == 6);
  CHECK(parsed["bounds"].size() == 1);  // random-choice bound attached
  CHECK(parsed["bounds"][0]["applicable"] == true);
}

TEST_CASE("per-trial seeds allow single-trial replay") {
  const ExperimentReport report = run_experiment(small_spec());
  const TrialRecord& third = report.arms[0].trials[3];
  const Code replay = build_construction("random", 8, 16, third.seed);
  const ObjectiveValue value = evaluate_objective(parse_objective("lp:uniform:2", 8), replay);
  CHECK(value.value == third.value);
  REQUIRE((value.exact && third.exact));
  CHECK(*value.exact == *third.exact);
}

TEST_CASE("antipodal experiment values vanish exactly") {
  ExperimentSpec spec;
  spec.construction = "antipodal";
  spec.n = 7;
  spec.size = 16;  // eight pairs
  spec.objective = "hemisphere:2";
  spec.trials = 20;
  spec.seed = 9;
  const ExperimentReport report = run_experiment(spec);
  for (const TrialRecord& trial : report.arms[0].trials) {
    CHECK(trial.value == 0.0);
    REQUIRE(trial.exact.has_value());
    CHECK(*trial.exact == 0);
  }
  REQUIRE(report.arms[0].mean_exact.has_value());
  CHECK(*report.arms[0].mean_exact == 0);
}

TEST_CASE("versus arm and csv output") {
  ExperimentSpec spec = small_spec();
  spec.versus = "jittered";
  const ExperimentReport report = run_experiment(spec);
  CHECK(report.arms.size() == 2);
  CHECK(report.arms[1].construction == "jittered");

  const std::string csv = experiment_csv(report);
  CHECK(csv.rfind("arm,trial,seed,value,exact_num,exact_den\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 * 6);
}

TEST_CASE("construction selector errors") {
  CHECK_THROWS_AS(build_construction("bogus", 4, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_construction("hamming", 6, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_construction("hamming", 7, 5, 1), std::invalid_argument);
  CHECK(build_construction("hamming", 7, 16, 1).size() == 16);
  CHECK(build_construction("hamming-complement", 7, 0, 1).size() == 112);
  ExperimentSpec spec = small_spec();
  spec.trials = 0;
  CHECK_THROWS_AS(run_experiment(spec), std::invalid_argument);
}

TEST_CASE("quick verification level passes") {
  const auto results = run_verification(VerifyLevel::quick);
  CHECK(results.size() == 12);
  for (const auto& result : results) {
    INFO(result.name, ": ", result.detail);
    CHECK(result.passed);
  }
}
