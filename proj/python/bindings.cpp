// Pybind11 surface for the hamdisc core. Exact rationals cross the boundary
// as fractions.Fraction, big integers as Python ints, codes as lists of
// coordinate strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "hamdisc/bounds.hpp"
#include "hamdisc/constructions.hpp"
#include "hamdisc/core.hpp"
#include "hamdisc/discrepancy.hpp"
#include "hamdisc/experiment.hpp"
#include "hamdisc/io.hpp"
#include "hamdisc/kernels.hpp"
#include "hamdisc/search.hpp"
#include "hamdisc/verify.hpp"
#include "hamdisc/weights.hpp"

namespace py = pybind11;
using namespace hamdisc;

namespace {

py::object fraction_type() {
  static py::object type = py::module_::import("fractions").attr("Fraction");
  return type;
}

py::object to_fraction(const Rational& value) { return fraction_type()(value.get_str()); }

py::object to_py_int(const Integer& value) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(value.get_str().c_str(), nullptr, 10));
}

Rational fraction_in(const py::object& value) {
  const std::string text = py::str(value);
  const auto parsed = parse_rational(text);
  if (!parsed) throw py::value_error("cannot interpret '" + text + "' as a rational");
  return *parsed;
}

Code code_in(const std::vector<std::string>& words) {
  std::vector<Word> parsed;
  parsed.reserve(words.size());
  for (const std::string& text : words) parsed.push_back(Word::parse(text));
  return Code::from_words(parsed);
}

std::vector<std::string> code_out(const Code& code) {
  std::vector<std::string> words;
  words.reserve(code.size());
  for (std::size_t i = 0; i < code.size(); ++i) words.push_back(code.word(i).to_string());
  return words;
}

py::list spectrum_out(const Spectrum& spectrum) {
  py::list values;
  for (const Rational& value : spectrum.values) values.append(to_fraction(value));
  return values;
}

Spectrum spectrum_in(const py::sequence& values) {
  Spectrum spectrum;
  spectrum.n = static_cast<int>(values.size()) - 1;
  for (const auto& value : values) {
    spectrum.values.push_back(fraction_in(py::reinterpret_borrow<py::object>(value)));
  }
  return spectrum;
}

py::dict lp_value_out(const LpValue& result) {
  py::dict out;
  out["value"] = result.value;
  out["exact"] = result.exact ? to_fraction(*result.exact) : py::object(py::none());
  return out;
}

py::dict bound_out(const BoundReport& report) {
  py::dict out;
  out["name"] = report.name;
  out["applicable"] = report.applicable;
  out["reason"] = report.reason;
  out["value"] = report.value ? py::object(py::float_(*report.value)) : py::object(py::none());
  if (report.kappa) out["kappa"] = *report.kappa;
  if (report.improves_random) out["improves_random"] = *report.improves_random;
  return out;
}

py::dict search_out(const SearchResult& result) {
  py::dict out;
  out["objective"] = result.objective;
  out["n"] = result.n;
  out["size"] = result.size;
  out["method"] = result.method;
  out["evaluations"] = result.evaluations;
  out["value"] = result.minimum.value;
  out["exact"] = result.minimum.exact ? to_fraction(*result.minimum.exact) : py::object(py::none());
  py::list minimizers;
  for (const Code& code : result.minimizers) minimizers.append(code_out(code));
  out["minimizers"] = minimizers;
  out["minimizer_count"] = result.minimizer_count;
  out["truncated"] = result.truncated;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact ball discrepancies of point sets in the binary Hamming space";
  m.attr("__version__") = "0.1.0";

  py::register_exception<infeasible_error>(m, "InfeasibleError");

  m.def("hamming_distance",
        [](const std::string& x, const std::string& y) {
          return hamming_distance(Word::parse(x), Word::parse(y));
        },
        py::arg("x"), py::arg("y"));
  m.def("antipode",
        [](const std::string& word) { return antipode(Word::parse(word)).to_string(); },
        py::arg("word"));
  m.def("ball_volume",
        [](int n, long t) { return to_py_int(ball_volume(n, t)); }, py::arg("n"), py::arg("t"));
  m.def("binary_entropy", &binary_entropy, py::arg("lam"));
  m.def("entropy_step", &entropy_step, py::arg("lam"));
  m.def("volume_exponent_bound", &volume_exponent_bound, py::arg("n"), py::arg("lam"));
  m.def("complement_code",
        [](const std::vector<std::string>& code) { return code_out(complement_code(code_in(code))); },
        py::arg("code"));

  m.def("krawtchouk", [](int n, int k, int x) { return to_py_int(krawtchouk(n, k, x)); },
        py::arg("n"), py::arg("k"), py::arg("x"));
  m.def("ball_intersection",
        [](int m_half, int w) { return to_py_int(ball_intersection(m_half, w)); }, py::arg("m"),
        py::arg("w"));
  m.def("stolarsky_kernel", [](int n, int w) { return to_py_int(stolarsky_kernel(n, w)); },
        py::arg("n"), py::arg("w"));
  m.def("ball_intersection_expansion", [](int m_half) {
    const BallIntersectionExpansion expansion = ball_intersection_expansion(m_half);
    py::dict out;
    out["constant"] = to_fraction(expansion.constant);
    py::list odd;
    for (const Rational& coeff : expansion.odd_coeffs) odd.append(to_fraction(coeff));
    out["odd"] = odd;
    return out;
  }, py::arg("m"));

  m.def("local_discrepancy",
        [](const std::vector<std::string>& code, const std::string& center, long t) {
          return to_fraction(local_discrepancy(code_in(code), Word::parse(center), t));
        },
        py::arg("code"), py::arg("center"), py::arg("t"));
  m.def("lp_discrepancy",
        [](const std::vector<std::string>& code, const std::string& weights, double p) {
          const Code parsed = code_in(code);
          return lp_value_out(
              lp_discrepancy(weights_from_spec(weights, parsed.dimension()), parsed, p));
        },
        py::arg("code"), py::arg("weights") = "uniform", py::arg("p") = 2.0);
  m.def("linf_discrepancy",
        [](const std::vector<std::string>& code, const std::vector<int>& radii) {
          const Code parsed = code_in(code);
          return to_fraction(linf_discrepancy(RadiusSet(parsed.dimension(), radii), parsed));
        },
        py::arg("code"), py::arg("radii"));
  m.def("hemisphere_discrepancy",
        [](const std::vector<std::string>& code, double p) {
          return lp_value_out(hemisphere_discrepancy(code_in(code), p));
        },
        py::arg("code"), py::arg("p") = 2.0);
  m.def("fold_weights",
        [](const py::sequence& weights) {
          std::vector<Rational> values;
          for (const auto& value : weights) {
            values.push_back(fraction_in(py::reinterpret_borrow<py::object>(value)));
          }
          const int n = static_cast<int>(values.size());
          const WeightVector folded = fold_weights(WeightVector(n, std::move(values)));
          py::list out;
          for (const Rational& g : folded.values()) out.append(to_fraction(g));
          return out;
        },
        py::arg("weights"));

  m.def("distance_distribution",
        [](const std::vector<std::string>& code) {
          return spectrum_out(distance_distribution(code_in(code)));
        },
        py::arg("code"));
  m.def("macwilliams_transform",
        [](const py::sequence& spectrum, unsigned long size) {
          return spectrum_out(macwilliams_transform(spectrum_in(spectrum), Integer(size)));
        },
        py::arg("spectrum"), py::arg("size"));
  m.def("macwilliams_inverse",
        [](const py::sequence& spectrum, unsigned long size) {
          return spectrum_out(macwilliams_inverse(spectrum_in(spectrum), Integer(size)));
        },
        py::arg("spectrum"), py::arg("size"));

  m.def("stolarsky_uniform",
        [](const std::vector<std::string>& code) {
          const StolarskyUniform identity = stolarsky_uniform(code_in(code));
          py::dict out;
          out["lhs"] = to_fraction(identity.lhs);
          out["rhs"] = to_fraction(identity.rhs);
          return out;
        },
        py::arg("code"));
  m.def("stolarsky_hemisphere",
        [](const std::vector<std::string>& code) {
          const StolarskyHemisphere identity = stolarsky_hemisphere(code_in(code));
          py::dict out;
          out["lhs"] = to_fraction(identity.lhs);
          out["rhs_mu"] = to_fraction(identity.rhs_mu);
          out["rhs_dual"] = to_fraction(identity.rhs_dual);
          return out;
        },
        py::arg("code"));

  m.def("random_code",
        [](int n, uint64_t size, uint64_t seed) {
          return code_out(random_uniform_code(n, size, seed));
        },
        py::arg("n"), py::arg("size"), py::arg("seed"));
  m.def("jittered_code",
        [](int n, uint64_t size, uint64_t seed) { return code_out(jittered_code(n, size, seed)); },
        py::arg("n"), py::arg("size"), py::arg("seed"));
  m.def("antipodal_code",
        [](int n, uint64_t pairs, bool extra_point, uint64_t seed) {
          return code_out(antipodal_code(n, pairs, extra_point, seed));
        },
        py::arg("n"), py::arg("pairs"), py::arg("extra_point"), py::arg("seed"));
  m.def("hamming_code", [](int order) { return code_out(hamming_code(order)); }, py::arg("m"));
  m.def("hamming_complement", [](int order) { return code_out(perfect_code_complement(order)); },
        py::arg("m"));
  m.def("jitter_exponent", &jitter_exponent, py::arg("alpha"), py::arg("beta"));

  m.def("bound_random",
        [](double p, uint64_t size, std::optional<int> n) { return bound_out(bound_random(p, size, n)); },
        py::arg("p"), py::arg("size"), py::arg("n") = py::none());
  m.def("bound_jittered",
        [](double p, uint64_t size, double alpha, double beta) {
          return bound_out(bound_jittered(p, size, alpha, beta));
        },
        py::arg("p"), py::arg("size"), py::arg("alpha"), py::arg("beta"));
  m.def("bound_linf_general",
        [](int n, uint64_t size) { return bound_out(bound_linf_general(n, size)); }, py::arg("n"),
        py::arg("size"));
  m.def("bound_linf_restricted",
        [](uint64_t size, double alpha, double beta) {
          return bound_out(bound_linf_restricted(size, alpha, beta));
        },
        py::arg("size"), py::arg("alpha"), py::arg("beta"));
  m.def("linf_from_lp", &linf_from_lp, py::arg("radius_count"), py::arg("n"), py::arg("p"),
        py::arg("lp_value"));
  m.def("reference_quadratic_band",
        [](int n, uint64_t size, double c_lower, double c_upper) {
          const QuadraticBand band = reference_quadratic_band(n, size, c_lower, c_upper);
          py::dict out;
          out["lower"] = band.lower;
          out["upper"] = band.upper;
          return out;
        },
        py::arg("n"), py::arg("size"), py::arg("c_lower") = 1.0, py::arg("c_upper") = 1.0);

  m.def("exhaustive_min",
        [](int n, uint64_t size, const std::string& objective, uint64_t budget) {
          return search_out(exhaustive_min(n, size, parse_objective(objective, n), budget));
        },
        py::arg("n"), py::arg("size"), py::arg("objective"),
        py::arg("budget") = kDefaultSearchBudget);
  m.def("local_search_min",
        [](int n, uint64_t size, const std::string& objective, uint64_t seed, unsigned restarts,
           uint64_t max_steps) {
          return search_out(
              local_search_min(n, size, parse_objective(objective, n), seed, restarts, max_steps));
        },
        py::arg("n"), py::arg("size"), py::arg("objective"), py::arg("seed"),
        py::arg("restarts") = 4, py::arg("max_steps") = 100000);
  m.def("verify_hemisphere_characterization",
        [](int n, uint64_t size, uint64_t budget) {
          const CharacterizationReport report = verify_hemisphere_characterization(n, size, budget);
          py::dict out;
          out["holds"] = report.holds;
          out["zero_count"] = report.zero_count;
          out["subsets"] = report.subsets;
          return out;
        },
        py::arg("n"), py::arg("size"), py::arg("budget") = kDefaultSearchBudget);

  m.def("run_verification",
        [](const std::string& level, unsigned threads) {
          const auto results = run_verification(
              level == "full" ? VerifyLevel::full : VerifyLevel::quick, threads);
          py::list out;
          for (const auto& result : results) {
            py::dict entry;
            entry["name"] = result.name;
            entry["passed"] = result.passed;
            entry["detail"] = result.detail;
            out.append(entry);
          }
          return out;
        },
        py::arg("level") = "quick", py::arg("threads") = 1);
}
