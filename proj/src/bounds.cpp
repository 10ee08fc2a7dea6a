#include "hamdisc/bounds.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "hamdisc/constructions.hpp"
#include "hamdisc/core.hpp"

namespace hamdisc {

namespace {

double random_prefactor(double p) { return p >= 1.0 ? 2.0 * std::sqrt(p + 1.0) : std::exp2(1.5); }

bool size_fits_half_space(uint64_t size, int n) {
  return n >= 65 || size <= (n >= 1 ? (uint64_t{1} << (n - 1)) : 0);
}

}  // namespace

BoundReport bound_random(double p, uint64_t size, std::optional<int> n) {
  if (!(p > 0.0)) throw std::invalid_argument("bound_random: p must be positive");
  if (size < 1) throw std::invalid_argument("bound_random: size must be >= 1");
  BoundReport report;
  report.name = "random";
  report.p = p;
  report.size = size;
  report.n = n;
  if (n && !size_fits_half_space(size, *n)) {
    report.applicable = false;
    report.reason = "requires N <= 2^{n-1}";
    return report;
  }
  report.value = random_prefactor(p) * std::sqrt(static_cast<double>(size));
  return report;
}

BoundReport bound_jittered(double p, uint64_t size, double alpha, double beta) {
  if (!(p > 0.0)) throw std::invalid_argument("bound_jittered: p must be positive");
  BoundReport report;
  report.name = "jittered";
  report.p = p;
  report.size = size;
  report.alpha = alpha;
  report.beta = beta;
  if (!std::has_single_bit(size) || size < 2) {
    report.applicable = false;
    report.reason = "requires N a power of two";
    return report;
  }
  const double kappa = jitter_exponent(alpha, beta);  // validates alpha, beta
  report.kappa = kappa;
  report.improves_random = kappa > 0.0;
  report.value = random_prefactor(p) *
                 std::pow(static_cast<double>(size), (1.0 - kappa) / 2.0);
  return report;
}

BoundReport bound_linf_general(int n, uint64_t size) {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("bound_linf_general: n out of range");
  if (size < 1) throw std::invalid_argument("bound_linf_general: size must be >= 1");
  BoundReport report;
  report.name = "linf";
  report.n = n;
  report.size = size;
  if (!size_fits_half_space(size, n)) {
    report.applicable = false;
    report.reason = "requires N <= 2^{n-1}";
    return report;
  }
  report.value = 8.0 * std::sqrt(1.0 + n) * std::sqrt(static_cast<double>(size));
  return report;
}

BoundReport bound_linf_restricted(uint64_t size, double alpha, double beta) {
  BoundReport report;
  report.name = "linf-restricted";
  report.size = size;
  report.alpha = alpha;
  report.beta = beta;
  if (!std::has_single_bit(size) || size < 2) {
    report.applicable = false;
    report.reason = "requires N a power of two";
    return report;
  }
  const double kappa = jitter_exponent(alpha, beta);
  report.kappa = kappa;
  report.improves_random = kappa > 0.0;
  const double log_size = static_cast<double>(std::countr_zero(size));
  report.value = 8.0 * std::sqrt(2.0 + log_size / alpha) *
                 std::pow(static_cast<double>(size), (1.0 - kappa) / 2.0);
  return report;
}

double linf_from_lp(std::size_t radius_count, int n, double p, double lp_value) {
  if (!(p >= 1.0)) throw std::invalid_argument("linf_from_lp: p must be >= 1");
  if (radius_count < 1) throw std::invalid_argument("linf_from_lp: empty radius set");
  return std::pow(static_cast<double>(radius_count), 1.0 / p) *
         std::exp2(static_cast<double>(n) / p) * lp_value;
}

QuadraticBand reference_quadratic_band(int n, uint64_t size, double c_lower, double c_upper) {
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument("reference_quadratic_band: n out of range");
  }
  if (!(c_lower > 0.0) || !(c_upper > 0.0)) {
    throw std::invalid_argument("reference_quadratic_band: constants must be positive");
  }
  const double fill = static_cast<double>(size) * std::exp2(-static_cast<double>(n));
  QuadraticBand band;
  band.lower = c_lower * std::pow(n, -0.75) * std::sqrt(static_cast<double>(size)) *
               std::sqrt(std::max(0.0, 1.0 - fill));
  band.upper = c_upper * std::pow(n, -0.25) * std::sqrt(static_cast<double>(size));
  return band;
}

}  // namespace hamdisc
