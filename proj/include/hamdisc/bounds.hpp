#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace hamdisc {

// Closed-form bound evaluation together with the parameters that produced it.
// Applicability conditions are checked and reported, never silently ignored;
// when a report is not applicable the value is absent.
struct BoundReport {
  std::string name;
  std::optional<double> p;
  std::optional<uint64_t> size;
  std::optional<int> n;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> kappa;
  bool applicable = true;
  std::string reason;
  std::optional<double> value;
  std::optional<bool> improves_random;  // strict improvement flag (κ > 0)
};

// 2 (p+1)^{1/2} N^{1/2} for p >= 1, 2^{3/2} N^{1/2} for 0 < p < 1.
// Applicable for N <= 2^{n-1}; pass n when known so the condition is checked.
BoundReport bound_random(double p, uint64_t size, std::optional<int> n = std::nullopt);

// Same prefactor with N^{(1-κ)/2}; requires size a power of two and weights
// supported on t <= βn.
BoundReport bound_jittered(double p, uint64_t size, double alpha, double beta);

// 8 (1+n)^{1/2} N^{1/2} for an arbitrary radius subset.
BoundReport bound_linf_general(int n, uint64_t size);

// 8 (2 + log2(N)/α)^{1/2} N^{(1-κ)/2} for radii t <= βn.
BoundReport bound_linf_restricted(uint64_t size, double alpha, double beta);

// |I|^{1/p} 2^{n/p} D_p, an upper bound on the sup discrepancy over I.
double linf_from_lp(std::size_t radius_count, int n, double p, double lp_value);

// Reference curve for the quadratic extremal discrepancy; the universal
// constants are caller-supplied (shape only).
struct QuadraticBand {
  double lower = 0.0;
  double upper = 0.0;
};
QuadraticBand reference_quadratic_band(int n, uint64_t size, double c_lower, double c_upper);

}  // namespace hamdisc
