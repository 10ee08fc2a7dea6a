#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hamdisc/core.hpp"
#include "hamdisc/weights.hpp"

namespace hamdisc {

// D(Z,y,t) = |B(y,t) ∩ Z| - N 2^{-n} v(t); zero for t >= n and t < 0.
Rational local_discrepancy(const Code& code, const Word& center, long t);

// hist[i][c] = number of centers y with |B(y, radii[i]) ∩ Z| = c.
// Computed by one sweep of distance shells around the code points, costing
// N·v(max radius) increments plus one pass over the 2^n centers per radius.
std::vector<std::vector<uint64_t>> ball_count_histograms(const Code& code,
                                                         std::span<const long> radii);

// Σ_y |D(y,t)|^p over all centers from a count histogram, exactly
// (|D| = |2^n c - N v(t)| / 2^n keeps everything integral).
Rational histogram_power_sum(std::span<const uint64_t> hist, int n, uint64_t size, long t,
                             unsigned long p);
double histogram_power_sum_real(std::span<const uint64_t> hist, int n, uint64_t size, long t,
                                double p);
// max_y |D(y,t)| from a count histogram.
Rational histogram_sup(std::span<const uint64_t> hist, int n, uint64_t size, long t);

// value is the real root; exact carries D_p^p when p is a positive integer
// (for the sup form, the exact value itself).
struct LpValue {
  double value = 0.0;
  std::optional<Rational> exact;
};

LpValue lp_discrepancy(const WeightVector& weights, const Code& code, double p);
Rational linf_discrepancy(const RadiusSet& radii, const Code& code);

// Radius-(n-1)/2 discrepancy for odd n; accepts p = infinity.
LpValue hemisphere_discrepancy(const Code& code, double p);

struct Spectrum {
  int n = 0;
  std::vector<Rational> values;  // length n+1
};

// A_w = (1/N) #{ordered pairs at distance w}; A_0 = 1, sum = N.
Spectrum distance_distribution(const Code& code);
// A^⊥_i = (1/N) Σ_w A_w K_i(w).
Spectrum macwilliams_transform(const Spectrum& distribution, const Integer& size);
// A_i = (N/2^n) Σ_w A^⊥_w K_i(w); inverse of the transform above.
Spectrum macwilliams_inverse(const Spectrum& dual, const Integer& size);

// Quadratic invariance identity with uniform weights, both sides evaluated
// independently: lhs by the brute-force center sweep, rhs from the pairwise
// kernel sum. They must agree exactly.
struct StolarskyUniform {
  Rational lhs;  // 2^n · n · D_2(G_1, Z)^2
  Rational rhs;  // n N^2 2^{-(n+1)} C(2n,n) - Σ_{i,j} kernel(d(z_i,z_j))
};
StolarskyUniform stolarsky_uniform(const Code& code);

// Hemisphere version: lhs by brute force, one right side through the
// ball-intersection kernel, one through its odd-degree dual expansion.
struct StolarskyHemisphere {
  Rational lhs;       // 2^n N^{-2} D_2^{(m)}(Z)^2
  Rational rhs_mu;    // (1/N) Σ_w A_w μ(w) - 2^{n-2}
  Rational rhs_dual;  // Σ_{k odd} μ̂_k A^⊥_k
};
StolarskyHemisphere stolarsky_hemisphere(const Code& code);

}  // namespace hamdisc
