#include "hamdisc/discrepancy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "hamdisc/kernels.hpp"

namespace hamdisc {

namespace {

// Next mask with the same popcount (Gosper).
uint64_t next_same_weight(uint64_t v) {
  const uint64_t c = v & (~v + 1);
  const uint64_t r = v + c;
  return r | (((v ^ r) >> 2) / c);
}

bool is_positive_integer(double p, long max_value = 64) {
  return p >= 1.0 && p <= static_cast<double>(max_value) && p == std::floor(p);
}

}  // namespace

Rational histogram_power_sum(std::span<const uint64_t> hist, int n, uint64_t size, long t,
                             unsigned long p) {
  const Integer space = pow2(static_cast<unsigned long>(n));
  const Integer expectation = Integer(static_cast<unsigned long>(size)) * ball_volume(n, t);
  Integer numerator = 0;
  for (std::size_t c = 0; c < hist.size(); ++c) {
    if (hist[c] == 0) continue;
    Integer deviation = abs(space * static_cast<unsigned long>(c) - expectation);
    Integer term;
    mpz_pow_ui(term.get_mpz_t(), deviation.get_mpz_t(), p);
    numerator += term * Integer(static_cast<unsigned long>(hist[c]));
  }
  Rational result(numerator, pow2(static_cast<unsigned long>(n) * p));
  result.canonicalize();
  return result;
}

double histogram_power_sum_real(std::span<const uint64_t> hist, int n, uint64_t size, long t,
                                double p) {
  const double expectation = static_cast<double>(size) * ball_volume(n, t).get_d() /
                             std::exp2(static_cast<double>(n));
  double total = 0.0;
  for (std::size_t c = 0; c < hist.size(); ++c) {
    if (hist[c] == 0) continue;
    total += static_cast<double>(hist[c]) *
             std::pow(std::abs(static_cast<double>(c) - expectation), p);
  }
  return total;
}

Rational histogram_sup(std::span<const uint64_t> hist, int n, uint64_t size, long t) {
  const Integer space = pow2(static_cast<unsigned long>(n));
  const Integer expectation = Integer(static_cast<unsigned long>(size)) * ball_volume(n, t);
  Integer best = 0;
  for (std::size_t c = 0; c < hist.size(); ++c) {
    if (hist[c] == 0) continue;
    Integer deviation = abs(space * static_cast<unsigned long>(c) - expectation);
    if (deviation > best) best = deviation;
  }
  Rational result(best, space);
  result.canonicalize();
  return result;
}

Rational local_discrepancy(const Code& code, const Word& center, long t) {
  const int n = code.dimension();
  if (center.dimension() != n) {
    throw std::invalid_argument("local_discrepancy: dimension mismatch");
  }
  uint64_t inside = 0;
  if (t >= 0) {
    for (uint64_t z : code.words()) {
      if (std::popcount(z ^ center.bits()) <= t) ++inside;
    }
  }
  Rational expectation(Integer(static_cast<unsigned long>(code.size())) * ball_volume(n, t),
                       pow2(static_cast<unsigned long>(n)));
  expectation.canonicalize();
  return Rational(static_cast<unsigned long>(inside)) - expectation;
}

std::vector<std::vector<uint64_t>> ball_count_histograms(const Code& code,
                                                         std::span<const long> radii) {
  const int n = code.dimension();
  if (n > kMaxSweepDimension) {
    throw infeasible_error("center sweep requires n <= 30");
  }
  const uint64_t space = uint64_t{1} << n;
  const uint64_t size = code.size();

  long max_radius = -1;
  for (long t : radii) {
    if (t >= 0 && t < n) max_radius = std::max(max_radius, t);
  }

  std::vector<std::vector<uint64_t>> result(radii.size());
  std::vector<uint32_t> counts;
  if (max_radius >= 0) counts.assign(space, 0);

  auto snapshot = [&](long t) {
    std::vector<uint64_t> hist(static_cast<std::size_t>(size) + 1, 0);
    if (t < 0) {
      hist[0] = space;
    } else if (t >= n) {
      hist[size] = space;
    } else {
      for (uint64_t y = 0; y < space; ++y) ++hist[counts[y]];
    }
    return hist;
  };

  for (long w = 0; w <= max_radius; ++w) {
    if (w == 0) {
      for (uint64_t z : code.words()) ++counts[z];
    } else if (w <= n) {
      const uint64_t first = (uint64_t{1} << w) - 1;
      for (uint64_t mask = first; mask < space; mask = next_same_weight(mask)) {
        for (uint64_t z : code.words()) ++counts[z ^ mask];
      }
    }
    for (std::size_t i = 0; i < radii.size(); ++i) {
      if (radii[i] == w) result[i] = snapshot(w);
    }
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] < 0 || radii[i] >= n) result[i] = snapshot(radii[i]);
  }
  return result;
}

LpValue lp_discrepancy(const WeightVector& weights, const Code& code, double p) {
  if (weights.dimension() != code.dimension()) {
    throw std::invalid_argument("lp_discrepancy: weight dimension mismatch");
  }
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw std::invalid_argument("lp_discrepancy: p must be finite and positive");
  }
  const int n = code.dimension();
  const std::vector<int> support = weights.support();
  std::vector<long> radii(support.begin(), support.end());
  const auto hists = ball_count_histograms(code, radii);

  LpValue out;
  if (is_positive_integer(p)) {
    const auto exponent = static_cast<unsigned long>(p);
    Rational total = 0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
      Rational sum = histogram_power_sum(hists[i], n, code.size(), radii[i], exponent);
      total += weights.weight(support[i]) * sum / Rational(pow2(static_cast<unsigned long>(n)));
    }
    out.exact = total;
    out.value = std::pow(total.get_d(), 1.0 / p);
  } else {
    double total = 0.0;
    const double scale = std::exp2(-static_cast<double>(n));
    for (std::size_t i = 0; i < radii.size(); ++i) {
      total += weights.weight(support[i]).get_d() * scale *
               histogram_power_sum_real(hists[i], n, code.size(), radii[i], p);
    }
    out.value = std::pow(total, 1.0 / p);
  }
  return out;
}

Rational linf_discrepancy(const RadiusSet& radii, const Code& code) {
  if (radii.dimension() != code.dimension()) {
    throw std::invalid_argument("linf_discrepancy: radius set dimension mismatch");
  }
  const int n = code.dimension();
  std::vector<long> ts(radii.radii().begin(), radii.radii().end());
  const auto hists = ball_count_histograms(code, ts);
  Rational best = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const Rational candidate = histogram_sup(hists[i], n, code.size(), ts[i]);
    best = std::max(best, candidate);
  }
  return best;
}

LpValue hemisphere_discrepancy(const Code& code, double p) {
  const int n = code.dimension();
  if (n % 2 == 0) throw std::invalid_argument("hemisphere_discrepancy: n must be odd");
  if (!(p > 0.0)) throw std::invalid_argument("hemisphere_discrepancy: p must be positive");
  const int m = (n - 1) / 2;
  if (std::isinf(p)) {
    const std::vector<long> radii{m};
    const auto hists = ball_count_histograms(code, radii);
    LpValue out;
    out.exact = histogram_sup(hists[0], n, code.size(), m);
    out.value = out.exact->get_d();
    return out;
  }
  return lp_discrepancy(WeightVector::hemisphere(n), code, p);
}

Spectrum distance_distribution(const Code& code) {
  const int n = code.dimension();
  const std::size_t size = code.size();
  std::vector<uint64_t> pair_counts(static_cast<std::size_t>(n) + 1, 0);
  pair_counts[0] = size;  // the (z,z) pairs
  const auto& words = code.words();
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      pair_counts[static_cast<std::size_t>(std::popcount(words[i] ^ words[j]))] += 2;
    }
  }
  Spectrum spectrum;
  spectrum.n = n;
  spectrum.values.reserve(static_cast<std::size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) {
    Rational a(static_cast<unsigned long>(pair_counts[static_cast<std::size_t>(w)]),
               static_cast<unsigned long>(size));
    a.canonicalize();
    spectrum.values.push_back(a);
  }
  return spectrum;
}

Spectrum macwilliams_transform(const Spectrum& distribution, const Integer& size) {
  if (size <= 0) throw std::invalid_argument("macwilliams_transform: size must be positive");
  const int n = distribution.n;
  if (distribution.values.size() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("macwilliams_transform: spectrum length mismatch");
  }
  const KrawtchoukTable table(n);
  Spectrum dual;
  dual.n = n;
  dual.values.assign(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    Rational total = 0;
    for (int w = 0; w <= n; ++w) {
      total += distribution.values[static_cast<std::size_t>(w)] * Rational(table.value(i, w));
    }
    dual.values[static_cast<std::size_t>(i)] = total / Rational(size);
  }
  return dual;
}

Spectrum macwilliams_inverse(const Spectrum& dual, const Integer& size) {
  if (size <= 0) throw std::invalid_argument("macwilliams_inverse: size must be positive");
  const int n = dual.n;
  if (dual.values.size() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("macwilliams_inverse: spectrum length mismatch");
  }
  const KrawtchoukTable table(n);
  Rational scale(size, pow2(static_cast<unsigned long>(n)));
  scale.canonicalize();
  Spectrum distribution;
  distribution.n = n;
  distribution.values.assign(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    Rational total = 0;
    for (int w = 0; w <= n; ++w) {
      total += dual.values[static_cast<std::size_t>(w)] * Rational(table.value(i, w));
    }
    Rational value = scale * total;
    value.canonicalize();
    distribution.values[static_cast<std::size_t>(i)] = value;
  }
  return distribution;
}

StolarskyUniform stolarsky_uniform(const Code& code) {
  const int n = code.dimension();
  const uint64_t size = code.size();

  const LpValue quadratic = lp_discrepancy(WeightVector::uniform(n), code, 2.0);
  StolarskyUniform identity;
  identity.lhs = Rational(pow2(static_cast<unsigned long>(n)) * n) * *quadratic.exact;

  const auto kernel = stolarsky_kernel_table(n);
  const auto& words = code.words();
  Integer pair_sum = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      pair_sum += 2 * kernel[static_cast<std::size_t>(std::popcount(words[i] ^ words[j]))];
    }
  }
  const Integer n_int(n);
  const Integer size_int(static_cast<unsigned long>(size));
  Rational constant(n_int * size_int * size_int * binomial(2 * static_cast<unsigned long>(n),
                                                           static_cast<long>(n)),
                    pow2(static_cast<unsigned long>(n) + 1));
  constant.canonicalize();
  identity.rhs = constant - Rational(pair_sum);
  return identity;
}

StolarskyHemisphere stolarsky_hemisphere(const Code& code) {
  const int n = code.dimension();
  if (n % 2 == 0) throw std::invalid_argument("stolarsky_hemisphere: n must be odd");
  const int m = (n - 1) / 2;
  const Integer size(static_cast<unsigned long>(code.size()));

  StolarskyHemisphere identity;
  const LpValue quadratic = hemisphere_discrepancy(code, 2.0);
  identity.lhs = Rational(pow2(static_cast<unsigned long>(n))) * *quadratic.exact /
                 Rational(size * size);
  identity.lhs.canonicalize();

  const Spectrum distribution = distance_distribution(code);
  const auto mu = ball_intersection_table(m);
  Rational average = 0;
  for (int w = 0; w <= n; ++w) {
    average += distribution.values[static_cast<std::size_t>(w)] * Rational(mu[static_cast<std::size_t>(w)]);
  }
  identity.rhs_mu = average / Rational(size) - Rational(pow2(static_cast<unsigned long>(n - 2)));

  const Spectrum dual = macwilliams_transform(distribution, size);
  const BallIntersectionExpansion expansion = ball_intersection_expansion(m);
  Rational dual_sum = 0;
  for (int r = 0; r <= m; ++r) {
    dual_sum += expansion.odd_coeffs[static_cast<std::size_t>(r)] *
                dual.values[static_cast<std::size_t>(2 * r + 1)];
  }
  identity.rhs_dual = dual_sum;
  return identity;
}

}  // namespace hamdisc
