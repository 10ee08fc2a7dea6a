#include "hamdisc/weights.hpp"

#include <algorithm>
#include <stdexcept>

#include "hamdisc/core.hpp"

namespace hamdisc {

WeightVector::WeightVector(int n, std::vector<Rational> weights)
    : n_(n), weights_(std::move(weights)) {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("WeightVector: n out of range");
  if (weights_.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("WeightVector: expected n weights");
  }
  Rational total = 0;
  for (const Rational& g : weights_) {
    if (g < 0) throw std::invalid_argument("WeightVector: negative weight");
    total += g;
  }
  if (total != 1) throw std::invalid_argument("WeightVector: weights must sum to 1");
}

WeightVector WeightVector::uniform(int n) {
  if (n < 1) throw std::invalid_argument("uniform weights: n out of range");
  std::vector<Rational> g(static_cast<std::size_t>(n), Rational(1, n));
  return WeightVector(n, std::move(g));
}

WeightVector WeightVector::single_radius(int n, int t) {
  if (t < 0 || t >= n) throw std::invalid_argument("single_radius: t outside {0..n-1}");
  std::vector<Rational> g(static_cast<std::size_t>(n), Rational(0));
  g[static_cast<std::size_t>(t)] = 1;
  return WeightVector(n, std::move(g));
}

WeightVector WeightVector::hemisphere(int n) {
  if (n % 2 == 0) throw std::invalid_argument("hemisphere weights need odd n");
  return single_radius(n, (n - 1) / 2);
}

WeightVector WeightVector::cutoff(int n, const Rational& beta) {
  if (beta < 0 || beta >= 1) throw std::invalid_argument("cutoff weights: beta outside [0, 1)");
  Rational scaled = beta * n;
  Integer floor_t;
  mpz_fdiv_q(floor_t.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const long t_max = std::min<long>(floor_t.get_si(), n - 1);
  std::vector<Rational> g(static_cast<std::size_t>(n), Rational(0));
  for (long t = 0; t <= t_max; ++t) {
    g[static_cast<std::size_t>(t)] = Rational(1, static_cast<unsigned long>(t_max + 1));
  }
  return WeightVector(n, std::move(g));
}

std::vector<int> WeightVector::support() const {
  std::vector<int> radii;
  for (int t = 0; t < n_; ++t) {
    if (weights_[static_cast<std::size_t>(t)] > 0) radii.push_back(t);
  }
  return radii;
}

WeightVector fold_weights(const WeightVector& weights) {
  const int n = weights.dimension();
  const int half = (n - 1) / 2;
  std::vector<Rational> folded(static_cast<std::size_t>(n), Rational(0));
  for (int t = 0; t <= half; ++t) {
    const int partner = n - 1 - t;
    folded[static_cast<std::size_t>(t)] =
        t == partner ? weights.weight(t) : Rational(weights.weight(t) + weights.weight(partner));
  }
  return WeightVector(n, std::move(folded));
}

RadiusSet::RadiusSet(int n, std::vector<int> radii) : n_(n), radii_(std::move(radii)) {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("RadiusSet: n out of range");
  if (radii_.empty()) throw std::invalid_argument("RadiusSet: empty radius set");
  std::sort(radii_.begin(), radii_.end());
  if (std::adjacent_find(radii_.begin(), radii_.end()) != radii_.end()) {
    throw std::invalid_argument("RadiusSet: duplicate radius");
  }
  if (radii_.front() < 0 || radii_.back() >= n) {
    throw std::invalid_argument("RadiusSet: radius outside {0..n-1}");
  }
}

RadiusSet RadiusSet::full(int n) {
  std::vector<int> radii(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) radii[static_cast<std::size_t>(t)] = t;
  return RadiusSet(n, std::move(radii));
}

}  // namespace hamdisc
