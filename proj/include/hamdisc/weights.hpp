#pragma once

#include <vector>

#include "hamdisc/rational.hpp"

namespace hamdisc {

// Nonnegative radial weights g_0..g_{n-1} summing exactly to 1.
class WeightVector {
 public:
  WeightVector(int n, std::vector<Rational> weights);

  static WeightVector uniform(int n);                        // 1/n everywhere
  static WeightVector single_radius(int n, int t);           // 1 at t, 0 elsewhere
  static WeightVector hemisphere(int n);                     // single radius (n-1)/2, odd n
  static WeightVector cutoff(int n, const Rational& beta);   // uniform on t <= floor(beta*n)

  int dimension() const { return n_; }
  const Rational& weight(int t) const { return weights_[static_cast<std::size_t>(t)]; }
  const std::vector<Rational>& values() const { return weights_; }
  std::vector<int> support() const;  // radii with positive weight, ascending

 private:
  int n_;
  std::vector<Rational> weights_;
};

// Folds g onto the half range t <= floor((n-1)/2): paired radii t and n-1-t
// add, the self-paired middle radius (odd n) is kept as is. Leaves every
// L_p-discrepancy unchanged.
WeightVector fold_weights(const WeightVector& weights);

// Nonempty subset of the radius range {0, ..., n-1}, kept sorted.
class RadiusSet {
 public:
  RadiusSet(int n, std::vector<int> radii);
  static RadiusSet full(int n);

  int dimension() const { return n_; }
  const std::vector<int>& radii() const { return radii_; }
  std::size_t size() const { return radii_.size(); }

 private:
  int n_;
  std::vector<int> radii_;
};

}  // namespace hamdisc
