#pragma once

#include <vector>

#include "hamdisc/rational.hpp"

namespace hamdisc {

// K_k(x) = sum_j (-1)^j C(x,j) C(n-x,k-j), evaluated directly from the sum.
// The table below fills the same values by the three-term recurrence; the two
// routes cross-check each other in the tests.
Integer krawtchouk(int n, int k, int x);

class KrawtchoukTable {
 public:
  explicit KrawtchoukTable(int n);

  int dimension() const { return n_; }
  const Integer& value(int k, int x) const;

 private:
  int n_;
  std::vector<std::vector<Integer>> values_;  // values_[k][x]
};

// |B(x,m) ∩ B(y,m)| in dimension n = 2m+1 for centers at distance w,
// via the double-binomial sum over i+j <= m, 0 <= w-i+j <= m.
Integer ball_intersection(int m, int w);
std::vector<Integer> ball_intersection_table(int m);  // indexed by w = 0..n

// Radial kernel of the quadratic invariance identity for uniform weights:
// 2^{n-w} · w · C(w-1, ceil(w/2)-1), zero at w = 0.
Integer stolarsky_kernel(int n, int w);
std::vector<Integer> stolarsky_kernel_table(int n);

// Krawtchouk expansion of the ball-intersection kernel: a constant term plus
// odd-degree terms only, all coefficients positive.
struct BallIntersectionExpansion {
  int m = 0;
  Rational constant;                 // coefficient of K_0 (= 2^{n-2})
  std::vector<Rational> odd_coeffs;  // index r holds the coefficient of K_{2r+1}, r = 0..m
};

BallIntersectionExpansion ball_intersection_expansion(int m);
Rational evaluate_expansion(const BallIntersectionExpansion& expansion,
                            const KrawtchoukTable& table, int w);

// Odd-degree Krawtchouk values on the half range: row r holds K_{2r+1}(c) for
// c = 0..m. Invertibility is certified through the exact diagonal identity
// M diag(C(n,c)) M^T = 2^{n-1} diag(C(n,1), C(n,3), ..., C(n,2m+1)).
struct OddKrawtchoukMatrix {
  int m = 0;
  std::vector<std::vector<Integer>> rows;
};

OddKrawtchoukMatrix odd_krawtchouk_matrix(int m);
bool odd_matrix_diagonal_identity(const OddKrawtchoukMatrix& matrix);
// m+1 when the diagonal identity holds (the product has nonzero determinant).
int odd_matrix_rank(const OddKrawtchoukMatrix& matrix);

}  // namespace hamdisc
