#include "hamdisc/kernels.hpp"

#include <stdexcept>

#include "hamdisc/core.hpp"

namespace hamdisc {

Integer krawtchouk(int n, int k, int x) {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("krawtchouk: n out of range");
  if (k < 0 || k > n || x < 0 || x > n) {
    throw std::invalid_argument("krawtchouk: indices out of range");
  }
  Integer total = 0;
  for (int j = 0; j <= k; ++j) {
    const Integer term =
        binomial(static_cast<unsigned long>(x), j) *
        binomial(static_cast<unsigned long>(n - x), static_cast<long>(k) - j);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

KrawtchoukTable::KrawtchoukTable(int n) : n_(n) {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("KrawtchoukTable: n out of range");
  values_.assign(static_cast<std::size_t>(n) + 1,
                 std::vector<Integer>(static_cast<std::size_t>(n) + 1));
  for (int x = 0; x <= n; ++x) values_[0][static_cast<std::size_t>(x)] = 1;
  if (n >= 1) {
    for (int x = 0; x <= n; ++x) values_[1][static_cast<std::size_t>(x)] = n - 2 * x;
  }
  // (k+1) K_{k+1}(x) = (n-2x) K_k(x) - (n-k+1) K_{k-1}(x)
  for (int k = 1; k < n; ++k) {
    for (int x = 0; x <= n; ++x) {
      Integer numerator = Integer(n - 2 * x) * values_[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)] -
                          Integer(n - k + 1) * values_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(x)];
      Integer& slot = values_[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(x)];
      mpz_divexact_ui(slot.get_mpz_t(), numerator.get_mpz_t(),
                      static_cast<unsigned long>(k + 1));
    }
  }
}

const Integer& KrawtchoukTable::value(int k, int x) const {
  if (k < 0 || k > n_ || x < 0 || x > n_) {
    throw std::invalid_argument("KrawtchoukTable: indices out of range");
  }
  return values_[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)];
}

Integer ball_intersection(int m, int w) {
  if (m < 0) throw std::invalid_argument("ball_intersection: m must be nonnegative");
  const int n = 2 * m + 1;
  if (n > kMaxDimension) throw std::invalid_argument("ball_intersection: dimension too large");
  if (w < 0 || w > n) throw std::invalid_argument("ball_intersection: w out of range");
  Integer total = 0;
  for (int i = 0; i <= std::min(w, m); ++i) {
    const int j_low = std::max(0, i - w);
    const int j_high = std::min({m - i, m - w + i, n - w});
    for (int j = j_low; j <= j_high; ++j) {
      total += binomial(static_cast<unsigned long>(w), i) *
               binomial(static_cast<unsigned long>(n - w), j);
    }
  }
  return total;
}

std::vector<Integer> ball_intersection_table(int m) {
  const int n = 2 * m + 1;
  std::vector<Integer> table;
  table.reserve(static_cast<std::size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) table.push_back(ball_intersection(m, w));
  return table;
}

Integer stolarsky_kernel(int n, int w) {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("stolarsky_kernel: n out of range");
  if (w < 0 || w > n) throw std::invalid_argument("stolarsky_kernel: w out of range");
  if (w == 0) return 0;
  const int half_up = (w + 1) / 2;  // ceil(w/2)
  return pow2(static_cast<unsigned long>(n - w)) * Integer(w) *
         binomial(static_cast<unsigned long>(w - 1), half_up - 1);
}

std::vector<Integer> stolarsky_kernel_table(int n) {
  std::vector<Integer> table;
  table.reserve(static_cast<std::size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) table.push_back(stolarsky_kernel(n, w));
  return table;
}

BallIntersectionExpansion ball_intersection_expansion(int m) {
  if (m < 1) throw std::invalid_argument("ball_intersection_expansion: m must be >= 1");
  const int n = 2 * m + 1;
  if (n > kMaxDimension) {
    throw std::invalid_argument("ball_intersection_expansion: dimension too large");
  }
  BallIntersectionExpansion expansion;
  expansion.m = m;
  expansion.constant = Rational(pow2(static_cast<unsigned long>(n - 2)));
  const Integer central = binomial(static_cast<unsigned long>(2 * m), m);
  expansion.odd_coeffs.reserve(static_cast<std::size_t>(m) + 1);
  for (int r = 0; r <= m; ++r) {
    const Integer top = central * binomial(static_cast<unsigned long>(m), r);
    const Integer bottom = binomial(static_cast<unsigned long>(2 * m), 2 * r);
    Rational coeff(top * top, pow2(static_cast<unsigned long>(n)) * bottom * bottom);
    coeff.canonicalize();
    expansion.odd_coeffs.push_back(coeff);
  }
  return expansion;
}

Rational evaluate_expansion(const BallIntersectionExpansion& expansion,
                            const KrawtchoukTable& table, int w) {
  const int n = 2 * expansion.m + 1;
  if (table.dimension() != n) {
    throw std::invalid_argument("evaluate_expansion: table dimension mismatch");
  }
  Rational total = expansion.constant;
  for (int r = 0; r <= expansion.m; ++r) {
    total += expansion.odd_coeffs[static_cast<std::size_t>(r)] * Rational(table.value(2 * r + 1, w));
  }
  return total;
}

OddKrawtchoukMatrix odd_krawtchouk_matrix(int m) {
  if (m < 1) throw std::invalid_argument("odd_krawtchouk_matrix: m must be >= 1");
  const int n = 2 * m + 1;
  const KrawtchoukTable table(n);
  OddKrawtchoukMatrix matrix;
  matrix.m = m;
  matrix.rows.assign(static_cast<std::size_t>(m) + 1,
                     std::vector<Integer>(static_cast<std::size_t>(m) + 1));
  for (int r = 0; r <= m; ++r) {
    for (int c = 0; c <= m; ++c) {
      matrix.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          table.value(2 * r + 1, c);
    }
  }
  return matrix;
}

bool odd_matrix_diagonal_identity(const OddKrawtchoukMatrix& matrix) {
  const int m = matrix.m;
  const int n = 2 * m + 1;
  const Integer scale = pow2(static_cast<unsigned long>(n - 1));
  for (int r = 0; r <= m; ++r) {
    for (int s = 0; s <= m; ++s) {
      Integer dot = 0;
      for (int c = 0; c <= m; ++c) {
        dot += matrix.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
               matrix.rows[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)] *
               binomial(static_cast<unsigned long>(n), c);
      }
      const Integer expected =
          r == s ? Integer(scale * binomial(static_cast<unsigned long>(n), 2 * r + 1)) : Integer(0);
      if (dot != expected) return false;
    }
  }
  return true;
}

int odd_matrix_rank(const OddKrawtchoukMatrix& matrix) {
  if (!odd_matrix_diagonal_identity(matrix)) {
    throw std::logic_error("odd_matrix_rank: diagonal identity failed");
  }
  return matrix.m + 1;
}

}  // namespace hamdisc
