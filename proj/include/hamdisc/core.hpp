#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hamdisc/rational.hpp"

namespace hamdisc {

// Parameters outside the supported budget (dimension caps, enumeration
// budgets, capacity overflows). Mapped to exit code 2 at the CLI.
class infeasible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Routines sweeping all 2^n centers or enumerating subsets require
// n <= kMaxSweepDimension; constructions and bound evaluators accept
// n <= kMaxDimension.
inline constexpr int kMaxSweepDimension = 30;
inline constexpr int kMaxDimension = 64;

// Mask with the low n bits set, 1 <= n <= 64.
uint64_t dimension_mask(int n);

// A point of the binary Hamming space: n coordinates packed into a word,
// coordinate i stored in bit i. Text form is the coordinate string, leftmost
// character first ("0101" sets coordinates 2 and 4).
class Word {
 public:
  Word(uint64_t bits, int n);
  static Word parse(std::string_view text);

  int dimension() const { return n_; }
  uint64_t bits() const { return bits_; }
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  uint64_t bits_;
  int n_;
};

// A finite set of distinct words of common dimension. Point order is
// preserved; discrepancies are invariant under relabeling.
class Code {
 public:
  Code(int n, std::vector<uint64_t> words);
  static Code from_words(const std::vector<Word>& words);

  int dimension() const { return n_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<uint64_t>& words() const { return words_; }
  Word word(std::size_t index) const { return Word(words_[index], n_); }

 private:
  int n_;
  std::vector<uint64_t> words_;
};

int hamming_distance(const Word& x, const Word& y);
Word antipode(const Word& y);

// v(t) = sum_{i<=t} C(n,i); 0 for t < 0, 2^n for t >= n.
Integer ball_volume(int n, long t);

double binary_entropy(double lambda);            // h(λ), 0 at both endpoints
double entropy_step(double lambda);              // h(λ) for λ <= 1/2, else 1
double volume_exponent_bound(int n, double lambda);  // 2^{n·entropy_step(λ)}

Code complement_code(const Code& code);

}  // namespace hamdisc
