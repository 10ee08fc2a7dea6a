#include "hamdisc/core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

namespace hamdisc {

uint64_t dimension_mask(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("dimension must be in [1, 64]");
  return n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

Word::Word(uint64_t bits, int n) : bits_(bits), n_(n) {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("word dimension out of range");
  if ((bits & ~dimension_mask(n)) != 0) {
    throw std::invalid_argument("word has bits beyond its dimension");
  }
}

Word Word::parse(std::string_view text) {
  if (text.empty() || text.size() > kMaxDimension) {
    throw std::invalid_argument("word string must have between 1 and 64 characters");
  }
  uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= uint64_t{1} << i;
    } else if (text[i] != '0') {
      throw std::invalid_argument("word string may contain only '0' and '1'");
    }
  }
  return Word(bits, static_cast<int>(text.size()));
}

std::string Word::to_string() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    if ((bits_ >> i) & 1) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

Code::Code(int n, std::vector<uint64_t> words) : n_(n), words_(std::move(words)) {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("code dimension out of range");
  if (words_.empty()) throw std::invalid_argument("code must contain at least one word");
  const uint64_t mask = dimension_mask(n);
  std::unordered_set<uint64_t> seen;
  seen.reserve(words_.size() * 2);
  for (uint64_t w : words_) {
    if ((w & ~mask) != 0) throw std::invalid_argument("code word outside dimension");
    if (!seen.insert(w).second) throw std::invalid_argument("duplicate word in code");
  }
}

Code Code::from_words(const std::vector<Word>& words) {
  if (words.empty()) throw std::invalid_argument("code must contain at least one word");
  const int n = words.front().dimension();
  std::vector<uint64_t> bits;
  bits.reserve(words.size());
  for (const Word& w : words) {
    if (w.dimension() != n) throw std::invalid_argument("mixed dimensions in code");
    bits.push_back(w.bits());
  }
  return Code(n, std::move(bits));
}

int hamming_distance(const Word& x, const Word& y) {
  if (x.dimension() != y.dimension()) {
    throw std::invalid_argument("hamming_distance: dimension mismatch");
  }
  return std::popcount(x.bits() ^ y.bits());
}

Word antipode(const Word& y) {
  return Word(~y.bits() & dimension_mask(y.dimension()), y.dimension());
}

Integer ball_volume(int n, long t) {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("ball_volume: n out of range");
  if (t < 0) return 0;
  if (t >= n) return pow2(static_cast<unsigned long>(n));
  Integer total = 0;
  for (long i = 0; i <= t; ++i) total += binomial(static_cast<unsigned long>(n), i);
  return total;
}

double binary_entropy(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("binary_entropy: argument outside [0, 1]");
  }
  if (lambda == 0.0 || lambda == 1.0) return 0.0;
  return -lambda * std::log2(lambda) - (1.0 - lambda) * std::log2(1.0 - lambda);
}

double entropy_step(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("entropy_step: argument outside [0, 1]");
  }
  return lambda > 0.5 ? 1.0 : binary_entropy(lambda);
}

double volume_exponent_bound(int n, double lambda) {
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument("volume_exponent_bound: n out of range");
  }
  return std::exp2(static_cast<double>(n) * entropy_step(lambda));
}

Code complement_code(const Code& code) {
  const int n = code.dimension();
  if (n > kMaxSweepDimension) {
    throw infeasible_error("complement_code: enumeration requires n <= 30");
  }
  const uint64_t space = uint64_t{1} << n;
  if (code.size() >= space) {
    throw std::invalid_argument("complement_code: complement would be empty");
  }
  std::unordered_set<uint64_t> members(code.words().begin(), code.words().end());
  std::vector<uint64_t> rest;
  rest.reserve(static_cast<std::size_t>(space - code.size()));
  for (uint64_t x = 0; x < space; ++x) {
    if (!members.contains(x)) rest.push_back(x);
  }
  return Code(n, std::move(rest));
}

}  // namespace hamdisc
