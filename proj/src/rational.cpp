#include "hamdisc/rational.hpp"

#include <cctype>

namespace hamdisc {

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

namespace {

bool is_integer_token(std::string_view text) {
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
    Rational value{Integer(std::string(num)), Integer(std::string(den))};
    if (value.get_den() == 0) return std::nullopt;
    value.canonicalize();
    return value;
  }
  const auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (!is_integer_token(whole.empty() ? "0" : whole) || frac.empty() ||
        !is_integer_token(frac)) {
      return std::nullopt;
    }
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer numerator(std::string(whole.empty() ? "0" : whole));
    const bool negative = numerator < 0 || (!whole.empty() && whole.front() == '-');
    numerator = abs(numerator) * scale + Integer(std::string(frac));
    if (negative) numerator = -numerator;
    Rational value(numerator, scale);
    value.canonicalize();
    return value;
  }
  if (!is_integer_token(text)) return std::nullopt;
  return Rational(Integer(std::string(text)));
}

Integer binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, static_cast<unsigned long>(k));
  return result;
}

Integer pow2(unsigned long exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, exponent);
  return result;
}

Rational rational_pow(const Rational& base, unsigned long exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return result;  // base canonical => powers share no factor
}

Rational rational_abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace hamdisc
