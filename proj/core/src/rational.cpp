#include "sugartax/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sugartax {

namespace {

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(int exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  return result;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
}

}  // namespace

Rational ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) bad_literal(text);

  const std::string_view original = text;
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational result;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den)) bad_literal(original);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) bad_literal(original);
    result = Rational(n, d);
  } else {
    const auto dot = text.find('.');
    const auto whole = text.substr(0, dot);
    const auto frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_literal(original);
    if (!all_digits(whole) || !all_digits(frac)) bad_literal(original);
    const std::string digits = std::string(whole) + std::string(frac);
    mpz_class n(digits.empty() ? std::string("0") : digits, 10);
    result = Rational(n, pow10(static_cast<int>(frac.size())));
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

std::string to_exact_string(const Rational& value) {
  mpz_class den = value.get_den();
  int twos = 0;
  int fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return value.get_str();
  const int decimals = std::max(twos, fives);
  return decimals == 0 ? value.get_num().get_str() : to_fixed(value, decimals);
}

Rational round_to(const Rational& value, int decimals) {
  if (decimals < 0) throw std::invalid_argument("negative decimal count");
  const mpz_class scale = pow10(decimals);
  const Rational scaled = abs(value) * scale;
  // floor(|x| * 10^d + 1/2)
  const Rational shifted = scaled + Rational(1, 2);
  mpz_class rounded = shifted.get_num() / shifted.get_den();
  if (value < 0) rounded = -rounded;
  Rational out(rounded, scale);
  out.canonicalize();
  return out;
}

std::string to_fixed(const Rational& value, int decimals) {
  const Rational rounded = round_to(value, decimals);
  const mpz_class scale = pow10(decimals);
  const Rational scaled = rounded * scale;
  mpz_class units = scaled.get_num() / scaled.get_den();
  const bool negative = units < 0;
  if (negative) units = -units;
  std::string digits = units.get_str();
  if (decimals > 0) {
    if (digits.size() <= static_cast<std::size_t>(decimals)) {
      digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(decimals), 1, '.');
  }
  return negative ? "-" + digits : digits;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace sugartax
