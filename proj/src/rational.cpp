#include "metric_realize/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace metric_realize {
namespace {

using Wide = __int128;

constexpr Wide kMax = std::numeric_limits<std::int64_t>::max();
// |value| must stay below 2^100 while a decimal literal is accumulated.
constexpr Wide kParseLimit = static_cast<Wide>(1) << 100;

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Wide pow10(int exponent) {
  Wide result = 1;
  for (int i = 0; i < exponent; ++i) result *= 10;
  return result;
}

[[noreturn]] void malformed(std::string_view text) {
  throw std::invalid_argument("malformed number '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || num < -kMax || den > kMax) {
    throw std::overflow_error("rational overflow");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::parse(std::string_view text) {
  const std::string_view original = text;
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) malformed(original);

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t p = 0;
    std::int64_t q = 0;
    const auto num_part = text.substr(0, slash);
    const auto den_part = text.substr(slash + 1);
    auto [pe, pec] = std::from_chars(num_part.data(), num_part.data() + num_part.size(), p);
    auto [qe, qec] = std::from_chars(den_part.data(), den_part.data() + den_part.size(), q);
    if (pec != std::errc{} || qec != std::errc{} || pe != num_part.data() + num_part.size() ||
        qe != den_part.data() + den_part.size() || q == 0) {
      malformed(original);
    }
    return Rational(p, q);
  }

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  Wide mantissa = 0;
  int fraction_digits = 0;
  bool any_digit = false;
  bool in_fraction = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c >= '0' && c <= '9') {
      any_digit = true;
      mantissa = mantissa * 10 + (c - '0');
      if (mantissa > kParseLimit) throw std::overflow_error("rational overflow parsing '" + std::string(original) + "'");
      if (in_fraction) ++fraction_digits;
    } else if (c == '.' && !in_fraction) {
      in_fraction = true;
    } else {
      break;
    }
  }
  if (!any_digit) malformed(original);
  int exponent = 0;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') malformed(original);
    ++pos;
    const auto exp_part = text.substr(pos);
    const char* first = exp_part.data();
    if (!exp_part.empty() && *first == '+') ++first;
    auto [end, ec] = std::from_chars(first, exp_part.data() + exp_part.size(), exponent);
    if (ec != std::errc{} || end != exp_part.data() + exp_part.size()) malformed(original);
  }
  const int shift = exponent - fraction_digits;
  if (shift > 30 || shift < -30) throw std::overflow_error("rational overflow parsing '" + std::string(original) + "'");
  Wide num = negative ? -mantissa : mantissa;
  Wide den = 1;
  if (shift >= 0) {
    num *= pow10(shift);
  } else {
    den = pow10(-shift);
  }
  return from_wide(num, den);
}

std::string Rational::to_string() const {
  std::int64_t d = den_;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
  if (den_ == 1) return std::to_string(num_);

  // Scale to a power of ten; the scaled numerator may need 128 bits.
  const int digits = std::max(twos, fives);
  Wide scaled = num_;
  for (int i = twos; i < digits; ++i) scaled *= 2;
  for (int i = fives; i < digits; ++i) scaled *= 5;
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string body;
  while (scaled > 0 || static_cast<int>(body.size()) <= digits) {
    body.insert(body.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
    scaled /= 10;
  }
  body.insert(body.end() - digits, '.');
  return negative ? "-" + body : body;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    *this = from_wide(static_cast<Wide>(num_) + rhs.num_, den_);
  } else {
    *this = from_wide(static_cast<Wide>(num_) * rhs.den_ + static_cast<Wide>(rhs.num_) * den_,
                      static_cast<Wide>(den_) * rhs.den_);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  *this = from_wide(static_cast<Wide>(num_) * rhs.num_, static_cast<Wide>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
  *this = from_wide(static_cast<Wide>(num_) * rhs.den_, static_cast<Wide>(den_) * rhs.num_);
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational abs(const Rational& value) { return value.num() < 0 ? -value : value; }

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace metric_realize
