#ifndef METRIC_REALIZE_NUMERIC_HPP
#define METRIC_REALIZE_NUMERIC_HPP

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "metric_realize/rational.hpp"

namespace metric_realize {

enum class CompareMode { kExact, kTolerance };

inline constexpr double kDefaultTolerance = 1e-9;

template <class T>
struct NumberTraits;

template <>
struct NumberTraits<Rational> {
  static constexpr CompareMode kMode = CompareMode::kExact;
  static constexpr double kDefaultTolerance = 0.0;

  static Rational parse(std::string_view text) { return Rational::parse(text); }
  static std::string format(const Rational& value) { return value.to_string(); }
  static double to_double(const Rational& value) { return value.to_double(); }
  static Rational magnitude(const Rational& value) { return abs(value); }
  static Rational from_tolerance(double /*tolerance*/, const Rational& /*scale*/) { return Rational(0); }
};

template <>
struct NumberTraits<double> {
  static constexpr CompareMode kMode = CompareMode::kTolerance;
  static constexpr double kDefaultTolerance = metric_realize::kDefaultTolerance;

  /// Accepts plain decimals and "p/q" rationals.
  static double parse(std::string_view text);
  /// Shortest text that round-trips to the same double.
  static std::string format(double value);
  static double to_double(double value) { return value; }
  static double magnitude(double value) { return std::fabs(value); }
  static double from_tolerance(double tolerance, double scale) { return tolerance * scale; }
};

/// The single place where values are compared. `slack` is the absolute
/// comparison slack: zero for exact rationals, tau * scale in tolerance mode.
template <class T>
class Comparator {
 public:
  Comparator() = default;
  explicit Comparator(T slack) : slack_(std::move(slack)) {}

  const T& slack() const noexcept { return slack_; }

  bool eq(const T& a, const T& b) const { return NumberTraits<T>::magnitude(a - b) <= slack_; }
  /// a is strictly below b by more than the slack.
  bool lt(const T& a, const T& b) const { return b - a > slack_; }
  bool gt(const T& a, const T& b) const { return lt(b, a); }
  bool le(const T& a, const T& b) const { return !gt(a, b); }
  bool ge(const T& a, const T& b) const { return !lt(a, b); }
  bool is_zero(const T& a) const { return eq(a, T(0)); }

 private:
  T slack_{};
};

template <class T>
T abs_diff(const T& a, const T& b) {
  return a < b ? b - a : a - b;
}

template <class To, class From>
To convert_number(const From& value) {
  if constexpr (std::is_same_v<To, From>) {
    return value;
  } else if constexpr (std::is_same_v<To, double>) {
    return NumberTraits<From>::to_double(value);
  } else {
    return NumberTraits<To>::parse(NumberTraits<From>::format(value));
  }
}

}  // namespace metric_realize

#endif  // METRIC_REALIZE_NUMERIC_HPP
