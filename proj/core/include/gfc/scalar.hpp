#pragma once

#include <concepts>
#include <string>
#include <string_view>

#include "gfc/rational.hpp"

namespace gfc {

enum class ScalarMode { exact_rational, binary_float };

std::string_view to_string(ScalarMode mode);

template <class F>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr ScalarMode mode = ScalarMode::exact_rational;
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static bool is_negative(const Rational& x) { return x.sign() < 0; }
  static Rational abs(const Rational& x) { return x.abs(); }
  static Rational parse(std::string_view text) { return Rational::parse(text); }
  static std::string format(const Rational& x) { return x.to_string(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr ScalarMode mode = ScalarMode::binary_float;
  static constexpr bool exact = false;
  static bool is_zero(double x) { return x == 0.0; }
  static bool is_negative(double x) { return x < 0.0; }
  static double abs(double x) { return x < 0.0 ? -x : x; }
  // Same literal grammar as Rational::parse; "p/q" is evaluated in double.
  static double parse(std::string_view text);
  // Shortest representation that reads back to the same double.
  static std::string format(double x);
};

// A field of characteristic zero usable as a coefficient domain.
template <class F>
concept Field = std::regular<F> && requires(F a, F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { ScalarTraits<F>::is_zero(a) } -> std::convertible_to<bool>;
  { ScalarTraits<F>::format(a) } -> std::convertible_to<std::string>;
};

template <Field F>
bool is_zero(const F& x) {
  return ScalarTraits<F>::is_zero(x);
}

// sign * x for sign in {+1, -1}, without a multiplication.
template <Field F>
F apply_sign(int sign, const F& x) {
  return sign < 0 ? -x : x;
}

}  // namespace gfc
