#include "gfc/rational.hpp"

#include <charconv>
#include <ostream>
#include <system_error>

#include "gfc/errors.hpp"
#include "gfc/scalar.hpp"

namespace gfc {

namespace {

constexpr std::string_view unicode_minus = "\xE2\x88\x92";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

[[noreturn]] void malformed(std::string_view text) {
  throw DomainError("malformed rational literal '" + std::string(text) + "'");
}

// Splits off a sign prefix; returns true if negative.
bool take_sign(std::string_view& s) {
  if (s.starts_with(unicode_minus)) {
    s.remove_prefix(unicode_minus.size());
    return true;
  }
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    bool neg = s.front() == '-';
    s.remove_prefix(1);
    return neg;
  }
  return false;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = take_sign(s);
  mpq_class q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) malformed(text);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw DomainError("rational with zero denominator: '" + std::string(text) + "'");
    q = mpq_class(n, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      malformed(text);
    }
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class n(digits, 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    q = mpq_class(n, d);
  } else {
    if (!all_digits(s)) malformed(text);
    q = mpq_class(mpz_class(std::string(s), 10));
  }
  q.canonicalize();
  if (negative) q = -q;
  return Rational(std::move(q));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::string_view to_string(ScalarMode mode) {
  return mode == ScalarMode::exact_rational ? "rational" : "float";
}

double ScalarTraits<double>::parse(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = take_sign(s);
  auto read = [&](std::string_view part) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size() || part.front() == '-' ||
        part.front() == '+') {
      malformed(text);
    }
    return v;
  };
  double value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    double den = read(s.substr(slash + 1));
    if (den == 0.0) throw DomainError("rational with zero denominator: '" + std::string(text) + "'");
    value = read(s.substr(0, slash)) / den;
  } else {
    value = read(s);
  }
  return negative ? -value : value;
}

std::string ScalarTraits<double>::format(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace gfc
