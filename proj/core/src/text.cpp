#include "gfc/io.hpp"

namespace gfc {
namespace {

template <Field F>
void append_signed(std::string& out, bool first, const F& coeff, const std::string& body,
                   bool scalar_term) {
  const bool negative = ScalarTraits<F>::is_negative(coeff);
  const F magnitude = ScalarTraits<F>::abs(coeff);
  const bool unit = magnitude == F(1);
  std::string term;
  if (scalar_term) {
    term = ScalarTraits<F>::format(magnitude);
  } else if (unit) {
    term = body;
  } else {
    term = ScalarTraits<F>::format(magnitude) + "*" + body;
  }
  if (first) {
    if (negative) out += scalar_term || !unit ? "-" : "- ";
  } else {
    out += negative ? " - " : " + ";
  }
  out += term;
}

template <Field F>
std::string multivector_text(const Multivector<F>& u) {
  if (u.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : u.terms()) {
    append_signed(out, first, c, to_string(b, u.dim()), b.is_scalar());
    first = false;
  }
  return out;
}

template <Field F>
std::string tensor_text(const Tensor2<F>& t) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : t.terms()) {
    const std::string body = to_string(k[0], t.dim()) + " ⊗ " + to_string(k[1], t.dim());
    append_signed(out, first, c, body, false);
    first = false;
  }
  return out;
}

}  // namespace

std::string to_text(const Multivector<Rational>& u) { return multivector_text(u); }
std::string to_text(const Multivector<double>& u) { return multivector_text(u); }
std::string to_text(const Tensor2<Rational>& t) { return tensor_text(t); }
std::string to_text(const Tensor2<double>& t) { return tensor_text(t); }
std::string to_text(const Rational& x) { return ScalarTraits<Rational>::format(x); }
std::string to_text(double x) { return ScalarTraits<double>::format(x); }

}  // namespace gfc
