#pragma once

#include <string>

#include "gfc/tensor.hpp"

namespace gfc {

// Canonical text: a signed sum with blades in ascending mask order, e.g.
// "1 + e1", "- e12", "3/4*e1 - 2*e23", "0". A unit coefficient is omitted on
// non-scalar blades. The output reads back through the expression parser.
std::string to_text(const Multivector<Rational>& u);
std::string to_text(const Multivector<double>& u);

// "e12 ⊗ Id + e1 ⊗ e2 - e2 ⊗ e1 + Id ⊗ e12"; coefficients prefix the pair.
std::string to_text(const Tensor2<Rational>& t);
std::string to_text(const Tensor2<double>& t);

std::string to_text(const Rational& x);
std::string to_text(double x);

}  // namespace gfc
