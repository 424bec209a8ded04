#pragma once

#include <span>

#include "gfc/multivector.hpp"
#include "gfc/tensor.hpp"

namespace gfc {

// Enumerates the 2^|b| ordered splits of a blade into two blocks that keep
// ascending order: fn(left, right, sign) with e_left ∧ e_right = sign · e_b.
template <class Fn>
void for_each_split(Blade b, Fn&& fn) {
  for_each_subblade(b, [&](Blade left) {
    Blade right = b ^ left;
    fn(left, right, merge_sign(left, right));
  });
}

// Δ(e_S) = Σ sign(S1, S2) e_S1 ⊗ e_S2 over all ordered disjoint splits of S.
template <Field F>
Tensor2<F> coproduct(const Multivector<F>& u) {
  Tensor2<F> out(u.dim());
  for (const auto& [b, c] : u.terms()) {
    for_each_split(b, [&](Blade l, Blade r, int sign) { out.add_term({l, r}, apply_sign(sign, c)); });
  }
  return out;
}

// ε: coefficient of the unit.
template <Field F>
F counit(const Multivector<F>& u) {
  return u.coefficient(Blade{});
}

// S = grade involution; satisfies S(x_(1)) ∧ x_(2) = ε(x) Id = x_(1) ∧ S(x_(2)).
template <Field F>
Multivector<F> antipode(const Multivector<F>& u) {
  return grade_involution(u);
}

// μ: coefficient of e_1 ∧ ... ∧ e_n, the unique left and right integral.
template <Field F>
F integral(const Multivector<F>& u) {
  return u.coefficient(Blade::full(u.dim()));
}

// ω = e_1 ∧ ... ∧ e_n, normalized so that μ(ω) = 1.
template <Field F>
Multivector<F> cointegral(int dim) {
  return Multivector<F>::blade(dim, Blade::full(checked_dim(dim)));
}

// [A_0, ..., A_s] = μ(A_0 ∧ ... ∧ A_s). Vanishes unless the total degree is n.
template <Field F>
F bracket(std::span<const Multivector<F>> args) {
  if (args.empty()) throw DomainError("bracket needs at least one argument");
  Multivector<F> acc = args.front();
  for (const auto& a : args.subspan(1)) acc = wedge(acc, a);
  return integral(acc);
}

template <Field F>
F bracket(const Multivector<F>& a, const Multivector<F>& b) {
  require_same_signature(a, b);
  const Blade top = Blade::full(a.dim());
  F sum(0);
  for (const auto& [x, c] : a.terms()) {
    auto it = b.terms().find(top ^ x);
    if (it != b.terms().end()) sum += apply_sign(merge_sign(x, it->first), F(c * it->second));
  }
  return sum;
}

// Convolution of endomorphisms (f ⋆ g)(x) = m (f ⊗ g) Δ(x), with f and g
// given on blades (Blade -> Multivector<F>).
template <Field F, class Left, class Right>
Multivector<F> convolve(Left&& f, Right&& g, const Multivector<F>& x) {
  return multiply(map_legs(coproduct(x), f, g));
}

}  // namespace gfc
