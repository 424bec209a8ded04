#pragma once

#include "gfc/hopf.hpp"

namespace gfc {

// join is the exterior product: nonzero only on disjoint supports.
template <Field F>
Multivector<F> join(const Multivector<F>& a, const Multivector<F>& b) {
  return wedge(a, b);
}

// A ∨ B = Σ [B_(1), A] B_(2). Only splits whose first block complements a
// blade of A survive, so the meet of non-spanning supports is zero.
template <Field F>
Multivector<F> meet(const Multivector<F>& a, const Multivector<F>& b) {
  require_same_signature(a, b);
  const Blade top = Blade::full(a.dim());
  Multivector<F> out(a.dim());
  for (const auto& [bb, cb] : b.terms()) {
    for_each_split(bb, [&](Blade first, Blade second, int split_sign) {
      auto it = a.terms().find(top ^ first);
      if (it == a.terms().end()) return;
      int sign = split_sign * merge_sign(first, it->first);
      out.add_term(second, apply_sign(sign, F(cb * it->second)));
    });
  }
  return out;
}

// Δ_∨(x) = Σ ω_(1) ⊗ (x ∧ ω_(2)) with ω the cointegral. Coassociative with
// counit μ on both sides.
template <Field F>
Tensor2<F> comeet(const Multivector<F>& x) {
  const Blade top = Blade::full(x.dim());
  Tensor2<F> out(x.dim());
  for (const auto& [s, c] : x.terms()) {
    // ω_(2) must avoid s; ω_(1) is then the complement of ω_(2).
    for_each_subblade(top ^ s, [&](Blade second) {
      Blade first = top ^ second;
      int sign = merge_sign(first, second) * merge_sign(s, second);
      out.add_term({first, s | second}, apply_sign(sign, c));
    });
  }
  return out;
}

// The cojoin is the Graßmann coproduct.
template <Field F>
Tensor2<F> cojoin(const Multivector<F>& x) {
  return coproduct(x);
}

// Meet taken with respect to the meet: ∨ as product, Δ_∨ as its split
// coproduct and ε (coefficient of the ∨-top element Id) as integral,
// A ⋏ B = Σ ε(B'_(1) ∨ A) B'_(2) with B'_(1) ⊗ B'_(2) = Δ_∨(B). Agrees with
// A ∧ B up to the sign (-1)^{r(n-r-s)} for grades r, s.
template <Field F>
Multivector<F> double_meet(const Multivector<F>& a, const Multivector<F>& b) {
  require_same_signature(a, b);
  Multivector<F> out(a.dim());
  for (const auto& [k, c] : comeet(b).terms()) {
    F pairing = counit(meet(Multivector<F>::blade(a.dim(), k[0]), a));
    if (!gfc::is_zero(pairing)) out.add_term(k[1], c * pairing);
  }
  return out;
}

}  // namespace gfc
