#pragma once

#include <concepts>

#include "gfc/forms.hpp"
#include "gfc/hopf.hpp"

namespace gfc {

// Anything that pairs two blades into a scalar: ExtendedForm, GeneralBF.
template <class P, class F>
concept BladePairing = requires(const P& p, Blade a, Blade b) {
  { p(a, b) } -> std::convertible_to<F>;
  { p.dim() } -> std::convertible_to<int>;
};

namespace detail {

template <Field F>
void require_dim(int form_dim, const Multivector<F>& u) {
  if (form_dim != u.dim()) {
    throw SignatureMismatch("form of dimension " + std::to_string(form_dim) +
                            " applied to a multivector of dimension " + std::to_string(u.dim()));
  }
}

}  // namespace detail

// a ⌟_B x = Σ B^∧(a, x_(1)) x_(2). Only splits with ∂x_(1) = ∂a contribute.
template <Field F>
Multivector<F> left_contract(const ExtendedForm<F>& form, const Multivector<F>& a,
                             const Multivector<F>& x) {
  require_same_signature(a, x);
  detail::require_dim(form.dim(), a);
  Multivector<F> out(x.dim());
  for (const auto& [ba, ca] : a.terms()) {
    const int r = ba.grade();
    for (const auto& [bx, cx] : x.terms()) {
      if (bx.grade() < r) continue;
      const F weight = ca * cx;
      for_each_split(bx, [&](Blade first, Blade second, int sign) {
        if (first.grade() != r) return;
        F pairing = form(ba, first);
        if (!is_zero(pairing)) out.add_term(second, apply_sign(sign, F(weight * pairing)));
      });
    }
  }
  return out;
}

// a ⌞_B x = Σ a_(1) B^∧(a_(2), x).
template <Field F>
Multivector<F> right_contract(const ExtendedForm<F>& form, const Multivector<F>& a,
                              const Multivector<F>& x) {
  require_same_signature(a, x);
  detail::require_dim(form.dim(), a);
  Multivector<F> out(a.dim());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bx, cx] : x.terms()) {
      const int r = bx.grade();
      if (ba.grade() < r) continue;
      const F weight = ca * cx;
      for_each_split(ba, [&](Blade first, Blade second, int sign) {
        if (second.grade() != r) return;
        F pairing = form(second, bx);
        if (!is_zero(pairing)) out.add_term(first, apply_sign(sign, F(weight * pairing)));
      });
    }
  }
  return out;
}

namespace detail {

template <Field F>
Multivector<F> chevalley_blade(const BilinearForm<F>& b, Blade u, Blade x, int dim);

template <Field F>
Multivector<F> chevalley_linear(const BilinearForm<F>& b, Blade u, const Multivector<F>& x) {
  return map_linear(x, [&](Blade bx) { return chevalley_blade(b, u, bx, x.dim()); });
}

template <Field F>
Multivector<F> chevalley_blade(const BilinearForm<F>& b, Blade u, Blade x, int dim) {
  if (u.is_scalar()) return Multivector<F>::blade(dim, x);
  if (u.grade() == 1) {
    if (x.is_scalar()) return Multivector<F>(dim);
    const int i = u.indices().front();
    // x = e_j ∧ rest with j the lowest index, so no reordering sign.
    const Blade lowest(x.mask() & (~x.mask() + 1u));
    const Blade rest = x ^ lowest;
    const int j = lowest.indices().front();
    // rule ii with rule i on the vector factor: (u ⌟ e_j) rest + ê_j ∧ (u ⌟ rest)
    Multivector<F> out = Multivector<F>::blade(dim, rest, b(i, j));
    out -= wedge(Multivector<F>::blade(dim, lowest), chevalley_blade(b, u, rest, dim));
    return out;
  }
  // rule iii with u = u' ∧ e_last: u ⌟ x = u' ⌟ (e_last ⌟ x)
  const std::vector<int> idx = u.indices();
  const Blade last = Blade::generator(idx.back());
  return chevalley_linear(b, u ^ last, chevalley_blade(b, last, x, dim));
}

}  // namespace detail

// Left contraction computed from the classical recursion on vectors:
//   i)   x ⌟ y = B(x, y)
//   ii)  x ⌟ (u ∧ v) = (x ⌟ u) ∧ v + û ∧ (x ⌟ v)
//   iii) (u ∧ v) ⌟ w = u ⌟ (v ⌟ w)
// The left argument is peeled from its last generator inward. Independent of
// the split enumeration in left_contract; used to cross-check it.
template <Field F>
Multivector<F> chevalley_oracle(const BilinearForm<F>& b, const Multivector<F>& u,
                                const Multivector<F>& x) {
  require_same_signature(u, x);
  detail::require_dim(b.dim(), u);
  Multivector<F> out(x.dim());
  for (const auto& [bu, cu] : u.terms()) {
    Multivector<F> part = detail::chevalley_linear(b, bu, x);
    out += part * cu;
  }
  return out;
}

// Cliffordization (Rota–Stein sausage): u ∘ v = Σ F(u_(2), v_(1)) u_(1) ∧ v_(2).
// Associative and unital exactly when the pairing is exponentially generated.
template <Field F, BladePairing<F> Pairing>
Multivector<F> clifford_product(const Pairing& pairing, const Multivector<F>& u,
                                const Multivector<F>& v) {
  require_same_signature(u, v);
  detail::require_dim(pairing.dim(), u);
  Multivector<F> out(u.dim());
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      const F weight = ca * cb;
      for_each_split(a, [&](Blade a1, Blade a2, int sa) {
        for_each_split(b, [&](Blade b1, Blade b2, int sb) {
          if (!a1.disjoint(b2)) return;
          F p = pairing(a2, b1);
          if (is_zero(p)) return;
          out.add_term(a1 | b2, apply_sign(sa * sb * merge_sign(a1, b2), F(weight * p)));
        });
      });
    }
  }
  return out;
}

// Δ_⌟C(x) = Σ C^∧_(1) ⊗ (C^∧_(2) ∧ x).
template <Field F>
Tensor2<F> left_cocontract(const Tensor2<F>& cx, const Multivector<F>& x) {
  if (cx.dim() != x.dim()) throw SignatureMismatch("coscalar and argument differ in dimension");
  Tensor2<F> out(x.dim());
  for (const auto& [k, c] : cx.terms()) {
    for (const auto& [s, xi] : x.terms()) {
      if (!k[1].disjoint(s)) continue;
      out.add_term({k[0], k[1] | s}, apply_sign(merge_sign(k[1], s), F(c * xi)));
    }
  }
  return out;
}

// Δ_⌞C(x) = Σ (x ∧ C^∧_(1)) ⊗ C^∧_(2).
template <Field F>
Tensor2<F> right_cocontract(const Tensor2<F>& cx, const Multivector<F>& x) {
  if (cx.dim() != x.dim()) throw SignatureMismatch("coscalar and argument differ in dimension");
  Tensor2<F> out(x.dim());
  for (const auto& [k, c] : cx.terms()) {
    for (const auto& [s, xi] : x.terms()) {
      if (!k[0].disjoint(s)) continue;
      out.add_term({s | k[0], k[1]}, apply_sign(merge_sign(s, k[0]), F(c * xi)));
    }
  }
  return out;
}

enum class CoproductRoute {
  // Δ, then Δ_⌟C on the second leg, then wedge the first leg onto C_(1).
  left_cocontraction,
  // Δ, then Δ_⌞C on the first leg, then wedge C_(2) onto the second leg.
  right_cocontraction,
};

// Clifford coproduct Δ_c(x) = Σ (x_(1) ∧ C^∧_(1)) ⊗ (C^∧_(2) ∧ x_(2)).
// The coscalar is inserted between the two legs of Δ(x) without crossing
// either, so no switch sign arises. Both routes give the same tensor.
template <Field F>
Tensor2<F> clifford_coproduct(const Tensor2<F>& cx, const Multivector<F>& x,
                              CoproductRoute route = CoproductRoute::left_cocontraction) {
  if (cx.dim() != x.dim()) throw SignatureMismatch("coscalar and argument differ in dimension");
  const int n = x.dim();
  Tensor2<F> out(n);
  for (const auto& [k, c] : coproduct(x).terms()) {
    if (route == CoproductRoute::left_cocontraction) {
      const Multivector<F> first = Multivector<F>::blade(n, k[0]);
      for (const auto& [t, d] : left_cocontract(cx, Multivector<F>::blade(n, k[1])).terms()) {
        for (const auto& [b, e] : wedge(first, Multivector<F>::blade(n, t[0])).terms()) {
          out.add_term({b, t[1]}, c * d * e);
        }
      }
    } else {
      const Multivector<F> second = Multivector<F>::blade(n, k[1]);
      for (const auto& [t, d] : right_cocontract(cx, Multivector<F>::blade(n, k[0])).terms()) {
        for (const auto& [b, e] : wedge(Multivector<F>::blade(n, t[1]), second).terms()) {
          out.add_term({t[0], b}, c * d * e);
        }
      }
    }
  }
  return out;
}

}  // namespace gfc
