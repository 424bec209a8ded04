#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gfc/contraction.hpp"

namespace gfc {

// Linear form on the exterior algebra, stored densely by blade mask.
template <Field F>
class Cochain {
 public:
  explicit Cochain(int dim) : dim_(checked_dim(dim)), values_(std::size_t{1} << dim_, F(0)) {}

  Cochain(int dim, std::vector<F> values) : dim_(checked_dim(dim)), values_(std::move(values)) {
    if (values_.size() != (std::size_t{1} << dim_)) {
      throw DomainError("cochain table must have 2^dim entries");
    }
  }

  int dim() const noexcept { return dim_; }
  const F& operator()(Blade b) const { return values_.at(b.mask()); }
  void set(Blade b, F value) { values_.at(b.mask()) = std::move(value); }

  F operator()(const Multivector<F>& x) const {
    if (x.dim() != dim_) throw SignatureMismatch("cochain and argument differ in dimension");
    F sum(0);
    for (const auto& [b, c] : x.terms()) sum += c * values_[b.mask()];
    return sum;
  }

  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  int dim_;
  std::vector<F> values_;
};

// p(Id) = 1, p(e_i) = 0, p(e_i ∧ e_j) = P[i][j] for i < j, extended to every
// blade by the Laplace property with Graßmann split signs. Peeling the lowest
// index s_1 gives p(e_S) = Σ_k (-1)^{k} P[s_1][s_k] p(e_{S∖{s_1,s_k}}), the
// Pfaffian of the upper triangle. Odd grades vanish; entries on or below the
// diagonal are never read.
template <Field F>
Cochain<F> cochain_extend(const SquareMatrix<F>& p_matrix) {
  if constexpr (!ScalarTraits<F>::exact) {
    throw UnsupportedScalarMode("cochain extension needs exact rational scalars");
  } else {
    const int n = p_matrix.dim();
    Cochain<F> p(n);
    p.set(Blade{}, F(1));
    const std::uint32_t count = 1u << n;
    for (std::uint32_t mask = 1; mask < count; ++mask) {
      const Blade s(mask);
      if (s.grade() & 1) continue;
      const std::vector<int> idx = s.indices();
      const Blade head = Blade::generator(idx.front());
      F value(0);
      for (std::size_t k = 1; k < idx.size(); ++k) {
        const F& entry = p_matrix(idx.front(), idx[k]);
        if (is_zero(entry)) continue;
        const Blade rest = s ^ head ^ Blade::generator(idx[k]);
        // moving s_k next to s_1 passes k - 1 generators
        value += apply_sign(k % 2 == 1 ? 1 : -1, F(entry * p(rest)));
      }
      p.set(s, std::move(value));
    }
    return p;
  }
}

// (p ⋆ q)(x) = p(x_(1)) q(x_(2)) for linear forms.
template <Field F>
Cochain<F> convolve(const Cochain<F>& p, const Cochain<F>& q) {
  if (p.dim() != q.dim()) throw SignatureMismatch("cochains differ in dimension");
  Cochain<F> out(p.dim());
  const std::uint32_t count = 1u << p.dim();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    F sum(0);
    for_each_split(Blade(mask), [&](Blade first, Blade second, int sign) {
      sum += apply_sign(sign, F(p(first) * q(second)));
    });
    out.set(Blade(mask), std::move(sum));
  }
  return out;
}

// The convolution unit ε as a cochain.
template <Field F>
Cochain<F> counit_cochain(int dim) {
  Cochain<F> out(dim);
  out.set(Blade{}, F(1));
  return out;
}

// q with p ⋆ q = ε, by recursion on the grade:
//   q(Id) = 1,  q(e_S) = -Σ_{S_1 ≠ ∅} sign(S_1, S_2) p(e_{S_1}) q(e_{S_2}).
// Every q(e_{S_2}) on the right has S_2 ⊊ S, hence a smaller mask.
template <Field F>
Cochain<F> convolution_inverse(const Cochain<F>& p) {
  if (p(Blade{}) != F(1)) throw DomainError("convolution inverse needs p(Id) = 1");
  Cochain<F> q(p.dim());
  q.set(Blade{}, F(1));
  const std::uint32_t count = 1u << p.dim();
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    F sum(0);
    for_each_split(Blade(mask), [&](Blade first, Blade second, int sign) {
      if (first.is_scalar()) return;
      const F& value = p(first);
      if (!is_zero(value)) sum += apply_sign(sign, F(value * q(second)));
    });
    q.set(Blade(mask), -sum);
  }
  return q;
}

// 𝒫(x) = p(x_(1)) x_(2), i.e. p ⋆ id.
template <Field F>
Multivector<F> p_operator(const Cochain<F>& p, const Multivector<F>& x) {
  if (x.dim() != p.dim()) throw SignatureMismatch("cochain and argument differ in dimension");
  Multivector<F> out(x.dim());
  for (const auto& [b, c] : x.terms()) {
    for_each_split(b, [&](Blade first, Blade second, int sign) {
      const F& value = p(first);
      if (!is_zero(value)) out.add_term(second, apply_sign(sign, F(c * value)));
    });
  }
  return out;
}

// id ⋆ p: x_(1) p(x_(2)). Equal to p ⋆ id when p vanishes on odd grades.
template <Field F>
Multivector<F> p_operator_right(const Cochain<F>& p, const Multivector<F>& x) {
  if (x.dim() != p.dim()) throw SignatureMismatch("cochain and argument differ in dimension");
  Multivector<F> out(x.dim());
  for (const auto& [b, c] : x.terms()) {
    for_each_split(b, [&](Blade first, Blade second, int sign) {
      const F& value = p(second);
      if (!is_zero(value)) out.add_term(first, apply_sign(sign, F(c * value)));
    });
  }
  return out;
}

// 𝒫⁻¹ = p⁻¹ ⋆ id.
template <Field F>
Multivector<F> p_inverse_operator(const Cochain<F>& p, const Multivector<F>& x) {
  return p_operator(convolution_inverse(p), x);
}

// A cochain bundled with its convolution inverse, so that repeated circle
// products do not recompute it.
template <Field F>
struct CochainPair {
  Cochain<F> p;
  Cochain<F> inverse;

  explicit CochainPair(Cochain<F> value)
      : p(std::move(value)), inverse(convolution_inverse(p)) {}
};

// x ∘ᵖ y = 𝒫⁻¹(𝒫(x) ∧ 𝒫(y)).
template <Field F>
Multivector<F> circle_product(const CochainPair<F>& pair, const Multivector<F>& x,
                              const Multivector<F>& y) {
  require_same_signature(x, y);
  return p_operator(pair.inverse, wedge(p_operator(pair.p, x), p_operator(pair.p, y)));
}

template <Field F>
Multivector<F> circle_product(const Cochain<F>& p, const Multivector<F>& x,
                              const Multivector<F>& y) {
  return circle_product(CochainPair<F>(p), x, y);
}

// The 2-cocycle ∂P and its inverse as dense blade-pair tables.
template <Field F>
struct CocycleForm {
  GeneralBF<F> forward;
  GeneralBF<F> inverse;
};

namespace detail {

// Σ a(u_(1)) a(v_(2)) b(u_(2) ∧ v_(1)) over both split sums.
template <Field F>
F coboundary_entry(const Cochain<F>& a, const Cochain<F>& b, Blade u, Blade v) {
  F sum(0);
  for_each_split(u, [&](Blade u1, Blade u2, int su) {
    const F& au = a(u1);
    if (is_zero(au)) return;
    for_each_split(v, [&](Blade v1, Blade v2, int sv) {
      if (!u2.disjoint(v1)) return;
      const F& av = a(v2);
      if (is_zero(av)) return;
      const F& bm = b(u2 | v1);
      if (is_zero(bm)) return;
      sum += apply_sign(su * sv * merge_sign(u2, v1), F(au * av * bm));
    });
  });
  return sum;
}

}  // namespace detail

// ∂P(u, v) = p(u_(1)) p(v_(2)) p⁻¹(u_(2) ∧ v_(1)); ∂P⁻¹ swaps the roles of
// p and p⁻¹. Dense over all 4^n blade pairs.
template <Field F>
CocycleForm<F> coboundary(const CochainPair<F>& pair) {
  const int n = pair.p.dim();
  CocycleForm<F> out{GeneralBF<F>(n), GeneralBF<F>(n)};
  const std::uint32_t count = 1u << n;
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = 0; b < count; ++b) {
      out.forward.set(Blade(a), Blade(b), detail::coboundary_entry(pair.p, pair.inverse, Blade(a), Blade(b)));
      out.inverse.set(Blade(a), Blade(b), detail::coboundary_entry(pair.inverse, pair.p, Blade(a), Blade(b)));
    }
  }
  return out;
}

template <Field F>
CocycleForm<F> coboundary(const Cochain<F>& p) {
  return coboundary(CochainPair<F>(p));
}

// First blade pair (x, y) with x ∘ᵖ y ≠ cliffordization of x, y by ∂P, or
// nothing when the owl equality holds on every basis pair.
template <Field F>
std::optional<std::pair<Blade, Blade>> owl_counterexample(const CochainPair<F>& pair,
                                                          const CocycleForm<F>& form) {
  const int n = pair.p.dim();
  const std::uint32_t count = 1u << n;
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = 0; b < count; ++b) {
      const auto x = Multivector<F>::blade(n, Blade(a));
      const auto y = Multivector<F>::blade(n, Blade(b));
      if (circle_product(pair, x, y) != clifford_product<F>(form.forward, x, y)) {
        return std::pair{Blade(a), Blade(b)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace gfc
