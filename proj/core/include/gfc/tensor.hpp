#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "gfc/multivector.hpp"

namespace gfc {

// Element of the N-fold tensor power of the exterior algebra, kept in its
// canonical blade ⊗ ... ⊗ blade expansion. Two tensors are equal iff they are
// equal as elements of the tensor power.
template <Field F, std::size_t N>
class Tensor {
 public:
  using key_type = std::array<Blade, N>;
  using term_map = std::map<key_type, F>;

  explicit Tensor(int dim) : dim_(checked_dim(dim)) {}

  int dim() const noexcept { return dim_; }
  const term_map& terms() const& noexcept { return terms_; }
  // By value on temporaries so that range-for over f(x).terms() stays valid.
  term_map terms() && noexcept { return std::move(terms_); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  F coefficient(const key_type& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? F(0) : it->second;
  }

  void add_term(const key_type& k, const F& coeff) {
    for (Blade b : k) {
      if (!b.fits(dim_)) throw DomainError("tensor leg exceeds dimension " + std::to_string(dim_));
    }
    if (gfc::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(k, coeff);
    if (!inserted) {
      it->second += coeff;
      if (gfc::is_zero(it->second)) terms_.erase(it);
    }
  }

  Tensor& operator+=(const Tensor& o) {
    require_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    require_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  Tensor& operator*=(const F& s) {
    if (gfc::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  Tensor operator-() const {
    Tensor out(*this);
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const F& s) { return a *= s; }
  friend Tensor operator*(const F& s, Tensor a) { return a *= s; }
  friend bool operator==(const Tensor&, const Tensor&) = default;

  void require_same(const Tensor& o) const {
    if (o.dim_ != dim_) {
      throw SignatureMismatch("tensors belong to algebras of dimension " + std::to_string(dim_) +
                              " and " + std::to_string(o.dim_));
    }
  }

 private:
  int dim_;
  term_map terms_;
};

// Sweedler representation x_(1) ⊗ x_(2).
template <Field F>
using Tensor2 = Tensor<F, 2>;
template <Field F>
using Tensor3 = Tensor<F, 3>;

// u ⊗ v.
template <Field F>
Tensor2<F> tensor(const Multivector<F>& u, const Multivector<F>& v) {
  require_same_signature(u, v);
  Tensor2<F> out(u.dim());
  for (const auto& [a, x] : u.terms()) {
    for (const auto& [b, y] : v.terms()) out.add_term({a, b}, x * y);
  }
  return out;
}

// The tensor as a list of (left, right) pairs of multivectors; the left leg is
// a bare blade and the coefficient (including the split sign) sits on the right.
template <Field F>
std::vector<std::pair<Multivector<F>, Multivector<F>>> sweedler_pairs(const Tensor2<F>& t) {
  std::vector<std::pair<Multivector<F>, Multivector<F>>> out;
  out.reserve(t.size());
  for (const auto& [k, c] : t.terms()) {
    out.emplace_back(Multivector<F>::blade(t.dim(), k[0]), Multivector<F>::blade(t.dim(), k[1], c));
  }
  return out;
}

// τ̂(A ⊗ B) = (-1)^{∂A ∂B} B ⊗ A on homogeneous components.
template <Field F>
Tensor2<F> graded_switch(const Tensor2<F>& t) {
  Tensor2<F> out(t.dim());
  for (const auto& [k, c] : t.terms()) {
    out.add_term({k[1], k[0]}, apply_sign(koszul_sign(k[0].grade(), k[1].grade()), c));
  }
  return out;
}

// m(x ⊗ y) = x ∧ y.
template <Field F>
Multivector<F> multiply(const Tensor2<F>& t) {
  Multivector<F> out(t.dim());
  for (const auto& [k, c] : t.terms()) {
    if (k[0].disjoint(k[1])) out.add_term(k[0] | k[1], apply_sign(merge_sign(k[0], k[1]), c));
  }
  return out;
}

// (m ⊗ m)(id ⊗ τ̂ ⊗ id)(s ⊗ t): the componentwise graded product
// (u ⊗ v)(u' ⊗ v') = (-1)^{∂v ∂u'} (u ∧ u') ⊗ (v ∧ v').
template <Field F>
Tensor2<F> wedge_tensor(const Tensor2<F>& s, const Tensor2<F>& t) {
  s.require_same(t);
  Tensor2<F> out(s.dim());
  for (const auto& [a, x] : s.terms()) {
    for (const auto& [b, y] : t.terms()) {
      if (!a[0].disjoint(b[0]) || !a[1].disjoint(b[1])) continue;
      int sign = koszul_sign(a[1].grade(), b[0].grade()) * merge_sign(a[0], b[0]) *
                 merge_sign(a[1], b[1]);
      out.add_term({a[0] | b[0], a[1] | b[1]}, apply_sign(sign, F(x * y)));
    }
  }
  return out;
}

// (f ⊗ id)(t) for a linear form given on blades.
template <Field F, class Form>
Multivector<F> evaluate_left(const Tensor2<F>& t, Form&& f) {
  Multivector<F> out(t.dim());
  for (const auto& [k, c] : t.terms()) {
    F v = f(k[0]);
    if (!gfc::is_zero(v)) out.add_term(k[1], c * v);
  }
  return out;
}

// (id ⊗ f)(t).
template <Field F, class Form>
Multivector<F> evaluate_right(const Tensor2<F>& t, Form&& f) {
  Multivector<F> out(t.dim());
  for (const auto& [k, c] : t.terms()) {
    F v = f(k[1]);
    if (!gfc::is_zero(v)) out.add_term(k[0], c * v);
  }
  return out;
}

// (f ⊗ g)(t) for blade-level endomorphisms f, g: Blade -> Multivector<F>.
template <Field F, class Left, class Right>
Tensor2<F> map_legs(const Tensor2<F>& t, Left&& f, Right&& g) {
  Tensor2<F> out(t.dim());
  for (const auto& [k, c] : t.terms()) {
    Multivector<F> l = f(k[0]);
    Multivector<F> r = g(k[1]);
    for (const auto& [a, x] : l.terms()) {
      for (const auto& [b, y] : r.terms()) out.add_term({a, b}, c * x * y);
    }
  }
  return out;
}

// (d ⊗ id)(t) for a blade-level coproduct d: Blade -> Tensor2<F>.
template <Field F, class Coproduct>
Tensor3<F> expand_left(const Tensor2<F>& t, Coproduct&& d) {
  Tensor3<F> out(t.dim());
  for (const auto& [k, c] : t.terms()) {
    const Tensor2<F> split = d(k[0]);
    for (const auto& [p, x] : split.terms()) out.add_term({p[0], p[1], k[1]}, c * x);
  }
  return out;
}

// (id ⊗ d)(t).
template <Field F, class Coproduct>
Tensor3<F> expand_right(const Tensor2<F>& t, Coproduct&& d) {
  Tensor3<F> out(t.dim());
  for (const auto& [k, c] : t.terms()) {
    const Tensor2<F> split = d(k[1]);
    for (const auto& [p, x] : split.terms()) out.add_term({k[0], p[0], p[1]}, c * x);
  }
  return out;
}


}  // namespace gfc
