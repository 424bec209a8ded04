#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "gfc/blade.hpp"
#include "gfc/errors.hpp"
#include "gfc/scalar.hpp"
#include "gfc/signature.hpp"

namespace gfc {

// Element of the exterior algebra over a dim-dimensional space: a sparse map
// from basis blades to nonzero coefficients. Equality is term-map equality.
template <Field F>
class Multivector {
 public:
  using scalar_type = F;
  using term_map = std::map<Blade, F>;

  explicit Multivector(int dim) : dim_(checked_dim(dim)) {}

  static Multivector scalar(int dim, const F& value) { return blade(dim, Blade{}, value); }

  static Multivector blade(int dim, Blade b, const F& coeff = F(1)) {
    Multivector out(dim);
    out.add_term(b, coeff);
    return out;
  }

  static Multivector generator(int dim, int index) {
    Blade b = Blade::generator(index);
    if (!b.fits(dim)) {
      throw DomainError("generator e" + std::to_string(index) + " exceeds dimension " +
                        std::to_string(dim));
    }
    return blade(dim, b);
  }

  int dim() const noexcept { return dim_; }
  AlgebraSignature signature() const noexcept { return {dim_, ScalarTraits<F>::mode}; }
  const term_map& terms() const& noexcept { return terms_; }
  // By value on temporaries so that range-for over f(x).terms() stays valid.
  term_map terms() && noexcept { return std::move(terms_); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  F coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? F(0) : it->second;
  }

  // Accumulates coeff · e_b; a coefficient that cancels to zero is erased.
  void add_term(Blade b, const F& coeff) {
    if (!b.fits(dim_)) {
      throw DomainError("blade " + to_string(b, max_dim) + " exceeds dimension " +
                        std::to_string(dim_));
    }
    if (gfc::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(b, coeff);
    if (!inserted) {
      it->second += coeff;
      if (gfc::is_zero(it->second)) terms_.erase(it);
    }
  }

  Multivector& operator+=(const Multivector& o) {
    require_same(o);
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }

  Multivector& operator-=(const Multivector& o) {
    require_same(o);
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }

  Multivector& operator*=(const F& s) {
    if (gfc::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c *= s;
    return *this;
  }

  Multivector operator-() const {
    Multivector out(*this);
    for (auto& [b, c] : out.terms_) c = -c;
    return out;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const F& s) { return a *= s; }
  friend Multivector operator*(const F& s, Multivector a) { return a *= s; }

  friend bool operator==(const Multivector&, const Multivector&) = default;

  void require_same(const Multivector& o) const {
    if (o.dim_ != dim_) {
      throw SignatureMismatch("operands belong to algebras of dimension " + std::to_string(dim_) +
                              " and " + std::to_string(o.dim_));
    }
  }

 private:
  int dim_;
  term_map terms_;
};

template <Field F>
void require_same_signature(const Multivector<F>& a, const Multivector<F>& b) {
  a.require_same(b);
}

// Exterior product. Overlapping blades vanish; disjoint ones pick up the
// parity of the merge into ascending order.
template <Field F>
Multivector<F> wedge(const Multivector<F>& u, const Multivector<F>& v) {
  require_same_signature(u, v);
  Multivector<F> out(u.dim());
  for (const auto& [a, x] : u.terms()) {
    for (const auto& [b, y] : v.terms()) {
      if (!a.disjoint(b)) continue;
      out.add_term(a | b, apply_sign(merge_sign(a, b), F(x * y)));
    }
  }
  return out;
}

template <Field F>
Multivector<F> grade_project(const Multivector<F>& u, int k) {
  if (k < 0 || k > u.dim()) {
    throw DomainError("grade " + std::to_string(k) + " outside 0.." + std::to_string(u.dim()));
  }
  Multivector<F> out(u.dim());
  for (const auto& [b, c] : u.terms()) {
    if (b.grade() == k) out.add_term(b, c);
  }
  return out;
}

// û = (-1)^{grade} u, termwise.
template <Field F>
Multivector<F> grade_involution(const Multivector<F>& u) {
  Multivector<F> out(u.dim());
  for (const auto& [b, c] : u.terms()) out.add_term(b, apply_sign(b.grade() & 1 ? -1 : 1, c));
  return out;
}

// Linear extension of a blade-level map fn: Blade -> Multivector<F>.
template <Field F, class Fn>
Multivector<F> map_linear(const Multivector<F>& u, Fn&& fn) {
  Multivector<F> out(u.dim());
  for (const auto& [b, c] : u.terms()) {
    for (const auto& [r, d] : fn(b).terms()) out.add_term(r, c * d);
  }
  return out;
}


}  // namespace gfc
