#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gfc/matrix.hpp"
#include "gfc/multivector.hpp"
#include "gfc/tensor.hpp"

namespace gfc {

// B(e_i, e_j) on generators. No symmetry or nondegeneracy is assumed.
template <Field F>
class BilinearForm {
 public:
  explicit BilinearForm(SquareMatrix<F> entries) : entries_(std::move(entries)) {}
  explicit BilinearForm(std::vector<std::vector<F>> rows) : entries_(std::move(rows)) {}

  int dim() const noexcept { return entries_.dim(); }
  const F& operator()(int i, int j) const { return entries_(i, j); }
  const SquareMatrix<F>& matrix() const noexcept { return entries_; }

 private:
  SquareMatrix<F> entries_;
};

// Coscalar product C = Σ C[i][j] e_i ⊗ e_j.
template <Field F>
class Coscalar {
 public:
  explicit Coscalar(SquareMatrix<F> entries) : entries_(std::move(entries)) {}
  explicit Coscalar(std::vector<std::vector<F>> rows) : entries_(std::move(rows)) {}

  int dim() const noexcept { return entries_.dim(); }
  const F& operator()(int i, int j) const { return entries_(i, j); }
  const SquareMatrix<F>& matrix() const noexcept { return entries_; }

  Tensor2<F> as_tensor() const {
    Tensor2<F> out(dim());
    for (int i = 1; i <= dim(); ++i) {
      for (int j = 1; j <= dim(); ++j) {
        out.add_term({Blade::generator(i), Blade::generator(j)}, entries_(i, j));
      }
    }
    return out;
  }

 private:
  SquareMatrix<F> entries_;
};

// B^∧ = exp_∧(B): the canonically induced pairing of blades,
//   B^∧(e_{i1<...<ir}, e_{j1<...<jr}) = det M,  M[k][l] = B(e_{i_{r+1-k}}, e_{j_l}),
// i.e. rows taken in descending first-factor order. Zero across unequal grades.
//
// Values are memoized per blade pair. Copies share the cache; concurrent reads
// are safe and each key is inserted at most once.
template <Field F>
class ExtendedForm {
 public:
  explicit ExtendedForm(BilinearForm<F> base)
      : base_(std::make_shared<const BilinearForm<F>>(std::move(base))),
        cache_(std::make_shared<Cache>()) {}

  int dim() const noexcept { return base_->dim(); }
  const BilinearForm<F>& base() const noexcept { return *base_; }

  F operator()(Blade a, Blade b) const {
    if (a.grade() != b.grade()) return F(0);
    if (a.is_scalar()) return F(1);
    const std::uint32_t key = (a.mask() << 16) | b.mask();
    {
      std::shared_lock lock(cache_->mutex);
      if (auto it = cache_->values.find(key); it != cache_->values.end()) return it->second;
    }
    F value = compute(a, b);
    std::unique_lock lock(cache_->mutex);
    return cache_->values.try_emplace(key, std::move(value)).first->second;
  }

  std::size_t cached_entries() const {
    std::shared_lock lock(cache_->mutex);
    return cache_->values.size();
  }

 private:
  struct Cache {
    mutable std::shared_mutex mutex;
    std::unordered_map<std::uint32_t, F> values;
  };

  F compute(Blade a, Blade b) const {
    std::vector<int> rows = a.indices();
    std::vector<int> cols = b.indices();
    const int k = static_cast<int>(rows.size());
    std::vector<F> m;
    m.reserve(k * k);
    for (int r = k - 1; r >= 0; --r) {
      for (int c = 0; c < k; ++c) m.push_back((*base_)(rows[r], cols[c]));
    }
    return determinant(std::move(m), k);
  }

  std::shared_ptr<const BilinearForm<F>> base_;
  std::shared_ptr<Cache> cache_;
};

template <Field F>
ExtendedForm<F> extend_form(BilinearForm<F> b) {
  return ExtendedForm<F>(std::move(b));
}

// Bilinear extension of B^∧ to multivectors.
template <Field F>
F eval_extended(const ExtendedForm<F>& form, const Multivector<F>& u, const Multivector<F>& v) {
  require_same_signature(u, v);
  if (u.dim() != form.dim()) throw SignatureMismatch("form and multivectors differ in dimension");
  F sum(0);
  for (const auto& [a, x] : u.terms()) {
    for (const auto& [b, y] : v.terms()) {
      if (a.grade() != b.grade()) continue;
      F value = form(a, b);
      if (!is_zero(value)) sum += x * y * value;
    }
  }
  return sum;
}

// C^∧ = Σ_{k=0..n} C^{·k} / k!, powers taken in the graded tensor product
// (u ⊗ v)(u' ⊗ v') = (-1)^{∂v ∂u'} (u ∧ u') ⊗ (v ∧ v'). Needs exact scalars.
template <Field F>
Tensor2<F> extend_coscalar(const Coscalar<F>& c) {
  if constexpr (!ScalarTraits<F>::exact) {
    throw UnsupportedScalarMode("coscalar extension needs exact rational scalars");
  } else {
    const int n = c.dim();
    const Tensor2<F> generator_part = c.as_tensor();
    Tensor2<F> power(n);
    power.add_term({Blade{}, Blade{}}, F(1));
    Tensor2<F> out = power;
    F factorial(1);
    for (int k = 1; k <= n && !power.is_zero(); ++k) {
      power = wedge_tensor(power, generator_part);
      factorial *= F(k);
      out += power * (F(1) / factorial);
    }
    return out;
  }
}

// Arbitrary pairing of blades given by a table; absent entries are zero.
// Not exponentially generated in general.
template <Field F>
class GeneralBF {
 public:
  using table_type = std::map<std::pair<Blade, Blade>, F>;

  explicit GeneralBF(int dim) : dim_(checked_dim(dim)) {}
  GeneralBF(int dim, table_type table) : dim_(checked_dim(dim)) {
    for (auto& [k, v] : table) set(k.first, k.second, std::move(v));
  }

  // Tabulates B^∧ on every pair of equal-grade blades.
  static GeneralBF tabulate(const ExtendedForm<F>& form) {
    GeneralBF out(form.dim());
    const std::uint32_t count = 1u << form.dim();
    for (std::uint32_t a = 0; a < count; ++a) {
      for (std::uint32_t b = 0; b < count; ++b) {
        if (Blade(a).grade() == Blade(b).grade()) out.set(Blade(a), Blade(b), form(Blade(a), Blade(b)));
      }
    }
    return out;
  }

  int dim() const noexcept { return dim_; }
  const table_type& table() const noexcept { return table_; }

  void set(Blade a, Blade b, F value) {
    if (!a.fits(dim_) || !b.fits(dim_)) throw DomainError("table entry exceeds dimension");
    if (is_zero(value)) {
      table_.erase({a, b});
    } else {
      table_.insert_or_assign({a, b}, std::move(value));
    }
  }

  F operator()(Blade a, Blade b) const {
    auto it = table_.find({a, b});
    return it == table_.end() ? F(0) : it->second;
  }

 private:
  int dim_;
  table_type table_;
};

template <Field F>
GeneralBF<F> general_bf(int dim, typename GeneralBF<F>::table_type table) {
  return GeneralBF<F>(dim, std::move(table));
}

extern template class ExtendedForm<Rational>;
extern template class ExtendedForm<double>;
extern template class GeneralBF<Rational>;
extern template class GeneralBF<double>;

}  // namespace gfc
