#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gfc/gfc.hpp"

namespace gfc::testing {

using Q = Rational;
using MV = Multivector<Q>;
using T2 = Tensor2<Q>;

// Seeded source of small random algebraic data. Every suite owns one, so runs
// are reproducible.
class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  // Small integers with the occasional fraction, zero included.
  Q scalar(int range = 3) {
    Q numerator(integer(-range, range));
    if (chance(0.2)) return numerator / Q(integer(2, 4));
    return numerator;
  }

  Q nonzero_scalar(int range = 3) {
    Q s;
    do {
      s = scalar(range);
    } while (s.is_zero());
    return s;
  }

  Blade blade(int dim) { return Blade(static_cast<std::uint32_t>(integer(0, (1 << dim) - 1))); }

  Blade blade_of_grade(int dim, int grade) {
    while (true) {
      Blade b = blade(dim);
      if (b.grade() == grade) return b;
    }
  }

  // Sparse multivector with up to max_terms random blades.
  MV multivector(int dim, int max_terms = 4) {
    MV out(dim);
    const int terms = integer(1, max_terms);
    for (int i = 0; i < terms; ++i) out.add_term(blade(dim), nonzero_scalar());
    return out;
  }

  MV vector(int dim) {
    MV out(dim);
    for (int i = 1; i <= dim; ++i) out.add_term(Blade::generator(i), scalar());
    return out;
  }

  SquareMatrix<Q> matrix(int dim, int range = 3) {
    SquareMatrix<Q> m(dim);
    for (int i = 1; i <= dim; ++i) {
      for (int j = 1; j <= dim; ++j) m(i, j) = scalar(range);
    }
    return m;
  }

  // Cycles through generic, symmetric, antisymmetric and singular matrices.
  SquareMatrix<Q> form_matrix(int dim, int variant) {
    SquareMatrix<Q> m = matrix(dim);
    switch (variant % 4) {
      case 1:
        for (int i = 1; i <= dim; ++i) {
          for (int j = 1; j < i; ++j) m(i, j) = m(j, i);
        }
        break;
      case 2:
        for (int i = 1; i <= dim; ++i) {
          m(i, i) = Q(0);
          for (int j = 1; j < i; ++j) m(i, j) = -m(j, i);
        }
        break;
      case 3:
        // last row a multiple of the first: rank deficient for dim >= 2,
        // and the zero matrix for dim == 1.
        for (int j = 1; j <= dim; ++j) m(dim, j) = dim == 1 ? Q(0) : Q(2) * m(1, j);
        break;
      default:
        break;
    }
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// All basis blades of a dim-dimensional algebra in ascending mask order.
inline std::vector<Blade> basis(int dim) {
  std::vector<Blade> out;
  for (std::uint32_t m = 0; m < (1u << dim); ++m) out.emplace_back(m);
  return out;
}

inline MV unit_blade(int dim, Blade b) { return MV::blade(dim, b); }

// Builds a multivector from (indices, coefficient) terms.
inline MV make(int dim, std::initializer_list<std::pair<std::vector<int>, Q>> terms) {
  MV out(dim);
  for (const auto& [idx, c] : terms) out.add_term(Blade::from_indices(idx), c);
  return out;
}

inline T2 make_tensor(int dim,
                      std::initializer_list<std::tuple<std::vector<int>, std::vector<int>, Q>> terms) {
  T2 out(dim);
  for (const auto& [l, r, c] : terms) out.add_term({Blade::from_indices(l), Blade::from_indices(r)}, c);
  return out;
}

}  // namespace gfc::testing
