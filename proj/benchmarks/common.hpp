#pragma once

#include <random>

#include "gfc/gfc.hpp"

namespace gfc::bench {

// Dense multivector with small integer coefficients, reproducible per seed.
template <Field F>
Multivector<F> dense(int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  Multivector<F> out(dim);
  for (std::uint32_t m = 0; m < (1u << dim); ++m) out.add_term(Blade(m), F(coeff(rng)));
  return out;
}

template <Field F>
SquareMatrix<F> matrix(int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  SquareMatrix<F> m(dim);
  for (int i = 1; i <= dim; ++i) {
    for (int j = 1; j <= dim; ++j) m(i, j) = F(coeff(rng));
  }
  return m;
}

}  // namespace gfc::bench
