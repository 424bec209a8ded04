#pragma once

#include <utility>
#include <vector>

#include "gfc/errors.hpp"
#include "gfc/scalar.hpp"
#include "gfc/signature.hpp"

namespace gfc {

// Dense dim × dim matrix with 1-based indexing to match generator labels.
template <Field F>
class SquareMatrix {
 public:
  explicit SquareMatrix(int dim) : dim_(checked_dim(dim)), entries_(dim * dim, F(0)) {}

  explicit SquareMatrix(std::vector<std::vector<F>> rows) : SquareMatrix(static_cast<int>(rows.size())) {
    for (int i = 0; i < dim_; ++i) {
      if (static_cast<int>(rows[i].size()) != dim_) {
        throw DomainError("matrix is not square: row " + std::to_string(i + 1) + " has " +
                          std::to_string(rows[i].size()) + " entries, expected " +
                          std::to_string(dim_));
      }
      for (int j = 0; j < dim_; ++j) entries_[i * dim_ + j] = std::move(rows[i][j]);
    }
  }

  static SquareMatrix identity(int dim) {
    SquareMatrix m(dim);
    for (int i = 1; i <= dim; ++i) m(i, i) = F(1);
    return m;
  }

  int dim() const noexcept { return dim_; }
  const F& operator()(int i, int j) const { return entries_[(i - 1) * dim_ + (j - 1)]; }
  F& operator()(int i, int j) { return entries_[(i - 1) * dim_ + (j - 1)]; }

  SquareMatrix transposed() const {
    SquareMatrix t(dim_);
    for (int i = 1; i <= dim_; ++i) {
      for (int j = 1; j <= dim_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  int dim_;
  std::vector<F> entries_;
};

// Determinant by Gaussian elimination; m is k × k in row-major order.
template <Field F>
F determinant(std::vector<F> m, int k) {
  F det(1);
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    if constexpr (ScalarTraits<F>::exact) {
      for (int r = col; r < k; ++r) {
        if (!is_zero(m[r * k + col])) {
          pivot = r;
          break;
        }
      }
    } else {
      F best(0);
      for (int r = col; r < k; ++r) {
        F mag = ScalarTraits<F>::abs(m[r * k + col]);
        if (mag > best) {
          best = mag;
          pivot = r;
        }
      }
    }
    if (pivot < 0) return F(0);
    if (pivot != col) {
      for (int c = 0; c < k; ++c) std::swap(m[pivot * k + c], m[col * k + c]);
      det = -det;
    }
    const F p = m[col * k + col];
    det *= p;
    for (int r = col + 1; r < k; ++r) {
      if (is_zero(m[r * k + col])) continue;
      const F factor = m[r * k + col] / p;
      for (int c = col; c < k; ++c) m[r * k + c] -= factor * m[col * k + c];
    }
  }
  return det;
}

}  // namespace gfc
