#pragma once

#include "gfc/errors.hpp"
#include "gfc/scalar.hpp"

namespace gfc {

// Blades are 16-bit masks, so an algebra has at most 16 generators.
inline constexpr int max_dim = 16;

struct AlgebraSignature {
  int dim = 1;
  ScalarMode scalar_mode = ScalarMode::exact_rational;

  friend bool operator==(const AlgebraSignature&, const AlgebraSignature&) = default;
};

inline int checked_dim(int dim) {
  if (dim < 1 || dim > max_dim) {
    throw DomainError("dimension must lie in 1.." + std::to_string(max_dim) + ", got " +
                      std::to_string(dim));
  }
  return dim;
}

inline AlgebraSignature make_signature(int dim, ScalarMode mode = ScalarMode::exact_rational) {
  return AlgebraSignature{checked_dim(dim), mode};
}

}  // namespace gfc
