#pragma once

#include <optional>
#include <string>
#include <variant>

#include "gfc/cli/expr.hpp"
#include "gfc/cli/session.hpp"
#include "gfc/gfc.hpp"

namespace gfc::cli {

// Runtime failures: missing form/coscalar/cochain, tensors used as operands.
class EvalError : public Error {
 public:
  using Error::Error;
};

// Expressions evaluate to a multivector, a tensor (terminal) or a scalar.
template <Field F>
using Value = std::variant<Multivector<F>, Tensor2<F>, F>;

template <Field F>
class Evaluator {
 public:
  // Parses the attached matrices in F; throws ConfigError on bad entries.
  explicit Evaluator(const SessionConfig& cfg);

  int dim() const noexcept { return dim_; }
  Value<F> evaluate(const Expr& e) const;

  // u ∘ v under the session form; EvalError without one.
  Multivector<F> clifford(const Multivector<F>& u, const Multivector<F>& v) const {
    return clifford_product<F>(form(), u, v);
  }
  // The session cochain with its convolution inverse; EvalError without one.
  const CochainPair<F>& cochain() const;

 private:
  Multivector<F> operand(const Expr& e) const;
  Value<F> call(const Expr& e) const;
  const ExtendedForm<F>& form() const;
  const Tensor2<F>& coscalar() const;

  int dim_;
  std::optional<ExtendedForm<F>> form_;
  std::optional<Coscalar<F>> coform_;
  std::optional<SquareMatrix<F>> p_matrix_;
  // Extended lazily so that float sessions fail only when they are used.
  mutable std::optional<Tensor2<F>> coscalar_ext_;
  mutable std::optional<CochainPair<F>> cochain_;
};

extern template class Evaluator<Rational>;
extern template class Evaluator<double>;

}  // namespace gfc::cli
