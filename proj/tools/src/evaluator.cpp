#include "gfc/cli/evaluator.hpp"

#include <vector>

namespace gfc::cli {
namespace {

template <Field F>
SquareMatrix<F> parse_matrix(const MatrixText& text, const char* what) {
  std::vector<std::vector<F>> rows;
  for (const auto& row : text) {
    std::vector<F> out;
    for (const auto& entry : row) {
      try {
        out.push_back(ScalarTraits<F>::parse(entry));
      } catch (const Error& e) {
        throw ConfigError(std::string(what) + " matrix entry '" + entry + "': " + e.what());
      }
    }
    rows.push_back(std::move(out));
  }
  return SquareMatrix<F>(std::move(rows));
}

}  // namespace

template <Field F>
Evaluator<F>::Evaluator(const SessionConfig& cfg) : dim_(cfg.dim) {
  checked_dim(dim_);
  if (cfg.form) form_.emplace(BilinearForm<F>(parse_matrix<F>(*cfg.form, "form")));
  if (cfg.coform) coform_.emplace(parse_matrix<F>(*cfg.coform, "coscalar"));
  if (cfg.cochain) p_matrix_.emplace(parse_matrix<F>(*cfg.cochain, "cochain"));
}

template <Field F>
const ExtendedForm<F>& Evaluator<F>::form() const {
  if (!form_) throw EvalError("form required: pass --form with a bilinear form matrix");
  return *form_;
}

template <Field F>
const Tensor2<F>& Evaluator<F>::coscalar() const {
  if (!coform_) throw EvalError("coscalar required: pass --coform with a coscalar matrix");
  if (!coscalar_ext_) coscalar_ext_.emplace(extend_coscalar(*coform_));
  return *coscalar_ext_;
}

template <Field F>
const CochainPair<F>& Evaluator<F>::cochain() const {
  if (!p_matrix_) throw EvalError("cochain required: pass --p with a cochain matrix");
  if (!cochain_) cochain_.emplace(cochain_extend(*p_matrix_));
  return *cochain_;
}

template <Field F>
Multivector<F> Evaluator<F>::operand(const Expr& e) const {
  Value<F> v = evaluate(e);
  if (auto* m = std::get_if<Multivector<F>>(&v)) return std::move(*m);
  if (auto* s = std::get_if<F>(&v)) return Multivector<F>::scalar(dim_, *s);
  throw EvalError("column " + std::to_string(e.column) +
                  ": a tensor cannot be used as an operand");
}

template <Field F>
Value<F> Evaluator<F>::evaluate(const Expr& e) const {
  switch (e.kind) {
    case Expr::Kind::number:
      return Multivector<F>::scalar(dim_, ScalarTraits<F>::parse(e.text));
    case Expr::Kind::blade:
      return Multivector<F>::blade(dim_, e.blade, F(e.sign));
    case Expr::Kind::negate: {
      Value<F> v = evaluate(e.args[0]);
      if (auto* s = std::get_if<F>(&v)) return F(-*s);
      return -operand(e.args[0]);
    }
    case Expr::Kind::binary: {
      const Multivector<F> a = operand(e.args[0]);
      const Multivector<F> b = operand(e.args[1]);
      switch (e.op) {
        case BinaryOp::add: return a + b;
        case BinaryOp::subtract: return a - b;
        case BinaryOp::meet: return meet(a, b);
        case BinaryOp::wedge: return wedge(a, b);
        case BinaryOp::clifford: {
          // Id is the unit of every exponentially generated product, so
          // scaling needs no form.
          const auto scalar_only = [](const Multivector<F>& m) {
            return m.is_zero() || (m.size() == 1 && m.terms().begin()->first.is_scalar());
          };
          if (scalar_only(a)) return b * a.coefficient(Blade{});
          if (scalar_only(b)) return a * b.coefficient(Blade{});
          return clifford_product<F>(form(), a, b);
        }
        case BinaryOp::left_contract: return left_contract(form(), a, b);
        case BinaryOp::right_contract: return right_contract(form(), a, b);
      }
      break;
    }
    case Expr::Kind::call:
      return call(e);
  }
  throw EvalError("unhandled expression");
}

template <Field F>
Value<F> Evaluator<F>::call(const Expr& e) const {
  const std::string& f = e.text;
  auto arg = [&](std::size_t i) { return operand(e.args[i]); };
  if (f == "delta" || f == "cojoin") return coproduct(arg(0));
  if (f == "cdelta") return clifford_coproduct(coscalar(), arg(0));
  if (f == "lcocon") return left_cocontract(coscalar(), arg(0));
  if (f == "rcocon") return right_cocontract(coscalar(), arg(0));
  if (f == "comeet") return comeet(arg(0));
  if (f == "eps") return counit(arg(0));
  if (f == "mu") return integral(arg(0));
  if (f == "S") return antipode(arg(0));
  if (f == "meet") return meet(arg(0), arg(1));
  if (f == "join") return join(arg(0), arg(1));
  if (f == "bracket") {
    std::vector<Multivector<F>> xs;
    for (std::size_t i = 0; i < e.args.size(); ++i) xs.push_back(arg(i));
    return bracket<F>(xs);
  }
  if (f == "grade") {
    const Multivector<F> x = arg(0);
    const Multivector<F> k = arg(1);
    for (int g = 0; g <= dim_; ++g) {
      if (k == Multivector<F>::scalar(dim_, F(g))) return grade_project(x, g);
    }
    throw EvalError("column " + std::to_string(e.args[1].column) + ": grade must be an integer in 0.." +
                    std::to_string(dim_));
  }
  if (f == "circ") return circle_product(cochain(), arg(0), arg(1));
  if (f == "P") return p_operator(cochain().p, arg(0));
  if (f == "inv_p") return p_operator(cochain().inverse, arg(0));
  throw EvalError("unknown function '" + f + "'");
}

template class Evaluator<Rational>;
template class Evaluator<double>;

}  // namespace gfc::cli
