#pragma once

#include <string>
#include <string_view>

#include "gfc/cli/expr.hpp"
#include "gfc/errors.hpp"

namespace gfc::cli {

class ParseError : public Error {
 public:
  ParseError(int column, const std::string& message)
      : Error("column " + std::to_string(column) + ": " + message), column_(column) {}
  int column() const noexcept { return column_; }

 private:
  int column_;
};

// Precedence, tightest first: unary minus; _| and |_; ^; *; v; + and -.
// All binary operators associate to the left. Generator atoms are checked
// against dim: for dim <= 9 "e132" is e1 ∧ e3 ∧ e2; for dim >= 10 "e12" is the
// single generator e12. "e{1,12}" is accepted for every dim.
Expr parse(std::string_view input, int dim);

}  // namespace gfc::cli
