#pragma once

#include <string>
#include <vector>

#include "gfc/blade.hpp"

namespace gfc::cli {

enum class BinaryOp { add, subtract, meet, clifford, wedge, left_contract, right_contract };

// Operator spelling in the expression language: "+", "-", "v", "*", "^", "_|", "|_".
std::string_view spelling(BinaryOp op);

struct Expr {
  enum class Kind { number, blade, negate, binary, call };

  Kind kind = Kind::number;
  // number: the literal as written; call: the function name.
  std::string text;
  // blade: the canonical blade and the sign of the reordering in the atom.
  Blade blade;
  int sign = 1;
  BinaryOp op = BinaryOp::add;
  std::vector<Expr> args;
  // 1-based source column of the node's first character.
  int column = 1;

  // Structural equality; source columns are ignored.
  friend bool operator==(const Expr& a, const Expr& b);
};

// Fully parenthesized canonical form. Parsing it yields an equal tree.
std::string print(const Expr& e, int dim);

}  // namespace gfc::cli
