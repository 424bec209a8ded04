#include "gfc/cli/expr.hpp"

#include <utility>
#include <vector>

namespace gfc::cli {

std::string_view spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::add: return "+";
    case BinaryOp::subtract: return "-";
    case BinaryOp::meet: return "v";
    case BinaryOp::clifford: return "*";
    case BinaryOp::wedge: return "^";
    case BinaryOp::left_contract: return "_|";
    case BinaryOp::right_contract: return "|_";
  }
  return "?";
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::number:
      return a.text == b.text;
    case Expr::Kind::blade:
      return a.blade == b.blade && a.sign == b.sign;
    case Expr::Kind::negate:
      return a.args == b.args;
    case Expr::Kind::binary:
      return a.op == b.op && a.args == b.args;
    case Expr::Kind::call:
      return a.text == b.text && a.args == b.args;
  }
  return false;
}

std::string print(const Expr& e, int dim) {
  switch (e.kind) {
    case Expr::Kind::number:
      return e.text;
    case Expr::Kind::blade: {
      if (e.sign > 0) return to_string(e.blade, dim);
      // A negative atom is always a reordering of at least two indices.
      std::vector<int> idx = e.blade.indices();
      std::swap(idx[0], idx[1]);
      std::string out = "e";
      if (dim <= 9) {
        for (int i : idx) out += std::to_string(i);
        return out;
      }
      out += "{";
      for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? "," : "") + std::to_string(idx[i]);
      return out + "}";
    }
    case Expr::Kind::negate:
      return "(-" + print(e.args[0], dim) + ")";
    case Expr::Kind::binary:
      return "(" + print(e.args[0], dim) + " " + std::string(spelling(e.op)) + " " +
             print(e.args[1], dim) + ")";
    case Expr::Kind::call: {
      std::string out = e.text + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        out += print(e.args[i], dim);
      }
      return out + ")";
    }
  }
  return {};
}

}  // namespace gfc::cli
