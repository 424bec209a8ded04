#include "gfc/cli/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>
#include <vector>

#include "gfc/signature.hpp"

namespace gfc::cli {
namespace {

struct Arity {
  int min;
  int max;  // -1: unbounded
};

const std::map<std::string, Arity, std::less<>>& functions() {
  static const std::map<std::string, Arity, std::less<>> table = {
      {"delta", {1, 1}},  {"cdelta", {1, 1}}, {"eps", {1, 1}},    {"S", {1, 1}},
      {"mu", {1, 1}},     {"bracket", {1, -1}}, {"grade", {2, 2}}, {"meet", {2, 2}},
      {"join", {2, 2}},   {"comeet", {1, 1}}, {"cojoin", {1, 1}}, {"lcocon", {1, 1}},
      {"rcocon", {1, 1}}, {"circ", {2, 2}},   {"inv_p", {1, 1}},  {"P", {1, 1}},
  };
  return table;
}

enum class Tok { number, ident, blade, op, lparen, rparen, comma, end };

struct Token {
  Tok kind;
  std::string text;
  int column;
  Blade blade{};
  int sign = 1;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Sign of sorting a list of distinct indices into ascending order.
int permutation_sign(const std::vector<int>& idx) {
  int inversions = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) inversions += idx[i] > idx[j];
  }
  return inversions % 2 ? -1 : 1;
}

class Lexer {
 public:
  Lexer(std::string_view src, int dim) : src_(src), dim_(dim) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      const int col = column();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::end, "", col});
        return out;
      }
      const char c = src_[pos_];
      if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
        out.push_back(number(col));
      } else if (is_ident_start(c)) {
        out.push_back(identifier(col));
      } else if (starts_with("_|") || starts_with("|_")) {
        out.push_back({Tok::op, std::string(src_.substr(pos_, 2)), col});
        pos_ += 2;
      } else if (c == '^' || c == '*' || c == '+' || c == '-') {
        out.push_back({Tok::op, std::string(1, c), col});
        ++pos_;
      } else if (starts_with("−")) {
        out.push_back({Tok::op, "-", col});
        pos_ += 3;
      } else if (c == '(') {
        out.push_back({Tok::lparen, "(", col});
        ++pos_;
      } else if (c == ')') {
        out.push_back({Tok::rparen, ")", col});
        ++pos_;
      } else if (c == ',') {
        out.push_back({Tok::comma, ",", col});
        ++pos_;
      } else {
        throw ParseError(col, "unexpected character '" + std::string(1, c) + "'");
      }
    }
  }

 private:
  int column() const { return static_cast<int>(pos_) + 1; }

  bool starts_with(std::string_view s) const { return src_.substr(pos_).starts_with(s); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  Token number(int col) {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t from = pos_;
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
      return pos_ > from;
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      if (!digits()) throw ParseError(column(), "expected digits after '.'");
    } else if (pos_ < src_.size() && src_[pos_] == '/') {
      ++pos_;
      if (!digits()) throw ParseError(column(), "expected denominator digits after '/'");
    }
    if (pos_ < src_.size() && (is_ident_start(src_[pos_]) || src_[pos_] == '.')) {
      throw ParseError(column(), "malformed number");
    }
    return {Tok::number, std::string(src_.substr(start, pos_ - start)), col};
  }

  Token identifier(int col) {
    const std::size_t start = pos_;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (is_alnum(c)) {
        ++pos_;
      } else if (c == '_' && pos_ + 1 < src_.size() && is_alnum(src_[pos_ + 1])) {
        ++pos_;
      } else {
        break;
      }
    }
    const std::string word(src_.substr(start, pos_ - start));
    if (word == "e" && pos_ < src_.size() && src_[pos_] == '{') return braced_blade(col);
    if (word == "Id") return {Tok::blade, word, col, Blade{}, 1};
    if (word.size() > 1 && word[0] == 'e' &&
        std::all_of(word.begin() + 1, word.end(), [](char c) { return is_digit(c); })) {
      return digit_blade(word, col);
    }
    if (word == "v") return {Tok::op, word, col};
    return {Tok::ident, word, col};
  }

  Token make_blade(const std::vector<int>& idx, const std::string& text, int col) {
    for (int i : idx) {
      if (i < 1 || i > dim_) {
        throw ParseError(col, "generator index " + std::to_string(i) + " outside 1.." +
                                  std::to_string(dim_));
      }
    }
    std::vector<int> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError(col, "repeated generator index in '" + text + "'");
    }
    return {Tok::blade, text, col, Blade::from_indices(sorted), permutation_sign(idx)};
  }

  Token digit_blade(const std::string& word, int col) {
    std::vector<int> idx;
    if (dim_ <= 9) {
      for (char c : word.substr(1)) idx.push_back(c - '0');
    } else {
      if (word.size() > 3) throw ParseError(col, "generator index too large in '" + word + "'");
      idx.push_back(std::stoi(word.substr(1)));
    }
    return make_blade(idx, word, col);
  }

  Token braced_blade(int col) {
    ++pos_;  // '{'
    std::vector<int> idx;
    while (true) {
      skip_space();
      const std::size_t from = pos_;
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
      if (pos_ == from) throw ParseError(column(), "expected a generator index");
      if (pos_ - from > 2) throw ParseError(static_cast<int>(from) + 1, "generator index too large");
      idx.push_back(std::stoi(std::string(src_.substr(from, pos_ - from))));
      skip_space();
      if (pos_ < src_.size() && src_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (pos_ < src_.size() && src_[pos_] == '}') {
        ++pos_;
        break;
      }
      throw ParseError(column(), "expected ',' or '}' in blade literal");
    }
    return make_blade(idx, "e{...}", col);
  }

  std::string_view src_;
  int dim_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Expr parse_all() {
    Expr e = sum();
    if (peek().kind != Tok::end) throw ParseError(peek().column, "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  bool at_op(std::string_view a, std::string_view b = {}) const {
    return peek().kind == Tok::op && (peek().text == a || (!b.empty() && peek().text == b));
  }

  static Expr binary(BinaryOp op, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = Expr::Kind::binary;
    e.op = op;
    e.column = lhs.column;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  Expr sum() {
    Expr lhs = meet_level();
    while (at_op("+", "-")) {
      const BinaryOp op = take().text == "+" ? BinaryOp::add : BinaryOp::subtract;
      lhs = binary(op, std::move(lhs), meet_level());
    }
    return lhs;
  }

  Expr meet_level() {
    Expr lhs = clifford_level();
    while (at_op("v")) {
      take();
      lhs = binary(BinaryOp::meet, std::move(lhs), clifford_level());
    }
    return lhs;
  }

  Expr clifford_level() {
    Expr lhs = wedge_level();
    while (at_op("*")) {
      take();
      lhs = binary(BinaryOp::clifford, std::move(lhs), wedge_level());
    }
    return lhs;
  }

  Expr wedge_level() {
    Expr lhs = contraction_level();
    while (at_op("^")) {
      take();
      lhs = binary(BinaryOp::wedge, std::move(lhs), contraction_level());
    }
    return lhs;
  }

  Expr contraction_level() {
    Expr lhs = unary();
    while (at_op("_|", "|_")) {
      const BinaryOp op = take().text == "_|" ? BinaryOp::left_contract : BinaryOp::right_contract;
      lhs = binary(op, std::move(lhs), unary());
    }
    return lhs;
  }

  Expr unary() {
    if (at_op("-")) {
      Expr e;
      e.kind = Expr::Kind::negate;
      e.column = take().column;
      e.args.push_back(unary());
      return e;
    }
    return primary();
  }

  Expr primary() {
    const Token t = take();
    Expr e;
    e.column = t.column;
    switch (t.kind) {
      case Tok::number:
        e.kind = Expr::Kind::number;
        e.text = t.text;
        return e;
      case Tok::blade:
        e.kind = Expr::Kind::blade;
        e.blade = t.blade;
        e.sign = t.sign;
        return e;
      case Tok::lparen: {
        Expr inner = sum();
        expect(Tok::rparen, "')'");
        return inner;
      }
      case Tok::ident:
        return call(t);
      case Tok::end:
        throw ParseError(t.column, "unexpected end of input");
      default:
        throw ParseError(t.column, "unexpected '" + t.text + "'");
    }
  }

  Expr call(const Token& name) {
    auto it = functions().find(name.text);
    if (it == functions().end()) throw ParseError(name.column, "unknown function '" + name.text + "'");
    Expr e;
    e.kind = Expr::Kind::call;
    e.text = name.text;
    e.column = name.column;
    expect(Tok::lparen, "'(' after " + name.text);
    if (peek().kind != Tok::rparen) {
      e.args.push_back(sum());
      while (peek().kind == Tok::comma) {
        take();
        e.args.push_back(sum());
      }
    }
    expect(Tok::rparen, "')'");
    const int n = static_cast<int>(e.args.size());
    const Arity a = it->second;
    if (n < a.min || (a.max >= 0 && n > a.max)) {
      std::string expected = a.max < 0 ? "at least " + std::to_string(a.min)
                                       : std::to_string(a.min);
      throw ParseError(name.column, name.text + " takes " + expected + " argument" +
                                        (a.min == 1 && a.max == 1 ? "" : "s") + ", got " +
                                        std::to_string(n));
    }
    return e;
  }

  void expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) {
      throw ParseError(peek().column, "expected " + what +
                                          (peek().kind == Tok::end ? " before end of input"
                                                                   : ", found '" + peek().text + "'"));
    }
    take();
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view input, int dim) {
  checked_dim(dim);
  return Parser(Lexer(input, dim).run()).parse_all();
}

}  // namespace gfc::cli
