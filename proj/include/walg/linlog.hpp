#pragma once

// Multiplicative-additive linear-logic formulas evaluated in the poset model
// on [0, inf] ordered by >=, where the tensor is the product, the dualising
// object is 1 and duality is the involution w -> w^-1.
//
// Connectives and their interpretation:
//   A * B   tensor        product (0 * inf = inf)
//   A @ B   par           bullet  (0 @ inf = 0)
//   A -o B  lollipop      hom: [B]/[A]
//   A^      dual          [A]^-1
//   A & B   with          sup (the product in the >= order)
//   A (+) B plus          inf (the coproduct)
//   1, bot  units         1
//   top     terminal      0
//   0       initial       inf
//
// Validity of A means [A] <= 1 in every environment, i.e. an arrow from the
// unit. Checking evaluates exhaustively over the supplied environments (or
// the standard grid), so it decides validity in this model only -- the model
// is sound but not complete for the logic.

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "walg/weight.hpp"

namespace walg::linlog {

struct Formula {
  enum class Kind {
    atom,
    one,
    bottom,
    top,
    zero,
    dual,
    tensor,
    par,
    lollipop,
    with,
    plus
  };

  Kind kind = Kind::one;
  std::string name;            // atom only
  std::vector<Formula> kids;   // dual: 1 child; binary connectives: 2

  friend bool operator==(const Formula&, const Formula&) = default;
};

inline Formula atom(std::string name) {
  Formula f;
  f.kind = Formula::Kind::atom;
  f.name = std::move(name);
  return f;
}
inline Formula constant(Formula::Kind k) {
  Formula f;
  f.kind = k;
  return f;
}
inline Formula dual(Formula a) {
  Formula f;
  f.kind = Formula::Kind::dual;
  f.kids.push_back(std::move(a));
  return f;
}
inline Formula binary(Formula::Kind k, Formula a, Formula b) {
  Formula f;
  f.kind = k;
  f.kids.push_back(std::move(a));
  f.kids.push_back(std::move(b));
  return f;
}
inline Formula tensor(Formula a, Formula b) {
  return binary(Formula::Kind::tensor, std::move(a), std::move(b));
}
inline Formula par(Formula a, Formula b) {
  return binary(Formula::Kind::par, std::move(a), std::move(b));
}
inline Formula lollipop(Formula a, Formula b) {
  return binary(Formula::Kind::lollipop, std::move(a), std::move(b));
}
inline Formula with(Formula a, Formula b) {
  return binary(Formula::Kind::with, std::move(a), std::move(b));
}
inline Formula plus(Formula a, Formula b) {
  return binary(Formula::Kind::plus, std::move(a), std::move(b));
}

class parse_error : public error {
public:
  parse_error(std::string msg, int line, int column,
              std::vector<std::string> expected)
      : error(std::move(msg)), line(line), column(column),
        expected(std::move(expected)) {}
  int line;
  int column;
  std::vector<std::string> expected;
};

namespace detail {

struct Token {
  enum class Type {
    atom, one, zero, bot, top, star, at, lolli, caret, amp, oplus,
    lparen, rparen, end
  };
  Type type;
  std::string text;
  int line;
  int col;
};

inline const char* token_name(Token::Type t) {
  switch (t) {
    case Token::Type::atom: return "atom";
    case Token::Type::one: return "'1'";
    case Token::Type::zero: return "'0'";
    case Token::Type::bot: return "'bot'";
    case Token::Type::top: return "'top'";
    case Token::Type::star: return "'*'";
    case Token::Type::at: return "'@'";
    case Token::Type::lolli: return "'-o'";
    case Token::Type::caret: return "'^'";
    case Token::Type::amp: return "'&'";
    case Token::Type::oplus: return "'(+)'";
    case Token::Type::lparen: return "'('";
    case Token::Type::rparen: return "')'";
    case Token::Type::end: return "end of input";
  }
  return "?";
}

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      int line = line_, col = col_;
      if (pos_ >= text_.size()) {
        out.push_back({Token::Type::end, "", line, col});
        return out;
      }
      char c = text_[pos_];
      if (c == '(') {
        if (pos_ + 2 < text_.size() && text_[pos_ + 1] == '+' &&
            text_[pos_ + 2] == ')') {
          advance(3);
          out.push_back({Token::Type::oplus, "(+)", line, col});
        } else {
          advance(1);
          out.push_back({Token::Type::lparen, "(", line, col});
        }
      } else if (c == ')') {
        advance(1);
        out.push_back({Token::Type::rparen, ")", line, col});
      } else if (c == '*') {
        advance(1);
        out.push_back({Token::Type::star, "*", line, col});
      } else if (c == '@') {
        advance(1);
        out.push_back({Token::Type::at, "@", line, col});
      } else if (c == '^') {
        advance(1);
        out.push_back({Token::Type::caret, "^", line, col});
      } else if (c == '&') {
        advance(1);
        out.push_back({Token::Type::amp, "&", line, col});
      } else if (c == '-') {
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == 'o') {
          advance(2);
          out.push_back({Token::Type::lolli, "-o", line, col});
        } else {
          throw parse_error("expected '-o'", line, col, {"'-o'"});
        }
      } else if (c == '1') {
        advance(1);
        out.push_back({Token::Type::one, "1", line, col});
      } else if (c == '0') {
        advance(1);
        out.push_back({Token::Type::zero, "0", line, col});
      } else if (std::islower(static_cast<unsigned char>(c))) {
        std::string word;
        while (pos_ < text_.size() &&
               (std::islower(static_cast<unsigned char>(text_[pos_])) ||
                std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_')) {
          word += text_[pos_];
          advance(1);
        }
        Token::Type t = word == "bot"   ? Token::Type::bot
                        : word == "top" ? Token::Type::top
                                        : Token::Type::atom;
        out.push_back({t, std::move(word), line, col});
      } else {
        throw parse_error(std::string("unexpected character '") + c + "'",
                          line, col, {"atom", "constant", "'('"});
      }
    }
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance(1);
  }
  void advance(int n) {
    for (int i = 0; i < n; ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }
};

// formula  := additive ("-o" formula)?          right-associative
// additive := mult (("&" | "(+)") mult)*        left-associative
// mult     := unary (("*" | "@") unary)*        left-associative
// unary    := primary "^"*
// primary  := atom | "1" | "0" | "bot" | "top" | "(" formula ")"
class Parser {
public:
  static constexpr int max_depth = 500;

  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula run() {
    Formula f = formula();
    expect(Token::Type::end, {"operator", "end of input"});
    return f;
  }

private:
  std::vector<Token> toks_;
  std::size_t at_ = 0;
  int depth_ = 0;

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > max_depth) {
        const Token& t = p.peek();
        throw parse_error("formula nests deeper than " +
                              std::to_string(max_depth) + " levels",
                          t.line, t.col, {});
      }
    }
    ~DepthGuard() { --p.depth_; }
  };

  const Token& peek() const { return toks_[at_]; }
  Token take() { return toks_[at_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    const Token& t = peek();
    std::string msg = "syntax error at line " + std::to_string(t.line) +
                      ", column " + std::to_string(t.col) + ": unexpected " +
                      token_name(t.type);
    msg += "; expected ";
    for (std::size_t i = 0; i < expected.size(); ++i)
      msg += (i ? " or " : "") + expected[i];
    throw parse_error(std::move(msg), t.line, t.col, std::move(expected));
  }

  void expect(Token::Type t, std::vector<std::string> expected) {
    if (peek().type != t) fail(std::move(expected));
    take();
  }

  Formula formula() {
    DepthGuard guard(*this);
    Formula lhs = additive();
    if (peek().type == Token::Type::lolli) {
      take();
      return lollipop(std::move(lhs), formula());
    }
    return lhs;
  }

  Formula additive() {
    Formula lhs = mult();
    while (peek().type == Token::Type::amp ||
           peek().type == Token::Type::oplus) {
      bool is_with = take().type == Token::Type::amp;
      Formula rhs = mult();
      lhs = binary(is_with ? Formula::Kind::with : Formula::Kind::plus,
                   std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Formula mult() {
    Formula lhs = unary();
    while (peek().type == Token::Type::star || peek().type == Token::Type::at) {
      bool is_tensor = take().type == Token::Type::star;
      Formula rhs = unary();
      lhs = binary(is_tensor ? Formula::Kind::tensor : Formula::Kind::par,
                   std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Formula unary() {
    Formula f = primary();
    int stacked = 0;
    while (peek().type == Token::Type::caret) {
      if (++stacked > max_depth) {
        const Token& t = peek();
        throw parse_error("more than " + std::to_string(max_depth) +
                              " stacked duals",
                          t.line, t.col, {});
      }
      take();
      f = dual(std::move(f));
    }
    return f;
  }

  Formula primary() {
    switch (peek().type) {
      case Token::Type::atom: return atom(take().text);
      case Token::Type::one: take(); return constant(Formula::Kind::one);
      case Token::Type::zero: take(); return constant(Formula::Kind::zero);
      case Token::Type::bot: take(); return constant(Formula::Kind::bottom);
      case Token::Type::top: take(); return constant(Formula::Kind::top);
      case Token::Type::lparen: {
        take();
        Formula f = formula();
        expect(Token::Type::rparen, {"')'"});
        return f;
      }
      default:
        fail({"atom", "'1'", "'0'", "'bot'", "'top'", "'('"});
    }
  }
};

inline int level(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::lollipop: return 0;
    case Formula::Kind::with:
    case Formula::Kind::plus: return 1;
    case Formula::Kind::tensor:
    case Formula::Kind::par: return 2;
    default: return 3;  // dual and primaries never need parens
  }
}

inline void print_rec(const Formula& f, int min_level, std::string& out) {
  int lv = level(f.kind);
  bool parens = lv < min_level;
  if (parens) out += '(';
  switch (f.kind) {
    case Formula::Kind::atom: out += f.name; break;
    case Formula::Kind::one: out += '1'; break;
    case Formula::Kind::zero: out += '0'; break;
    case Formula::Kind::bottom: out += "bot"; break;
    case Formula::Kind::top: out += "top"; break;
    case Formula::Kind::dual:
      print_rec(f.kids[0], 3, out);
      out += '^';
      break;
    case Formula::Kind::lollipop:
      print_rec(f.kids[0], 1, out);
      out += " -o ";
      print_rec(f.kids[1], 0, out);
      break;
    case Formula::Kind::with:
    case Formula::Kind::plus:
      print_rec(f.kids[0], 1, out);
      out += f.kind == Formula::Kind::with ? " & " : " (+) ";
      print_rec(f.kids[1], 2, out);
      break;
    case Formula::Kind::tensor:
    case Formula::Kind::par:
      print_rec(f.kids[0], 2, out);
      out += f.kind == Formula::Kind::tensor ? " * " : " @ ";
      print_rec(f.kids[1], 3, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace detail

inline Formula parse(std::string_view text) {
  return detail::Parser(detail::Lexer(text).run()).run();
}

inline std::string print(const Formula& f) {
  std::string out;
  detail::print_rec(f, 0, out);
  return out;
}

using Environment = std::map<std::string, Weight>;

class unbound_atom : public error {
public:
  explicit unbound_atom(const std::string& name)
      : error("unbound atom '" + name + "'"), atom(name) {}
  std::string atom;
};

inline Weight eval(const Formula& f, const Environment& env) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::atom: {
      auto it = env.find(f.name);
      if (it == env.end()) throw unbound_atom(f.name);
      return it->second;
    }
    case K::one:
    case K::bottom: return Weight(1);
    case K::top: return Weight(0);
    case K::zero: return Weight::infinity();
    case K::dual: return inv(eval(f.kids[0], env));
    case K::tensor: return eval(f.kids[0], env) * eval(f.kids[1], env);
    case K::par: return bullet(eval(f.kids[0], env), eval(f.kids[1], env));
    case K::lollipop:
      return hom_dot(eval(f.kids[0], env), eval(f.kids[1], env));
    case K::with:
      return sup_of({eval(f.kids[0], env), eval(f.kids[1], env)});
    case K::plus:
      return inf_of({eval(f.kids[0], env), eval(f.kids[1], env)});
  }
  throw error("unreachable formula kind");
}

inline void collect_atoms(const Formula& f, std::vector<std::string>& out) {
  if (f.kind == Formula::Kind::atom) {
    for (const auto& a : out)
      if (a == f.name) return;
    out.push_back(f.name);
    return;
  }
  for (const Formula& k : f.kids) collect_atoms(k, out);
}

inline std::vector<std::string> atoms(const Formula& f) {
  std::vector<std::string> out;
  collect_atoms(f, out);
  return out;
}

// every assignment of grid values to the given atoms, odometer order
inline std::vector<Environment> grid_environments(
    const std::vector<std::string>& names,
    const std::vector<Weight>& grid = standard_grid()) {
  std::vector<Environment> envs;
  std::vector<std::size_t> idx(names.size(), 0);
  while (true) {
    Environment env;
    for (std::size_t i = 0; i < names.size(); ++i) env[names[i]] = grid[idx[i]];
    envs.push_back(std::move(env));
    std::size_t i = names.size();
    while (i > 0) {
      --i;
      if (++idx[i] < grid.size()) break;
      idx[i] = 0;
      if (i == 0) return envs;
    }
    if (names.empty()) return envs;
  }
}

inline std::vector<Environment> grid_environments(
    const Formula& f, const std::vector<Weight>& grid = standard_grid()) {
  return grid_environments(atoms(f), grid);
}

struct Validity {
  bool valid;
  Environment counterexample;  // first failing environment, if any
  Weight value;                // its value
};

// model validity: [f] <= 1 under every environment
inline Validity check_valid(const Formula& f,
                            const std::vector<Environment>& envs) {
  for (const Environment& env : envs) {
    Weight v = eval(f, env);
    if (v > Weight(1)) return {false, env, v};
  }
  return {true, {}, Weight(0)};
}

inline Validity check_valid(const Formula& f) {
  return check_valid(f, grid_environments(f));
}

}  // namespace walg::linlog
