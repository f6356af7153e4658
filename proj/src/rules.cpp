#include "rostkit/rules.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>

#include "rostkit/error.hpp"

namespace rostkit::rules {
namespace {

struct Token {
  enum class Kind { Number, Ident, Op, End } kind;
  std::string text;
  long value = 0;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Kind::Number, std::string(src.substr(i, j - i)), std::stol(std::string(src.substr(i, j - i)))});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Token::Kind::Ident, std::string(src.substr(i, j - i))});
      i = j;
    } else {
      static const char* two[] = {"++", "--", "<=", ">=", "==", "!="};
      std::string op(1, c);
      for (const char* t : two)
        if (src.substr(i, 2) == t) op = t;
      if (op.size() == 1 && std::string_view("+-*/%^()[],<>").find(c) == std::string_view::npos)
        throw DomainError("rule: unexpected character '" + op + "' in \"" + std::string(src) + "\"");
      out.push_back({Token::Kind::Op, op});
      i += op.size();
    }
  }
  out.push_back({Token::Kind::End, ""});
  return out;
}

// A parsed expression, evaluated lazily so that seq(...) can rebind `i`.
using IntExpr = std::function<long(const Bindings&)>;
using SeqExpr = std::function<std::vector<long>(const Bindings&)>;

long ipow(long base, long exp) {
  if (exp < 0) throw DomainError("rule: negative exponent");
  long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

long floor_div(long a, long b) {
  if (b == 0) throw DomainError("rule: division by zero");
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long valuation(long p, long x) {
  if (p < 2 || x == 0) throw DomainError("rule: val needs p >= 2 and x != 0");
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

long log2floor(long a, long b) {
  if (a <= 0 || b <= 0 || a < b) throw DomainError("rule: log2floor needs a >= b > 0");
  long k = 0;
  while ((b << (k + 1)) <= a) ++k;
  return k;
}

long log2ceil(long x) {
  if (x <= 0) throw DomainError("rule: log2ceil needs x > 0");
  long k = 0;
  while ((1L << k) < x) ++k;
  return k;
}

std::vector<long> prime_divisors(long x) {
  if (x <= 0) throw DomainError("rule: prime_divisors needs x > 0");
  std::vector<long> out;
  for (long q = 2; q * q <= x; ++q) {
    if (x % q == 0) out.push_back(q);
    while (x % q == 0) x /= q;
  }
  if (x > 1) out.push_back(x);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src), toks_(tokenize(src)) {}

  IntExpr parse_int_rule() {
    auto e = comparison();
    expect_end();
    return e;
  }

  SeqExpr parse_seq_rule() {
    auto e = sequence();
    expect_end();
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(const char* op) const { return peek().kind == Token::Kind::Op && peek().text == op; }
  Token take() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("rule \"" + std::string(src_) + "\": " + what + " near '" + peek().text + "'");
  }
  void expect(const char* op) {
    if (!at(op)) fail(std::string("expected '") + op + "'");
    ++pos_;
  }
  void expect_end() {
    if (peek().kind != Token::Kind::End) fail("trailing input");
  }

  SeqExpr sequence() {
    SeqExpr lhs = seq_term();
    while (at("++") || at("--")) {
      const bool concat = take().text == "++";
      SeqExpr rhs = seq_term();
      if (concat) {
        lhs = [lhs, rhs](const Bindings& v) {
          auto a = lhs(v);
          auto b = rhs(v);
          a.insert(a.end(), b.begin(), b.end());
          return a;
        };
      } else {
        lhs = [lhs, rhs, src = std::string(src_)](const Bindings& v) {
          auto a = lhs(v);
          for (long x : rhs(v)) {
            auto it = std::find(a.begin(), a.end(), x);
            if (it == a.end())
              throw DomainError("rule \"" + src + "\": cannot remove " + std::to_string(x) + ", not present");
            a.erase(it);
          }
          return a;
        };
      }
    }
    return lhs;
  }

  SeqExpr seq_term() {
    if (at("[")) {
      ++pos_;
      std::vector<IntExpr> items;
      if (!at("]")) {
        items.push_back(comparison());
        while (at(",")) {
          ++pos_;
          items.push_back(comparison());
        }
      }
      expect("]");
      return [items](const Bindings& v) {
        std::vector<long> out;
        for (const auto& e : items) out.push_back(e(v));
        return out;
      };
    }
    if (peek().kind != Token::Kind::Ident) fail("expected a sequence term");
    const std::string name = take().text;
    expect("(");
    if (name == "range") {
      auto from = comparison();
      expect(",");
      auto to = comparison();
      IntExpr step = [](const Bindings&) { return 1L; };
      if (at(",")) {
        ++pos_;
        step = comparison();
      }
      expect(")");
      return [from, to, step](const Bindings& v) {
        const long a = from(v), b = to(v), s = step(v);
        if (s <= 0) throw DomainError("rule: range step must be positive");
        std::vector<long> out;
        for (long x = a; x <= b; x += s) out.push_back(x);
        return out;
      };
    }
    if (name == "seq") {
      auto body = comparison();
      expect(",");
      auto from = comparison();
      expect(",");
      auto to = comparison();
      expect(")");
      return [body, from, to](const Bindings& v) {
        std::vector<long> out;
        Bindings inner = v;
        for (long i = from(v); i <= to(v); ++i) {
          inner["i"] = i;
          out.push_back(body(inner));
        }
        return out;
      };
    }
    if (name == "prime_divisors") {
      auto x = comparison();
      expect(")");
      return [x](const Bindings& v) { return prime_divisors(x(v)); };
    }
    fail("unknown sequence function '" + name + "'");
  }

  IntExpr comparison() {
    IntExpr lhs = sum();
    static const char* ops[] = {"<", "<=", ">", ">=", "==", "!="};
    for (const char* op : ops) {
      if (at(op)) {
        ++pos_;
        IntExpr rhs = sum();
        const std::string o = op;
        return [lhs, rhs, o](const Bindings& v) -> long {
          const long a = lhs(v), b = rhs(v);
          if (o == "<") return a < b;
          if (o == "<=") return a <= b;
          if (o == ">") return a > b;
          if (o == ">=") return a >= b;
          if (o == "==") return a == b;
          return a != b;
        };
      }
    }
    return lhs;
  }

  IntExpr sum() {
    IntExpr lhs = product();
    while (at("+") || at("-")) {
      const bool plus = take().text == "+";
      IntExpr rhs = product();
      lhs = [lhs, rhs, plus](const Bindings& v) { return plus ? lhs(v) + rhs(v) : lhs(v) - rhs(v); };
    }
    return lhs;
  }

  IntExpr product() {
    IntExpr lhs = unary();
    while (at("*") || at("/") || at("%")) {
      const std::string op = take().text;
      IntExpr rhs = unary();
      lhs = [lhs, rhs, op](const Bindings& v) -> long {
        const long a = lhs(v), b = rhs(v);
        if (op == "*") return a * b;
        if (op == "/") return floor_div(a, b);
        if (b == 0) throw DomainError("rule: modulo by zero");
        return a - b * floor_div(a, b);
      };
    }
    return lhs;
  }

  IntExpr unary() {
    if (at("-")) {
      ++pos_;
      IntExpr e = unary();
      return [e](const Bindings& v) { return -e(v); };
    }
    IntExpr base = atom();
    if (at("^")) {
      ++pos_;
      IntExpr exp = unary();
      return [base, exp](const Bindings& v) { return ipow(base(v), exp(v)); };
    }
    return base;
  }

  IntExpr atom() {
    const Token t = take();
    if (t.kind == Token::Kind::Number) {
      const long value = t.value;
      return [value](const Bindings&) { return value; };
    }
    if (t.kind == Token::Kind::Op && t.text == "(") {
      IntExpr e = comparison();
      expect(")");
      return e;
    }
    if (t.kind != Token::Kind::Ident) {
      --pos_;
      fail("expected a number, name or '('");
    }
    if (!at("(")) {
      const std::string name = t.text;
      return [name, src = std::string(src_)](const Bindings& v) {
        auto it = v.find(name);
        if (it == v.end()) throw DomainError("rule \"" + src + "\": unbound name '" + name + "'");
        return it->second;
      };
    }
    ++pos_;
    std::vector<IntExpr> args;
    if (!at(")")) {
      args.push_back(comparison());
      while (at(",")) {
        ++pos_;
        args.push_back(comparison());
      }
    }
    expect(")");
    const std::string name = t.text;
    auto arity = [&](std::size_t n) {
      if (args.size() != n) fail(name + " takes " + std::to_string(n) + " argument(s)");
    };
    if (name == "val") {
      arity(2);
      return [args](const Bindings& v) { return valuation(args[0](v), args[1](v)); };
    }
    if (name == "log2floor") {
      arity(2);
      return [args](const Bindings& v) { return log2floor(args[0](v), args[1](v)); };
    }
    if (name == "log2ceil") {
      arity(1);
      return [args](const Bindings& v) { return log2ceil(args[0](v)); };
    }
    if (name == "min" || name == "max") {
      arity(2);
      const bool is_min = name == "min";
      return [args, is_min](const Bindings& v) {
        return is_min ? std::min(args[0](v), args[1](v)) : std::max(args[0](v), args[1](v));
      };
    }
    if (name == "divides") {
      arity(2);
      return [args](const Bindings& v) -> long {
        const long a = args[0](v), b = args[1](v);
        return a != 0 && b % a == 0;
      };
    }
    fail("unknown function '" + name + "'");
  }

  std::string_view src_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

long eval_int(std::string_view rule, const Bindings& vars) { return Parser(rule).parse_int_rule()(vars); }

std::vector<long> eval_seq(std::string_view rule, const Bindings& vars) {
  return Parser(rule).parse_seq_rule()(vars);
}

}  // namespace rostkit::rules
