#include <cctype>

#include "dualcount/errors.hpp"
#include "dualcount/series.hpp"

namespace dualcount {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : s_(text) {}

  GenExpr parse_all() {
    GenExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!at(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    return end == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[end]));
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 9) fail("integer too large");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  std::string ident() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected identifier");
    return std::string(s_.substr(start, pos_ - start));
  }

  int signed_integer() {
    const bool neg = accept('-');
    return static_cast<int>(neg ? -integer() : integer());
  }

  // [int][ident] terms joined by + and -, inside parentheses.
  LinearForm linear_sum() {
    LinearForm f;
    bool first = true;
    while (true) {
      int sign = 1;
      if (accept('-')) sign = -1;
      else if (!first && !accept('+')) break;
      else if (first) accept('+');
      skip();
      int c = 1;
      bool has_number = false;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        c = static_cast<int>(integer());
        has_number = true;
      }
      if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
        f = f + LinearForm{0, {{ident(), sign * c}}};
      } else {
        if (!has_number) fail("expected exponent term");
        f = f + LinearForm::of(sign * c);
      }
      first = false;
      if (!at('+') && !at('-')) break;
    }
    return f;
  }

  LinearForm unit_exponent() {
    expect('^');
    if (accept('(')) {
      LinearForm f = linear_sum();
      expect(')');
      return f;
    }
    const int sign = accept('-') ? -1 : 1;
    skip();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return LinearForm::of(sign * static_cast<int>(integer()));
    return LinearForm{0, {{ident(), sign}}}.scaled(1);
  }

  GenExpr power(const GenExpr& base, int n, std::size_t where) {
    if (n == 1) return base;
    if (n == 0) return gen::constant(1);
    if (n < 0) {
      auto r = gen::reciprocal(base);
      if (!r) throw ParseError("only products of constants, units and (1 - u q^k) factors can be inverted", where);
      return power(*r, -n, where);
    }
    switch (base->kind) {
      case GenNode::Kind::Pole: return gen::pole(base->unit, base->k, base->e * n);
      case GenNode::Kind::UnitPow: return gen::unit_pow(base->unit.scaled(n));
      case GenNode::Kind::QPow: return gen::q_pow(base->k * n);
      default: {
        std::vector<GenExpr> copies(n, base);
        return gen::product(std::move(copies));
      }
    }
  }

  GenExpr primary() {
    skip();
    const std::size_t start = pos_;
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return gen::constant(GaussRational(integer()));
    if (at_word("avg")) {
      pos_ += 3;
      expect('(');
      std::string p = ident();
      if (!at_word("in")) fail("expected 'in'");
      pos_ += 2;
      if (integer() != 0) fail("averaging range must start at 0");
      expect('.');
      expect('.');
      const long hi = integer();
      expect(')');
      GenExpr body = expr();
      try {
        return gen::avg(p, static_cast<int>(hi) + 1, body);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), start);
      }
    }
    if (at_word("q")) {
      ++pos_;
      if (accept('^')) {
        const std::size_t where = pos_;
        const long k = integer();
        if (k < 1) throw ParseError("q exponent must be at least 1 (pole factors need k >= 1)", where);
        return gen::q_pow(static_cast<int>(k));
      }
      return gen::q_pow(1);
    }
    if (at_word("i")) {
      ++pos_;
      if (at('^')) return gen::unit_pow(unit_exponent());
      return gen::unit_pow(LinearForm::of(1));
    }
    if (accept('(')) {
      // (-1)^E is a unit; anything else is a parenthesized expression.
      const std::size_t save = pos_;
      if (accept('-')) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '1') {
          ++pos_;
          if (accept(')') && at('^')) return gen::unit_pow(unit_exponent().scaled(2));
        }
        pos_ = save;
      }
      GenExpr e = expr();
      expect(')');
      return e;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  GenExpr factor() {
    const std::size_t start = pos_;
    GenExpr base = primary();
    if (base->kind != GenNode::Kind::UnitPow && accept('^')) return power(base, signed_integer(), start);
    return base;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || at_word("q") || at_word("i") || at_word("avg");
  }

  GenExpr term() {
    std::vector<GenExpr> factors;
    if (accept('-')) factors.push_back(gen::constant(-1));
    factors.push_back(factor());
    while (true) {
      if (accept('*')) {
        factors.push_back(factor());
      } else if (at('/')) {
        ++pos_;
        skip();
        const std::size_t where = pos_;
        auto r = gen::reciprocal(factor());
        if (!r) throw ParseError("only products of constants, units and (1 - u q^k) factors can be inverted", where);
        factors.push_back(*r);
      } else if (starts_factor()) {
        factors.push_back(factor());
      } else {
        break;
      }
    }
    return gen::product(std::move(factors));
  }

  GenExpr expr() {
    std::vector<GenExpr> terms{term()};
    while (true) {
      if (accept('+')) {
        terms.push_back(term());
      } else if (at('-')) {
        terms.push_back(term());
      } else {
        break;
      }
    }
    return gen::sum(std::move(terms));
  }
};

}  // namespace

GenExpr parse_genexpr(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace dualcount
