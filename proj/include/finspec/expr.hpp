#pragma once

/**
 * @file expr.hpp
 * @brief Ring expression grammar:
 *
 *   expr := atom | expr "x" atom | expr "/" "(" gens ")"
 *   atom := "Z/" nat | "GF(" primepower ")" | atom "[x]/(" poly ")"
 *         | "(" expr ")"
 *   gens := int ("," int)*
 *   poly := monic polynomial in x with integer coefficients
 *
 * Whitespace is insignificant.  Integers in `gens` and polynomial
 * coefficients denote canonical images k*1 in the ring at hand; for
 * Z/n these coincide with residues.
 */

#include <cctype>
#include <string>
#include <vector>

#include "finspec/construct.hpp"
#include "finspec/quotients.hpp"
#include "finspec/ring.hpp"

namespace finspec {

struct RingExpr {
  enum class Kind { zmod, gf, product, quotient, poly_quotient };
  Kind kind = Kind::zmod;
  std::size_t arg = 0;                // zmod / gf
  std::vector<RingExpr> children;     // product: 2, quotient/poly: 1
  std::vector<long long> gens;        // quotient generators
  std::vector<long long> poly;        // coefficients, constant term first
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : text_(text) {}

  RingExpr parse() {
    RingExpr e = parse_expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("ring expression error at position " +
                     std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected `") + c + "` in " + what);
  }

  long long parse_nat() {
    skip();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a number");
    long long v = 0;
    std::size_t digits = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (++digits > 12) fail("number too large");
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  long long parse_int() {
    bool neg = eat('-');
    long long v = parse_nat();
    return neg ? -v : v;
  }

  RingExpr parse_expr() {
    RingExpr cur = parse_atom();
    while (true) {
      char c = peek();
      if (c == 'x') {
        ++pos_;
        RingExpr rhs = parse_atom();
        RingExpr prod;
        prod.kind = RingExpr::Kind::product;
        prod.children.push_back(std::move(cur));
        prod.children.push_back(std::move(rhs));
        cur = std::move(prod);
      } else if (c == '/') {
        ++pos_;
        expect('(', "ideal generators");
        RingExpr quot;
        quot.kind = RingExpr::Kind::quotient;
        quot.gens.push_back(parse_int());
        while (eat(',')) quot.gens.push_back(parse_int());
        expect(')', "ideal generators");
        quot.children.push_back(std::move(cur));
        cur = std::move(quot);
      } else {
        break;
      }
    }
    return cur;
  }

  RingExpr parse_atom() {
    RingExpr atom;
    char c = peek();
    if (c == 'Z') {
      ++pos_;
      expect('/', "Z/n");
      atom.kind = RingExpr::Kind::zmod;
      atom.arg = static_cast<std::size_t>(parse_nat());
    } else if (c == 'G') {
      ++pos_;
      if (!eat('F')) fail("expected GF(");
      expect('(', "GF(q)");
      atom.kind = RingExpr::Kind::gf;
      atom.arg = static_cast<std::size_t>(parse_nat());
      expect(')', "GF(q)");
    } else if (c == '(') {
      ++pos_;
      atom = parse_expr();
      expect(')', "parenthesized expression");
    } else {
      fail("expected a ring atom (Z/n, GF(q) or parenthesis)");
    }
    while (peek() == '[') {
      ++pos_;
      if (!eat('x')) fail("expected `x` in polynomial quotient");
      expect(']', "polynomial quotient");
      expect('/', "polynomial quotient");
      expect('(', "polynomial quotient");
      RingExpr pq;
      pq.kind = RingExpr::Kind::poly_quotient;
      pq.poly = parse_poly();
      expect(')', "polynomial quotient");
      pq.children.push_back(std::move(atom));
      atom = std::move(pq);
    }
    return atom;
  }

  // Sum of terms c, x, c*x^k up to the closing parenthesis.
  std::vector<long long> parse_poly() {
    std::vector<long long> coeffs;
    bool first = true;
    while (true) {
      skip();
      long long sign = 1;
      if (eat('+')) {
        sign = 1;
      } else if (eat('-')) {
        sign = -1;
      } else if (!first) {
        break;
      }
      first = false;
      long long coeff = 1;
      bool saw_number = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = parse_nat();
        saw_number = true;
        eat('*');
      }
      long long exp = 0;
      if (eat('x')) {
        exp = 1;
        if (eat('^')) exp = parse_nat();
      } else if (!saw_number) {
        fail("expected a polynomial term");
      }
      if (exp > 32) fail("polynomial degree too large");
      if (coeffs.size() <= static_cast<std::size_t>(exp))
        coeffs.resize(static_cast<std::size_t>(exp) + 1, 0);
      coeffs[static_cast<std::size_t>(exp)] += sign * coeff;
    }
    if (coeffs.empty()) fail("empty polynomial");
    return coeffs;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RingExpr parse_ring_expr(const std::string& text) {
  return detail::ExprParser(text).parse();
}

/// Builds the ring an expression denotes; size bounds are enforced here.
inline FiniteRing evaluate(const RingExpr& e,
                           std::size_t max_size = kDefaultMaxRingSize) {
  switch (e.kind) {
    case RingExpr::Kind::zmod:
      return ring_zmod(e.arg, max_size);
    case RingExpr::Kind::gf:
      if (!is_prime_power(e.arg))
        throw ParseError("GF argument " + std::to_string(e.arg) +
                         " is not a prime power");
      return gf_field(e.arg, max_size);
    case RingExpr::Kind::product: {
      FiniteRing l = evaluate(e.children[0], max_size);
      FiniteRing r = evaluate(e.children[1], max_size);
      return ring_product_many({std::move(l), std::move(r)}, max_size).ring;
    }
    case RingExpr::Kind::quotient: {
      FiniteRing base = evaluate(e.children[0], max_size);
      std::vector<Elem> gens;
      for (long long g : e.gens) gens.push_back(int_image(base, g));
      return quotient_ring(base, ideal_generated(base, gens)).ring;
    }
    case RingExpr::Kind::poly_quotient: {
      FiniteRing base = evaluate(e.children[0], max_size);
      if (e.poly.size() < 2)
        throw ParseError("modulus polynomial must have degree >= 1");
      std::vector<Elem> f;
      for (long long c : e.poly) f.push_back(int_image(base, c));
      if (f.back() != base.one())
        throw ParseError("modulus polynomial is not monic over " +
                         base.label());
      return ring_poly_quotient(base, f, max_size);
    }
  }
  throw Error("unreachable ring expression kind");
}

inline FiniteRing eval_ring_expr(const std::string& text,
                                 std::size_t max_size = kDefaultMaxRingSize) {
  return evaluate(parse_ring_expr(text), max_size);
}

}  // namespace finspec
