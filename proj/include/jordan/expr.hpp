#ifndef JORDAN_EXPR_HPP
#define JORDAN_EXPR_HPP

//! @file
//! Integer formulas used by the data tables: + - * / ^, parentheses, gcd(a,b)
//! and single-letter variables. Division must be exact.

#include "jordan/errors.hpp"

#include <gmpxx.h>

#include <cctype>
#include <map>
#include <string>
#include <string_view>

namespace jordan {

using ExprVars = std::map<char, mpz_class>;

namespace detail {

class ExprParser {
public:
  ExprParser(std::string_view src, const ExprVars& vars) : src_(src), vars_(vars) {}

  mpz_class parse()
  {
    mpz_class v = sum();
    skip();
    if (pos_ != src_.size())
      error("unexpected '" + std::string(1, src_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void error(const std::string& what) const
  {
    fail(ErrorKind::DataFormat, "formula '" + std::string(src_) + "': " + what);
  }

  void skip()
  {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool eat(char c)
  {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class sum()
  {
    mpz_class v = product();
    for (;;) {
      if (eat('+'))
        v += product();
      else if (eat('-'))
        v -= product();
      else
        return v;
    }
  }

  mpz_class product()
  {
    mpz_class v = power();
    for (;;) {
      if (eat('*')) {
        v *= power();
      } else if (eat('/')) {
        mpz_class d = power();
        if (d == 0 || !mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()))
          error("inexact division");
        v /= d;
      } else {
        return v;
      }
    }
  }

  mpz_class power()
  {
    mpz_class b = unary();
    if (eat('^')) {
      mpz_class e = power(); // right associative
      if (e < 0 || !e.fits_ulong_p())
        error("exponent out of range");
      mpz_class r;
      mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e.get_ui());
      return r;
    }
    return b;
  }

  mpz_class unary()
  {
    if (eat('-'))
      return -unary();
    return atom();
  }

  mpz_class atom()
  {
    skip();
    if (pos_ >= src_.size())
      error("unexpected end");
    if (eat('(')) {
      mpz_class v = sum();
      if (!eat(')'))
        error("missing ')'");
      return v;
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      return mpz_class(std::string(src_.substr(start, pos_ - start)));
    }
    if (src_.substr(pos_, 3) == "gcd") {
      pos_ += 3;
      if (!eat('('))
        error("gcd needs '('");
      mpz_class a = sum();
      if (!eat(','))
        error("gcd needs two arguments");
      mpz_class b = sum();
      if (!eat(')'))
        error("missing ')'");
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      return g;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      auto it = vars_.find(c);
      if (it == vars_.end())
        error("unknown variable '" + std::string(1, c) + "'");
      return it->second;
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  const ExprVars& vars_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline mpz_class eval_formula(std::string_view formula, const ExprVars& vars)
{
  return detail::ExprParser(formula, vars).parse();
}

} // namespace jordan

#endif // JORDAN_EXPR_HPP
