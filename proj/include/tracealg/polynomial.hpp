#ifndef TRACEALG_POLYNOMIAL_HPP
#define TRACEALG_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

#include "tracealg/trace.hpp"

namespace tracealg {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// An element of K<A,theta> = K[M(A,theta)]: a finite formal sum of
/// traces with exact rational coefficients. No zero coefficient is ever
/// stored; terms iterate in (length, lex) order.
class TracePolynomial {
 public:
  explicit TracePolynomial(const IndependenceAlphabet& alpha) : alpha_(&alpha) {}

  static TracePolynomial zero(const IndependenceAlphabet& alpha) { return TracePolynomial(alpha); }
  static TracePolynomial one(const IndependenceAlphabet& alpha);
  static TracePolynomial monomial(Trace t, Rational c = 1);
  static TracePolynomial letter(const IndependenceAlphabet& alpha, int i);

  const IndependenceAlphabet& alphabet() const { return *alpha_; }
  const std::map<Trace, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // max term length, -1 for zero
  Rational coeff(const Trace& t) const;

  void add_term(const Trace& t, const Rational& c);

  TracePolynomial& operator+=(const TracePolynomial& o);
  TracePolynomial& operator-=(const TracePolynomial& o);
  TracePolynomial& operator*=(const Rational& c);
  TracePolynomial operator-() const;
  friend TracePolynomial operator+(TracePolynomial a, const TracePolynomial& b) { return a += b; }
  friend TracePolynomial operator-(TracePolynomial a, const TracePolynomial& b) { return a -= b; }
  friend TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b);
  friend TracePolynomial operator*(TracePolynomial a, const Rational& c) { return a *= c; }

  /// Drops every term of length > n.
  TracePolynomial truncated(int n) const;

  bool operator==(const TracePolynomial& o) const {
    return alpha_ == o.alpha_ && terms_ == o.terms_;
  }

  /// "c1*t1 + c2*t2 + ..." with unit coefficients elided and terms in
  /// (length, lex) order; the zero polynomial prints as "0".
  std::string str() const;

 private:
  const IndependenceAlphabet* alpha_;
  std::map<Trace, Rational> terms_;
};

}  // namespace tracealg

#endif
