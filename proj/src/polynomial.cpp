#include "tracealg/polynomial.hpp"

#include <sstream>

namespace tracealg {

TracePolynomial TracePolynomial::one(const IndependenceAlphabet& alpha) {
  return monomial(Trace::identity(alpha));
}

TracePolynomial TracePolynomial::monomial(Trace t, Rational c) {
  TracePolynomial p(t.alphabet());
  p.add_term(t, c);
  return p;
}

TracePolynomial TracePolynomial::letter(const IndependenceAlphabet& alpha, int i) {
  return monomial(normalize(alpha, Word(1, static_cast<char>(i))));
}

int TracePolynomial::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.length();
}

Rational TracePolynomial::coeff(const Trace& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TracePolynomial::add_term(const Trace& t, const Rational& c) {
  if (c == 0) return;
  if (&t.alphabet() != alpha_)
    throw std::invalid_argument("polynomial: trace over a different alphabet");
  auto [it, inserted] = terms_.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TracePolynomial& TracePolynomial::operator+=(const TracePolynomial& o) {
  if (alpha_ != o.alpha_) throw std::invalid_argument("polynomial: alphabet mismatch");
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

TracePolynomial& TracePolynomial::operator-=(const TracePolynomial& o) {
  if (alpha_ != o.alpha_) throw std::invalid_argument("polynomial: alphabet mismatch");
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

TracePolynomial& TracePolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

TracePolynomial TracePolynomial::operator-() const {
  TracePolynomial p(*this);
  for (auto& [t, v] : p.terms_) v = -v;
  return p;
}

TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b) {
  if (a.alpha_ != b.alpha_) throw std::invalid_argument("polynomial: alphabet mismatch");
  TracePolynomial p(*a.alpha_);
  for (const auto& [t, c] : a.terms_)
    for (const auto& [u, d] : b.terms_) p.add_term(concat(t, u), c * d);
  return p;
}

TracePolynomial TracePolynomial::truncated(int n) const {
  TracePolynomial p(*alpha_);
  for (const auto& [t, c] : terms_) {
    if (t.length() > n) break;
    p.terms_.emplace(t, c);
  }
  return p;
}

std::string TracePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1 || t.empty()) {
      out << a;
      if (!t.empty()) out << "*";
    }
    if (!t.empty()) out << t.str();
    first = false;
  }
  return out.str();
}

}  // namespace tracealg
