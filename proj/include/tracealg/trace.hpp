#ifndef TRACEALG_TRACE_HPP
#define TRACEALG_TRACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tracealg/alphabet.hpp"

namespace tracealg {

/// An element of the free partially commutative monoid M(A, theta),
/// stored as the lexicographically least word of its congruence class.
/// Traces carry the identity of their alphabet; mixing alphabets in a
/// binary operation is an error, not a coercion. The alphabet must
/// outlive every trace built over it.
class Trace {
 public:
  explicit Trace(const IndependenceAlphabet& alpha) : alpha_(&alpha) {}

  static Trace identity(const IndependenceAlphabet& alpha) { return Trace(alpha); }

  const IndependenceAlphabet& alphabet() const { return *alpha_; }
  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }
  Mask alph_mask() const;

  /// Canonical text form: symbols concatenated, space-separated when the
  /// alphabet has multi-character symbols; the empty trace prints as "1".
  std::string str() const;

  bool operator==(const Trace& o) const { return alpha_ == o.alpha_ && word_ == o.word_; }
  bool operator!=(const Trace& o) const { return !(*this == o); }
  /// (length, lex) order; only meaningful within one alphabet.
  bool operator<(const Trace& o) const {
    if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
    return word_ < o.word_;
  }

 private:
  friend Trace normalize(const IndependenceAlphabet&, const Word&);
  const IndependenceAlphabet* alpha_;
  Word word_;
};

/// Canonical representative of the class of w: greedily emits the least
/// letter that is minimal in the remaining trace.
Trace normalize(const IndependenceAlphabet& alpha, const Word& w);

/// Parses the textual trace syntax (symbols, optional spaces, "1" for the
/// empty trace) and normalizes.
Trace parse_trace(const IndependenceAlphabet& alpha, std::string_view text);

Trace concat(const Trace& t, const Trace& u);

/// Independent equality oracle: decides u =_theta v through the projection
/// criterion (equal letter counts and equal projections onto every
/// dependent pair). Used to cross-check normalize, never by it.
bool equivalent(const IndependenceAlphabet& alpha, const Word& u, const Word& v);

/// Letters that can begin (initial) / end (terminal) some representative
/// word of t.
Mask initial_alphabet(const Trace& t);
Mask terminal_alphabet(const Trace& t);

/// If a is initial in t, the unique w with t = a.w.
std::optional<Trace> left_divide(int a, const Trace& t);

/// If x left-divides t, the unique w with t = x.w.
std::optional<Trace> left_divide(const Trace& x, const Trace& t);

/// All traces of length <= n, each once, in (length, lex) order.
std::vector<Trace> enumerate_traces(const IndependenceAlphabet& alpha, int n);

struct LeviWitness {
  Trace p, q, r, s;
};

/// Given w.t = w2.t2, traces p,q,r,s with w = p.s, t = r.q, w2 = p.r,
/// t2 = s.q and Alph(r) x Alph(s) contained in theta.
LeviWitness levi_factor(const Trace& w, const Trace& t, const Trace& w2, const Trace& t2);

}  // namespace tracealg

#endif
