#ifndef TRACEALG_DERIVED_ALPHABET_HPP
#define TRACEALG_DERIVED_ALPHABET_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tracealg/trace.hpp"

namespace tracealg {

/// A set of generator traces X together with the induced relation
/// theta_X: (x1, x2) related iff Alph(x1) x Alph(x2) is contained in
/// theta of the base alphabet. Generators are ordered by (length, lex
/// normal form); the relation is stored as index pairs (i < j).
struct DerivedAlphabet {
  const IndependenceAlphabet* base = nullptr;
  std::vector<Trace> generators;
  std::vector<std::pair<int, int>> relation;

  /// Length bound the generator list is known to exhaust; -1 means the
  /// set is exact (not a truncation).
  int enumerated_to = -1;
  /// True when no generator beyond enumerated_to exists.
  bool complete = true;
  /// Set when the alphabet was produced as beta_Z(B): (B, Z) masks.
  std::optional<std::pair<Mask, Mask>> beta_source;

  bool related(int i, int j) const;
  int find(const Trace& t) const;  // index or -1
  int size() const { return static_cast<int>(generators.size()); }
};

/// Builds the derived alphabet on X (deduplicated, sorted). Every trace
/// must be nonempty and live over `alpha`.
DerivedAlphabet derived_independence(const IndependenceAlphabet& alpha, std::vector<Trace> X);

/// The letters of `alpha` as single-letter generators with relation theta.
DerivedAlphabet base_level(const IndependenceAlphabet& alpha);

}  // namespace tracealg

#endif
