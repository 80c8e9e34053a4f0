#ifndef TRACEALG_ELIMINATION_HPP
#define TRACEALG_ELIMINATION_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tracealg/derived_alphabet.hpp"

namespace tracealg {

/// Outcome of the transitively-factorizing-subalphabet test. When the
/// verdict is negative the witness is a dependence-graph path
/// z - b_1 - ... - b_n - z' whose endpoints are independent letters of Z
/// and whose interior lies in B.
struct TfsaVerdict {
  bool is_tfsa = true;
  std::vector<Trace> witness;  // empty iff is_tfsa
};

struct NotTfsaError : std::runtime_error {
  explicit NotTfsaError(TfsaVerdict v)
      : std::runtime_error("subset is not a TFSA"), verdict(std::move(v)) {}
  TfsaVerdict verdict;
};

/// Decides whether B is a transitively factorizing subalphabet of alpha:
/// no dependence path between two independent letters of Z = A - B with
/// interior in B. The witness is the shortest such path, ties broken by
/// letter order.
TfsaVerdict is_tfsa(const IndependenceAlphabet& alpha, Mask B);

/// B_z: letters of B joined to z by a dependence path with inner points
/// in B. B is a TFSA iff ({z} u B_z) x ({z'} u B_z') is contained in
/// theta for every independent pair z, z' of Z.
Mask b_closure(const IndependenceAlphabet& alpha, Mask B, int z);

enum class BisectionSide { left, right };

/// Unique bisection split along B, returned in product order. Left
/// side: t = w.m with Alph(w) in B and IA(m) in A - B, returns (w, m).
/// Right side symmetric with TA: t = m.w, returns (m, w).
std::pair<Trace, Trace> factor_bisection(const Trace& t, Mask B, BisectionSide side);

/// Complement generators of one elimination step at an arbitrary level:
/// abstract traces y.v1...vk (y in the level minus T, v's in T) with
/// abstract initial alphabet {y}, expanded into the base monoid and cut
/// at expanded length maxlen. words[i] is the canonical abstract word of
/// alphabet.generators[i] over the level's generator indices.
struct BetaExpansion {
  DerivedAlphabet alphabet;
  std::vector<std::vector<int>> words;
};
BetaExpansion beta_complement(const DerivedAlphabet& level, const std::vector<int>& T, int maxlen);

/// beta_Z(B) = {zw | z in Z, w over B, IA(zw) = {z}} with |zw| <= maxlen,
/// packaged with the derived independence relation. beta_source records
/// (B, Z); `complete` reports whether the enumeration is exhaustive.
DerivedAlphabet beta_generators(const IndependenceAlphabet& alpha, Mask B, int maxlen);

struct CodeCheckResult {
  bool is_code = true;
  /// Two genuinely distinct factorizations of the least offending trace.
  std::optional<std::pair<std::vector<Trace>, std::vector<Trace>>> witness;
};

/// Decides whether every trace of length <= maxlen admits at most one
/// decomposition over X up to commutation of adjacent theta_X-independent
/// factors. The number of abstract X-traces per length (weighted Mobius
/// inversion on (X, theta_X)) is compared against the number of length-l
/// members of <X>; a mismatch yields an explicit double factorization.
/// `universe`, when given, must be enumerate_traces(alpha, >= maxlen).
CodeCheckResult bounded_code_check(const IndependenceAlphabet& alpha, const DerivedAlphabet& X,
                                   int maxlen, std::span<const Trace> universe = {});

struct ConditionIIWitness {
  Trace z1w1, z2w2;    // left product z1w1 . z2w2
  Trace z2w2p, z1w1p;  // right product z2w2' . z1w1'
  Trace product;
};

struct ConditionIIResult {
  bool holds = true;
  std::optional<ConditionIIWitness> witness;
};

/// Cancellation condition over pairs of distinct letters of Z: whenever
/// z1w1.z2w2 = z2w2'.z1w1' with all four factors beta-shaped B-words of
/// length <= maxlen, the factors agree. Returns the least violating
/// quadruple otherwise.
ConditionIIResult condition_ii_check(const IndependenceAlphabet& alpha, Mask B, int maxlen);

}  // namespace tracealg

#endif
