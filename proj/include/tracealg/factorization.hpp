#ifndef TRACEALG_FACTORIZATION_HPP
#define TRACEALG_FACTORIZATION_HPP

#include <optional>
#include <string>

#include "tracealg/elimination.hpp"

namespace tracealg {

/// One elimination step: at `level`, the generators T become their own
/// factor (left side of the bisection of the level's submonoid) and the
/// complement generators continue as the next level. `next_words[i]` is
/// the canonical abstract word of next.generators[i] over the level's
/// generator indices; its head lies outside T, its tail inside T.
struct ElimStep {
  DerivedAlphabet level;
  std::vector<int> eliminated;  // indices into level.generators
  TfsaVerdict verdict;          // always positive for stored steps
  DerivedAlphabet next;
  std::vector<std::vector<int>> next_words;

  DerivedAlphabet eliminated_alphabet() const;
};

/// An ordered sequence of transitive bisections of M(A, theta), each
/// applied to the alphabet produced by the previous one.
struct ElimPlan {
  const IndependenceAlphabet* base = nullptr;
  int maxlen = 0;
  std::vector<ElimStep> steps;

  const DerivedAlphabet& final_level() const;
};

/// Applies one elimination at `level`: verifies that T is a TFSA of the
/// level (throws NotTfsaError with the witness otherwise) and returns
/// the restriction to T, the beta complement bounded by maxlen, and the
/// verdict.
ElimStep eliminate_step(const DerivedAlphabet& level, const std::vector<int>& T, int maxlen);

/// Runs eliminate_step along a semicolon-separated list of generator
/// words ("c;acc;b;d;ac;a"), starting from the base letters.
ElimPlan build_plan(const IndependenceAlphabet& alpha, const std::string& plan_text, int maxlen);
ElimPlan build_plan(const IndependenceAlphabet& alpha, const std::vector<Trace>& order, int maxlen);

/// An ordered factorization of M(A, theta): levels left-to-right in
/// product order (the leftmost factor carries the greatest index in the
/// decreasing-index convention).
struct Factorization {
  const IndependenceAlphabet* base = nullptr;
  std::vector<DerivedAlphabet> levels;
  std::optional<ElimPlan> provenance;
};

Factorization factorization_from_plan(const ElimPlan& plan);

/// Replaces level k of F by the levels of F2; F2 must factorize the
/// submonoid generated by F's level k.
Factorization compose(const Factorization& F, const Factorization& F2, int k);

/// Unique decreasing decomposition of t: factors left-to-right, each a
/// nonempty member of its level's submonoid, level indices strictly
/// increasing. Greedy maximal left factor extraction per level; throws
/// std::runtime_error when t does not decompose within the bound.
std::vector<std::pair<int, Trace>> decompose(const Factorization& F, const Trace& t, int maxlen);

/// Keeps exactly the levels all of whose generators decompose over X at
/// the given bound. The result need not be a factorization.
Factorization restrict_to(const Factorization& F, const DerivedAlphabet& X, int bound);

/// Whether level i is cut by the bisection along B: both the
/// intersection with M(B, theta_B) and with <beta_Z(B)> contain a
/// nonempty trace of length <= bound.
bool is_cut(const Factorization& F, int i, Mask B, int bound);

struct FactorizationCheck {
  bool ok = true;
  std::optional<Trace> counterexample;
  long long count = 1;  // number of decompositions of the counterexample
};

/// Exhaustively counts decreasing decompositions of every nonempty trace
/// of length <= n; a factorization has exactly one for each.
FactorizationCheck verify_factorization(const Factorization& F, int n);

}  // namespace tracealg

#endif
