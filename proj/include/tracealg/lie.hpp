#ifndef TRACEALG_LIE_HPP
#define TRACEALG_LIE_HPP

#include <memory>

#include "tracealg/factorization.hpp"
#include "tracealg/polynomial.hpp"

namespace tracealg {

/// A bracketing shape over generator traces: either a leaf or a pair of
/// subtrees. Immutable, cheap to copy.
class BracketTree {
 public:
  static BracketTree leaf(Trace t);
  static BracketTree node(BracketTree l, BracketTree r);

  bool is_leaf() const { return node_->leaf.has_value(); }
  const Trace& value() const { return *node_->leaf; }
  const BracketTree& left() const { return *node_->l; }
  const BracketTree& right() const { return *node_->r; }

  TracePolynomial evaluate(const IndependenceAlphabet& alpha) const;
  std::string str() const;  // e.g. [[a,c],c]

 private:
  struct Node {
    std::optional<Trace> leaf;
    std::shared_ptr<const BracketTree> l, r;
  };
  explicit BracketTree(Node n) : node_(std::make_shared<Node>(std::move(n))) {}
  std::shared_ptr<const Node> node_;
};

/// pq - qp in K<A, theta>.
TracePolynomial lie_bracket(const TracePolynomial& p, const TracePolynomial& q);

/// [[...[w1, w2], ...], wn] expanded in K<A, theta>.
TracePolynomial left_normed_bracket(const IndependenceAlphabet& alpha, const Word& word);
BracketTree left_normed_tree(const IndependenceAlphabet& alpha, const Word& word);

struct TauGenerator {
  Trace gen;  // the beta generator zw
  BracketTree tree;
  TracePolynomial poly;
};

/// tau_Z(B): the left-normed bracketing of each beta generator's
/// canonical word (which starts with its unique initial letter z).
std::vector<TauGenerator> tau_generators(const IndependenceAlphabet& alpha, Mask B, int maxlen);

/// The bracketing Pi along a plan, computed level by level: letters map
/// to themselves, and a generator with canonical abstract word
/// y v1 ... vk at its creation step maps to the left-nested bracket of
/// the images of y and the v's.
class PlanBracketing {
 public:
  explicit PlanBracketing(const ElimPlan& plan);

  /// Pi of a generator of any plan level; throws std::invalid_argument
  /// when g is not part of the plan's factorization content.
  const TracePolynomial& poly(const Trace& g) const;
  const BracketTree& tree(const Trace& g) const;

 private:
  std::map<Trace, std::pair<BracketTree, TracePolynomial>> images_;
};

TracePolynomial bracketing_map(const ElimPlan& plan, const Trace& g);

struct LieBasisElement {
  int degree = 0;
  Trace label;  // generator trace (or expanded Lyndon word on the residual level)
  BracketTree tree;
  TracePolynomial poly;
};

/// Basis of L_K(A, theta) up to degree n along a transitive elimination
/// plan: Pi images of every level generator of degree <= n, plus the
/// standard Lyndon bracketings over the residual free level.
std::vector<LieBasisElement> lie_basis(const IndependenceAlphabet& alpha, const ElimPlan& plan,
                                       int n);

/// dim of the degree-m homogeneous component of L_K(A, theta): rank of
/// the left-normed brackets of all degree-m words, exact arithmetic.
int lie_dimension_oracle(const IndependenceAlphabet& alpha, int m);

/// Rank over Q of the span of the given polynomials (fraction-free row
/// echelon on integer-cleared rows).
int polynomial_rank(const std::vector<TracePolynomial>& rows);

/// Checks L(A) = L(B) + J degreewise up to n: dimension additivity and
/// trivial intersection of the span of L(B, theta_B) with the span of
/// brackets of tau_Z(B).
bool lazard_split_check(const IndependenceAlphabet& alpha, Mask B, int n);

}  // namespace tracealg

#endif
