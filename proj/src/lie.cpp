#include "tracealg/lie.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace tracealg {

BracketTree BracketTree::leaf(Trace t) {
  Node n;
  n.leaf = std::move(t);
  return BracketTree(std::move(n));
}

BracketTree BracketTree::node(BracketTree l, BracketTree r) {
  Node n;
  n.l = std::make_shared<const BracketTree>(std::move(l));
  n.r = std::make_shared<const BracketTree>(std::move(r));
  return BracketTree(std::move(n));
}

TracePolynomial BracketTree::evaluate(const IndependenceAlphabet& alpha) const {
  if (is_leaf()) {
    if (&value().alphabet() != &alpha)
      throw std::invalid_argument("BracketTree: leaf over a different alphabet");
    return TracePolynomial::monomial(value());
  }
  return lie_bracket(left().evaluate(alpha), right().evaluate(alpha));
}

std::string BracketTree::str() const {
  if (is_leaf()) return value().str();
  return "[" + left().str() + "," + right().str() + "]";
}

TracePolynomial lie_bracket(const TracePolynomial& p, const TracePolynomial& q) {
  return p * q - q * p;
}

BracketTree left_normed_tree(const IndependenceAlphabet& alpha, const Word& word) {
  if (word.empty()) throw std::invalid_argument("left_normed_bracket: empty word");
  BracketTree t = BracketTree::leaf(normalize(alpha, Word(1, word[0])));
  for (size_t i = 1; i < word.size(); ++i)
    t = BracketTree::node(std::move(t), BracketTree::leaf(normalize(alpha, Word(1, word[i]))));
  return t;
}

TracePolynomial left_normed_bracket(const IndependenceAlphabet& alpha, const Word& word) {
  if (word.empty()) throw std::invalid_argument("left_normed_bracket: empty word");
  TracePolynomial p = TracePolynomial::letter(alpha, word[0]);
  for (size_t i = 1; i < word.size(); ++i)
    p = lie_bracket(p, TracePolynomial::letter(alpha, word[i]));
  return p;
}

std::vector<TauGenerator> tau_generators(const IndependenceAlphabet& alpha, Mask B, int maxlen) {
  DerivedAlphabet beta = beta_generators(alpha, B, maxlen);
  std::vector<TauGenerator> out;
  out.reserve(beta.generators.size());
  for (const Trace& g : beta.generators) {
    // The canonical word of zw starts with z, its unique initial letter.
    out.push_back({g, left_normed_tree(alpha, g.word()), left_normed_bracket(alpha, g.word())});
  }
  return out;
}

PlanBracketing::PlanBracketing(const ElimPlan& plan) {
  if (plan.steps.empty()) throw std::invalid_argument("PlanBracketing: empty plan");
  for (const Trace& g : plan.steps.front().level.generators)
    images_.emplace(g, std::make_pair(BracketTree::leaf(g), TracePolynomial::monomial(g)));
  for (const auto& step : plan.steps) {
    for (int i = 0; i < step.next.size(); ++i) {
      const auto& word = step.next_words[i];
      const Trace& g = step.next.generators[i];
      if (word.size() == 1) continue;  // carried generator, image already set
      auto at = [&](int idx) -> const std::pair<BracketTree, TracePolynomial>& {
        return images_.at(step.level.generators[idx]);
      };
      BracketTree tree = at(word[0]).first;
      TracePolynomial poly = at(word[0]).second;
      for (size_t j = 1; j < word.size(); ++j) {
        tree = BracketTree::node(std::move(tree), at(word[j]).first);
        poly = lie_bracket(poly, at(word[j]).second);
      }
      auto found = images_.find(g);
      if (found != images_.end()) {
        if (!(found->second.second == poly))
          throw std::logic_error("PlanBracketing: conflicting images for " + g.str());
      } else {
        images_.emplace(g, std::make_pair(std::move(tree), std::move(poly)));
      }
    }
  }
}

const TracePolynomial& PlanBracketing::poly(const Trace& g) const {
  auto it = images_.find(g);
  if (it == images_.end())
    throw std::invalid_argument("bracketing: '" + g.str() + "' is not in the plan content");
  return it->second.second;
}

const BracketTree& PlanBracketing::tree(const Trace& g) const {
  auto it = images_.find(g);
  if (it == images_.end())
    throw std::invalid_argument("bracketing: '" + g.str() + "' is not in the plan content");
  return it->second.first;
}

TracePolynomial bracketing_map(const ElimPlan& plan, const Trace& g) {
  return PlanBracketing(plan).poly(g);
}

namespace {

/// Fraction-free row echelon over the trace-monomial basis; rows are
/// kept integral with unit content.
class IntegerEchelon {
 public:
  using Row = std::map<Trace, Integer>;

  bool insert(Row row) {
    normalize(row);
    while (!row.empty()) {
      auto lead = row.begin()->first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        pivots_.emplace(std::move(lead), std::move(row));
        return true;
      }
      const Row& p = it->second;
      Integer a = p.begin()->second, b = row.begin()->second;
      Row next;
      // next = a*row - b*p
      for (const auto& [t, c] : row) {
        Integer v = a * c;
        auto pit = p.find(t);
        if (pit != p.end()) v -= b * pit->second;
        if (v != 0) next.emplace(t, std::move(v));
      }
      for (const auto& [t, c] : p)
        if (!row.count(t)) {
          Integer v = -b * c;
          next.emplace(t, std::move(v));
        }
      row = std::move(next);
      normalize(row);
    }
    return false;
  }

  int rank() const { return static_cast<int>(pivots_.size()); }

  static Row from_poly(const TracePolynomial& p) {
    Integer lcm = 1;
    for (const auto& [t, c] : p.terms())
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
    Row row;
    for (const auto& [t, c] : p.terms())
      row.emplace(t, boost::multiprecision::numerator(c) * (lcm / boost::multiprecision::denominator(c)));
    return row;
  }

 private:
  static void normalize(Row& row) {
    if (row.empty()) return;
    Integer g = 0;
    for (const auto& [t, c] : row) g = boost::multiprecision::gcd(g, c);
    bool flip = row.begin()->second < 0;
    for (auto& [t, c] : row) {
      c /= g;
      if (flip) c = -c;
    }
  }

  std::map<Trace, Row> pivots_;
};

}  // namespace

int polynomial_rank(const std::vector<TracePolynomial>& rows) {
  IntegerEchelon ech;
  int rank = 0;
  for (const auto& p : rows)
    if (ech.insert(IntegerEchelon::from_poly(p))) ++rank;
  return rank;
}

namespace {

/// Inserts the degree-m left-normed brackets over words with letters in
/// `letters` into the echelon; returns how many grew the rank.
int insert_bracket_rows(const IndependenceAlphabet& alpha, const std::vector<int>& letters, int m,
                        IntegerEchelon& ech) {
  int rank = 0;
  if (letters.empty()) return 0;
  if (m == 1) {
    for (int a : letters)
      if (ech.insert(IntegerEchelon::from_poly(TracePolynomial::letter(alpha, a)))) ++rank;
    return rank;
  }
  // [w1, w2, ...] is antisymmetric in its first two letters: w1 < w2
  // covers the span, and independent first pairs vanish outright.
  size_t k = letters.size();
  std::vector<size_t> idx(m, 0);
  for (;;) {
    int a = letters[idx[0]], b = letters[idx[1]];
    if (a < b && !alpha.independent(a, b)) {
      Word w;
      for (int pos = 0; pos < m; ++pos) w.push_back(static_cast<char>(letters[idx[pos]]));
      if (ech.insert(IntegerEchelon::from_poly(left_normed_bracket(alpha, w)))) ++rank;
    }
    int pos = m - 1;
    while (pos >= 0 && ++idx[pos] == k) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return rank;
}

int bracket_rank(const IndependenceAlphabet& alpha, const std::vector<int>& letters, int m) {
  IntegerEchelon ech;
  return insert_bracket_rows(alpha, letters, m, ech);
}

}  // namespace

int lie_dimension_oracle(const IndependenceAlphabet& alpha, int m) {
  if (m < 1) throw std::invalid_argument("lie_dimension_oracle: degree must be >= 1");
  std::vector<int> letters(alpha.size());
  std::iota(letters.begin(), letters.end(), 0);
  return bracket_rank(alpha, letters, m);
}

std::vector<LieBasisElement> lie_basis(const IndependenceAlphabet& alpha, const ElimPlan& plan,
                                       int n) {
  if (plan.maxlen < n) throw std::invalid_argument("lie_basis: plan incomplete at this degree");
  PlanBracketing pi(plan);
  std::vector<LieBasisElement> out;
  for (const auto& step : plan.steps)
    for (int i : step.eliminated) {
      const Trace& g = step.level.generators[i];
      if (g.length() > n) continue;
      out.push_back({g.length(), g, pi.tree(g), pi.poly(g)});
    }

  const DerivedAlphabet& residual = plan.final_level();
  for (auto [i, j] : residual.relation)
    if (residual.generators[i].length() + residual.generators[j].length() <= n)
      throw std::invalid_argument("lie_basis: residual level is not free at this degree");

  // Lyndon words over the residual letters, weighted by expanded length.
  std::vector<int> usable;
  for (int i = 0; i < residual.size(); ++i)
    if (residual.generators[i].length() <= n) usable.push_back(i);

  std::vector<std::vector<int>> lyndon;
  std::vector<int> word;
  std::function<void(int)> gen = [&](int weight) {
    if (!word.empty()) {
      bool is_lyndon = true;
      for (size_t s = 1; s < word.size() && is_lyndon; ++s)
        is_lyndon = std::lexicographical_compare(word.begin(), word.end(), word.begin() + s,
                                                 word.end());
      if (is_lyndon) lyndon.push_back(word);
    }
    for (int i : usable) {
      int w = weight + residual.generators[i].length();
      if (w > n) continue;
      word.push_back(i);
      gen(w);
      word.pop_back();
    }
  };
  gen(0);

  std::function<std::pair<BracketTree, TracePolynomial>(const std::vector<int>&)> bracketed =
      [&](const std::vector<int>& l) -> std::pair<BracketTree, TracePolynomial> {
    if (l.size() == 1) {
      const Trace& g = residual.generators[l[0]];
      return {pi.tree(g), pi.poly(g)};
    }
    // Standard factorization: the longest proper suffix that is Lyndon.
    for (size_t s = 1; s < l.size(); ++s) {
      std::vector<int> suffix(l.begin() + s, l.end());
      bool is_lyndon = true;
      for (size_t r = 1; r < suffix.size() && is_lyndon; ++r)
        is_lyndon = std::lexicographical_compare(suffix.begin(), suffix.end(),
                                                 suffix.begin() + r, suffix.end());
      if (!is_lyndon) continue;
      std::vector<int> prefix(l.begin(), l.begin() + s);
      auto [lt, lp] = bracketed(prefix);
      auto [rt, rp] = bracketed(suffix);
      return {BracketTree::node(std::move(lt), std::move(rt)), lie_bracket(lp, rp)};
    }
    throw std::logic_error("lie_basis: Lyndon factorization failed");
  };

  for (const auto& l : lyndon) {
    Trace label = Trace::identity(alpha);
    for (int i : l) label = concat(label, residual.generators[i]);
    auto [tree, poly] = bracketed(l);
    out.push_back({label.length(), label, std::move(tree), std::move(poly)});
  }

  std::sort(out.begin(), out.end(),
            [](const LieBasisElement& a, const LieBasisElement& b) { return a.label < b.label; });
  return out;
}

bool lazard_split_check(const IndependenceAlphabet& alpha, Mask B, int n) {
  if (B == alpha.all_mask()) return true;  // J contributes nothing below any degree
  std::vector<int> bletters = mask_letters(B);
  auto tau = tau_generators(alpha, B, n);

  // Graded spanning sets of the subalgebra generated by tau.
  std::vector<std::vector<TracePolynomial>> jbasis(n + 1);
  for (int d = 1; d <= n; ++d) {
    std::vector<TracePolynomial> candidates;
    for (const auto& t : tau)
      if (t.gen.length() == d) candidates.push_back(t.poly);
    for (int i = 1; i < d; ++i)
      for (const auto& u : jbasis[i])
        for (const auto& v : jbasis[d - i]) candidates.push_back(lie_bracket(u, v));
    IntegerEchelon ech;
    for (const auto& p : candidates)
      if (ech.insert(IntegerEchelon::from_poly(p))) jbasis[d].push_back(p);
  }

  for (int m = 1; m <= n; ++m) {
    int dim_full = lie_dimension_oracle(alpha, m);
    int dim_b = bracket_rank(alpha, bletters, m);
    int dim_j = static_cast<int>(jbasis[m].size());
    if (dim_full != dim_b + dim_j) return false;
    // Trivial intersection: concatenated ranks add up.
    IntegerEchelon ech;
    int combined = insert_bracket_rows(alpha, bletters, m, ech);
    for (const auto& p : jbasis[m])
      if (ech.insert(IntegerEchelon::from_poly(p))) ++combined;
    if (combined != dim_b + dim_j) return false;
  }
  return true;
}

}  // namespace tracealg
