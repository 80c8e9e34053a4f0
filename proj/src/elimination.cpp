#include "tracealg/elimination.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "tracealg/series.hpp"

namespace tracealg {

namespace {

Trace letter_trace(const IndependenceAlphabet& alpha, int i) {
  return normalize(alpha, Word(1, static_cast<char>(i)));
}

/// Lexicographically least shortest path z .. z' in the dependence graph
/// with interior vertices in B, or empty when none exists.
std::vector<int> dependence_path(const IndependenceAlphabet& alpha, Mask B, int z, int zp) {
  int n = alpha.size();
  auto dep = [&](int i, int j) { return i != j && !alpha.independent(i, j); };
  auto allowed = [&](int v) { return ((B >> v) & 1u) != 0 || v == zp; };
  // Distance to zp over the allowed graph.
  std::vector<int> dist(n, -1);
  dist[zp] = 0;
  std::vector<int> queue{zp};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int u = 0; u < n; ++u) {
      if (dist[u] >= 0 || !dep(u, v)) continue;
      if (!allowed(u) && u != z) continue;
      dist[u] = dist[v] + 1;
      if (u != z) queue.push_back(u);
    }
  }
  if (dist[z] < 2) return {};  // unreachable, or no interior vertex
  std::vector<int> path{z};
  int cur = z;
  while (cur != zp) {
    for (int v = 0; v < n; ++v) {
      if (!dep(cur, v) || !allowed(v) || dist[v] != dist[cur] - 1) continue;
      path.push_back(v);
      cur = v;
      break;
    }
  }
  return path;
}

}  // namespace

TfsaVerdict is_tfsa(const IndependenceAlphabet& alpha, Mask B) {
  if ((B & ~alpha.all_mask()) != 0) throw std::invalid_argument("is_tfsa: unknown letters in B");
  Mask Z = alpha.all_mask() & ~B;
  std::vector<int> best;
  for (int z : mask_letters(Z)) {
    for (int zp : mask_letters(Z)) {
      if (zp <= z || !alpha.independent(z, zp)) continue;
      for (auto [a, b] : {std::pair{z, zp}, std::pair{zp, z}}) {
        auto path = dependence_path(alpha, B, a, b);
        if (path.empty()) continue;
        if (best.empty() || path.size() < best.size() ||
            (path.size() == best.size() && path < best))
          best = path;
      }
    }
  }
  TfsaVerdict v;
  if (!best.empty()) {
    v.is_tfsa = false;
    for (int i : best) v.witness.push_back(letter_trace(alpha, i));
  }
  return v;
}

Mask b_closure(const IndependenceAlphabet& alpha, Mask B, int z) {
  if (z < 0 || z >= alpha.size()) throw std::invalid_argument("b_closure: letter out of range");
  if ((B >> z) & 1u) throw std::invalid_argument("b_closure: z must lie outside B");
  Mask closure = 0;
  std::vector<int> queue;
  auto visit = [&](int from) {
    for (int b : mask_letters(B & ~closure))
      if (!alpha.independent(from, b)) {
        closure |= Mask{1} << b;
        queue.push_back(b);
      }
  };
  visit(z);
  for (size_t qi = 0; qi < queue.size(); ++qi) visit(queue[qi]);
  return closure;
}

namespace {

std::optional<Trace> right_divide(int a, const Trace& t) {
  const auto& alpha = t.alphabet();
  const Word& w = t.word();
  Mask seen = 0;
  for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
    unsigned char c = w[i];
    if (c == a && (seen & ~alpha.neighbors(c)) == 0) {
      Word rest = w;
      rest.erase(rest.begin() + i);
      return normalize(alpha, rest);
    }
    seen |= Mask{1} << c;
  }
  return std::nullopt;
}

}  // namespace

std::pair<Trace, Trace> factor_bisection(const Trace& t, Mask B, BisectionSide side) {
  const auto& alpha = t.alphabet();
  if ((B & ~alpha.all_mask()) != 0)
    throw std::invalid_argument("factor_bisection: unknown letters in B");
  Trace part = Trace::identity(alpha);
  Trace rest = t;
  if (side == BisectionSide::left) {
    for (;;) {
      Mask ia = initial_alphabet(rest) & B;
      if (ia == 0) break;
      int a = mask_letters(ia).front();
      part = concat(part, letter_trace(alpha, a));
      rest = *left_divide(a, rest);
    }
    return {part, rest};
  }
  for (;;) {
    Mask ta = terminal_alphabet(rest) & B;
    if (ta == 0) break;
    int a = mask_letters(ta).front();
    part = concat(letter_trace(alpha, a), part);
    rest = *right_divide(a, rest);
  }
  return {rest, part};
}

namespace {

/// Greedy normal form of an abstract word over level generators.
std::vector<int> abstract_normalize(const DerivedAlphabet& level, std::vector<int> w) {
  std::vector<int> out;
  out.reserve(w.size());
  while (!w.empty()) {
    int best = -1;
    for (size_t i = 0; i < w.size(); ++i) {
      bool movable = true;
      for (size_t j = 0; j < i && movable; ++j) movable = level.related(w[j], w[i]);
      if (movable && (best < 0 || w[i] < w[best])) best = static_cast<int>(i);
    }
    out.push_back(w[best]);
    w.erase(w.begin() + best);
  }
  return out;
}

}  // namespace

BetaExpansion beta_complement(const DerivedAlphabet& level, const std::vector<int>& T, int maxlen) {
  if (maxlen < 1) throw std::invalid_argument("beta_complement: maxlen must be >= 1");
  std::vector<bool> inT(level.size(), false);
  for (int i : T) {
    if (i < 0 || i >= level.size())
      throw std::invalid_argument("beta_complement: generator index out of range");
    inT[i] = true;
  }

  struct Item {
    std::vector<int> word;
    Trace expanded;
  };
  std::vector<Item> items;
  std::set<std::vector<int>> seen;
  for (int z = 0; z < level.size(); ++z) {
    if (inT[z] || level.generators[z].length() > maxlen) continue;
    items.push_back({{z}, level.generators[z]});
    seen.insert(items.back().word);
  }
  bool complete = true;
  for (size_t qi = 0; qi < items.size(); ++qi) {
    // Snapshot: items grows while iterating.
    std::vector<int> word = items[qi].word;
    Trace expanded = items[qi].expanded;
    for (int t : T) {
      bool anchored = false;  // t must not be independent of the whole word
      for (int p : word)
        if (!level.related(p, t)) {
          anchored = true;
          break;
        }
      if (!anchored) continue;
      if (expanded.length() + level.generators[t].length() > maxlen) {
        complete = false;
        continue;
      }
      std::vector<int> next = word;
      next.push_back(t);
      next = abstract_normalize(level, std::move(next));
      if (!seen.insert(next).second) continue;
      items.push_back({std::move(next), concat(expanded, level.generators[t])});
    }
  }

  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.expanded < b.expanded; });
  std::vector<Trace> gens;
  gens.reserve(items.size());
  for (auto& it : items) {
    if (!gens.empty() && gens.back() == it.expanded)
      throw std::logic_error("beta_complement: level generators are not a code");
    gens.push_back(it.expanded);
  }

  BetaExpansion out{derived_independence(*level.base, gens), {}};
  out.alphabet.enumerated_to = maxlen;
  out.alphabet.complete = complete;
  out.words.reserve(items.size());
  for (auto& it : items) out.words.push_back(std::move(it.word));
  return out;
}

DerivedAlphabet beta_generators(const IndependenceAlphabet& alpha, Mask B, int maxlen) {
  if ((B & ~alpha.all_mask()) != 0)
    throw std::invalid_argument("beta_generators: unknown letters in B");
  if (B == alpha.all_mask())
    throw std::invalid_argument("beta_generators: B must be a proper subalphabet");
  if (maxlen < 1) throw std::invalid_argument("beta_generators: maxlen must be >= 1");
  DerivedAlphabet d = beta_complement(base_level(alpha), mask_letters(B), maxlen).alphabet;
  d.beta_source = std::make_pair(B, alpha.all_mask() & ~B);
  return d;
}

namespace {

/// Membership counts of <X> per length, generic divisibility DP.
std::vector<long long> submonoid_counts(const IndependenceAlphabet& alpha,
                                        const DerivedAlphabet& X, int maxlen,
                                        std::span<const Trace> universe) {
  std::vector<Trace> own;
  if (universe.empty()) {
    own = enumerate_traces(alpha, maxlen);
    universe = own;
  }
  std::vector<long long> counts(maxlen + 1, 0);
  if (X.beta_source && (X.complete || X.enumerated_to >= maxlen)) {
    // For a beta set that is exhaustive up to maxlen, <X> cut at that
    // length is exactly {t : IA(t) in Z}.
    Mask Z = X.beta_source->second;
    for (const Trace& t : universe) {
      if (t.length() > maxlen) break;
      if ((initial_alphabet(t) & ~Z) == 0) ++counts[t.length()];
    }
    return counts;
  }
  std::unordered_set<Word> members;
  for (const Trace& t : universe) {
    if (t.length() > maxlen) break;
    bool in = t.empty();
    for (const Trace& g : X.generators) {
      if (in || g.length() > t.length()) break;
      if (auto q = left_divide(g, t); q && members.count(q->word())) in = true;
    }
    if (in) {
      members.insert(t.word());
      ++counts[t.length()];
    }
  }
  return counts;
}

}  // namespace

CodeCheckResult bounded_code_check(const IndependenceAlphabet& alpha, const DerivedAlphabet& X,
                                   int maxlen, std::span<const Trace> universe) {
  if (maxlen < 1) throw std::invalid_argument("bounded_code_check: maxlen must be >= 1");
  std::vector<long long> abstract_counts = derived_trace_counts(X, maxlen);
  std::vector<long long> member_counts = submonoid_counts(alpha, X, maxlen, universe);

  int bad_len = -1;
  for (int l = 0; l <= maxlen && bad_len < 0; ++l)
    if (abstract_counts[l] != member_counts[l]) bad_len = l;
  if (bad_len < 0) return {};

  // A trace of length bad_len carries at least two abstract classes;
  // enumerate abstract normal forms by weight and keep the least
  // colliding evaluation.
  std::unordered_map<Word, std::vector<int>> first_word;
  std::map<Trace, std::pair<std::vector<int>, std::vector<int>>> collisions;
  struct Node {
    std::vector<int> word;
    Trace eval;
  };
  std::vector<Node> stack;
  for (int i = X.size() - 1; i >= 0; --i)
    if (X.generators[i].length() <= bad_len) stack.push_back({{i}, X.generators[i]});
  while (!stack.empty()) {
    Node cur = std::move(stack.back());
    stack.pop_back();
    auto it = first_word.find(cur.eval.word());
    if (it == first_word.end()) {
      first_word.emplace(cur.eval.word(), cur.word);
    } else if (it->second != cur.word) {
      collisions.emplace(cur.eval, std::make_pair(it->second, cur.word));
      continue;
    }
    for (int x = X.size() - 1; x >= 0; --x) {
      if (cur.eval.length() + X.generators[x].length() > bad_len) continue;
      // Appending x keeps the abstract word normal iff no bigger letter
      // of the commuting suffix precedes it.
      bool ok = true;
      for (auto rit = cur.word.rbegin(); rit != cur.word.rend(); ++rit) {
        if (!X.related(*rit, x)) break;
        if (*rit > x) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::vector<int> next = cur.word;
      next.push_back(x);
      stack.push_back({std::move(next), concat(cur.eval, X.generators[x])});
    }
  }
  if (collisions.empty())
    throw std::logic_error("bounded_code_check: count mismatch without explicit collision");
  const auto& [trace, pair] = *collisions.begin();
  auto to_traces = [&](const std::vector<int>& w) {
    std::vector<Trace> out;
    for (int i : w) out.push_back(X.generators[i]);
    return out;
  };
  CodeCheckResult res;
  res.is_code = false;
  auto lhs = std::min(pair.first, pair.second);
  auto rhs = std::max(pair.first, pair.second);
  res.witness = std::make_pair(to_traces(lhs), to_traces(rhs));
  return res;
}

namespace {

/// All zw with w over B, IA(zw) = {z}, |zw| <= maxlen, sorted.
std::vector<Trace> beta_words_for(const IndependenceAlphabet& alpha, Mask B, int z, int maxlen) {
  std::vector<Trace> out{letter_trace(alpha, z)};
  std::unordered_set<Word> seen{out.front().word()};
  for (size_t qi = 0; qi < out.size(); ++qi) {
    Trace cur = out[qi];
    if (cur.length() >= maxlen) continue;
    for (int b : mask_letters(B)) {
      // b must be dependent on some letter already present.
      if ((cur.alph_mask() & ~alpha.neighbors(b)) == 0) continue;
      Trace ext = concat(cur, letter_trace(alpha, b));
      if (seen.insert(ext.word()).second) out.push_back(ext);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ConditionIIResult condition_ii_check(const IndependenceAlphabet& alpha, Mask B, int maxlen) {
  if (maxlen < 1) throw std::invalid_argument("condition_ii_check: maxlen must be >= 1");
  Mask Z = alpha.all_mask() & ~B;
  std::optional<ConditionIIWitness> best;
  auto better = [&](const ConditionIIWitness& w) {
    if (!best) return true;
    auto key = [](const ConditionIIWitness& x) {
      return std::tie(x.product, x.z1w1, x.z2w2, x.z2w2p, x.z1w1p);
    };
    return key(w) < key(*best);
  };
  for (int z1 : mask_letters(Z)) {
    for (int z2 : mask_letters(Z)) {
      if (z2 <= z1) continue;
      // Products with both leading letters initial require (z1,z2) in theta.
      if (!alpha.independent(z1, z2)) continue;
      auto P1 = beta_words_for(alpha, B, z1, maxlen);
      auto P2 = beta_words_for(alpha, B, z2, maxlen);
      // Keep zw only when the other leading letter commutes with all of w;
      // otherwise no product equality can move it to the front.
      auto filtered = [&](const std::vector<Trace>& P, int zself, int zother) {
        std::vector<int> idx;
        for (int i = 0; i < static_cast<int>(P.size()); ++i)
          if ((P[i].alph_mask() & ~(Mask{1} << zself) & ~alpha.neighbors(zother)) == 0)
            idx.push_back(i);
        return idx;
      };
      std::vector<int> F1 = filtered(P1, z1, z2), F2 = filtered(P2, z2, z1);
      std::unordered_map<Word, std::vector<std::pair<int, int>>> left;
      for (int i : F1)
        for (int j = 0; j < static_cast<int>(P2.size()); ++j)
          left[concat(P1[i], P2[j]).word()].emplace_back(i, j);
      for (int j : F2) {
        for (int i = 0; i < static_cast<int>(P1.size()); ++i) {
          Trace prod = concat(P2[j], P1[i]);
          auto it = left.find(prod.word());
          if (it == left.end()) continue;
          for (auto [li, lj] : it->second) {
            if (li == i && lj == j) continue;
            ConditionIIWitness w{P1[li], P2[lj], P2[j], P1[i], prod};
            if (better(w)) best = w;
          }
        }
      }
    }
  }
  ConditionIIResult res;
  if (best) {
    res.holds = false;
    res.witness = std::move(best);
  }
  return res;
}

}  // namespace tracealg
