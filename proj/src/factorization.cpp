#include "tracealg/factorization.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace tracealg {

DerivedAlphabet ElimStep::eliminated_alphabet() const {
  std::vector<Trace> gens;
  for (int i : eliminated) gens.push_back(level.generators[i]);
  return derived_independence(*level.base, std::move(gens));
}

const DerivedAlphabet& ElimPlan::final_level() const {
  if (steps.empty()) throw std::logic_error("ElimPlan: empty plan has no final level");
  return steps.back().next;
}

ElimStep eliminate_step(const DerivedAlphabet& level, const std::vector<int>& T, int maxlen) {
  if (T.empty()) throw std::invalid_argument("eliminate_step: empty generator subset");
  std::vector<bool> inT(level.size(), false);
  for (int i : T) {
    if (i < 0 || i >= level.size())
      throw std::invalid_argument("eliminate_step: generator index out of range");
    inT[i] = true;
  }
  if (std::all_of(inT.begin(), inT.end(), [](bool b) { return b; }))
    throw std::invalid_argument("eliminate_step: subset covers the whole level");

  // TFSA test on the abstract letters: no dependence path between two
  // related complement generators with interior in T.
  TfsaVerdict verdict;
  std::vector<int> best;
  int n = level.size();
  for (int z = 0; z < n; ++z) {
    if (inT[z]) continue;
    for (int zp = z + 1; zp < n; ++zp) {
      if (inT[zp] || !level.related(z, zp)) continue;
      // BFS through T from z towards zp over the dependence relation.
      for (auto [from, to] : {std::pair{z, zp}, std::pair{zp, z}}) {
        std::vector<int> dist(n, -1);
        dist[to] = 0;
        std::vector<int> queue{to};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
          int v = queue[qi];
          for (int u = 0; u < n; ++u) {
            if (dist[u] >= 0 || u == v || level.related(u, v)) continue;
            if (!inT[u] && u != from) continue;
            dist[u] = dist[v] + 1;
            if (u != from) queue.push_back(u);
          }
        }
        if (dist[from] < 2) continue;
        std::vector<int> path{from};
        int cur = from;
        while (cur != to) {
          for (int v = 0; v < n; ++v) {
            if (v == cur || level.related(cur, v)) continue;
            if (!(inT[v] || v == to) || dist[v] != dist[cur] - 1) continue;
            path.push_back(v);
            cur = v;
            break;
          }
        }
        if (best.empty() || path.size() < best.size() ||
            (path.size() == best.size() && path < best))
          best = path;
      }
    }
  }
  if (!best.empty()) {
    verdict.is_tfsa = false;
    for (int i : best) verdict.witness.push_back(level.generators[i]);
    throw NotTfsaError(verdict);
  }

  ElimStep step;
  step.level = level;
  step.eliminated = T;
  std::sort(step.eliminated.begin(), step.eliminated.end());
  step.eliminated.erase(std::unique(step.eliminated.begin(), step.eliminated.end()),
                        step.eliminated.end());
  step.verdict = verdict;
  BetaExpansion beta = beta_complement(level, T, maxlen);
  step.next = std::move(beta.alphabet);
  step.next_words = std::move(beta.words);
  return step;
}

ElimPlan build_plan(const IndependenceAlphabet& alpha, const std::vector<Trace>& order,
                    int maxlen) {
  ElimPlan plan;
  plan.base = &alpha;
  plan.maxlen = maxlen;
  DerivedAlphabet level = base_level(alpha);
  for (const Trace& g : order) {
    int idx = level.find(g);
    if (idx < 0)
      throw std::invalid_argument("build_plan: '" + g.str() +
                                  "' is not a generator of the current level");
    plan.steps.push_back(eliminate_step(level, {idx}, maxlen));
    level = plan.steps.back().next;
  }
  return plan;
}

ElimPlan build_plan(const IndependenceAlphabet& alpha, const std::string& plan_text, int maxlen) {
  std::vector<Trace> order;
  std::string item;
  std::istringstream ss(plan_text);
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    order.push_back(parse_trace(alpha, item));
  }
  if (order.empty()) throw std::invalid_argument("build_plan: empty plan");
  return build_plan(alpha, order, maxlen);
}

Factorization factorization_from_plan(const ElimPlan& plan) {
  Factorization F;
  F.base = plan.base;
  for (const auto& step : plan.steps) F.levels.push_back(step.eliminated_alphabet());
  F.levels.push_back(plan.final_level());
  F.provenance = plan;
  return F;
}

namespace {

/// All ways of removing a nonempty <G>-prefix from t: maps the residue
/// word to the removed factor. Includes t itself with the empty factor.
std::map<Word, Trace> peel_factors(const DerivedAlphabet& G, const Trace& t) {
  std::map<Word, Trace> factor{{t.word(), Trace::identity(*G.base)}};
  std::vector<Trace> queue{t};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Trace cur = queue[qi];
    const Trace& got = factor.at(cur.word());
    for (const Trace& g : G.generators) {
      if (g.length() > cur.length()) break;
      auto rest = left_divide(g, cur);
      if (!rest) continue;
      Trace f = concat(got, g);
      if (factor.emplace(rest->word(), std::move(f)).second) queue.push_back(*rest);
    }
  }
  return factor;
}

}  // namespace

std::vector<std::pair<int, Trace>> decompose(const Factorization& F, const Trace& t, int maxlen) {
  if (t.length() > maxlen) throw std::invalid_argument("decompose: trace exceeds the bound");
  // Longest-factor-first search with backtracking. A plain greedy sweep
  // is not enough: a level generator can left-divide the residue as a
  // base trace without being part of the (unique) decreasing
  // decomposition, so dead ends must be revisable. Uniqueness makes the
  // result independent of the exploration order.
  std::set<std::pair<Word, int>> dead;
  std::vector<std::pair<int, Trace>> out;
  std::function<bool(const Trace&, int)> go = [&](const Trace& rest, int i) {
    if (rest.empty()) return true;
    if (i >= static_cast<int>(F.levels.size())) return false;
    if (dead.count({rest.word(), i})) return false;
    auto factors = peel_factors(F.levels[i], rest);
    std::vector<const Word*> residues;
    for (const auto& [residue, factor] : factors) residues.push_back(&residue);
    std::sort(residues.begin(), residues.end(), [](const Word* a, const Word* b) {
      return a->size() != b->size() ? a->size() < b->size() : *a < *b;
    });
    for (const Word* residue : residues) {
      const Trace& factor = factors.at(*residue);
      if (go(normalize(*F.base, *residue), i + 1)) {
        if (!factor.empty()) out.emplace_back(i, factor);
        return true;
      }
    }
    dead.insert({rest.word(), i});
    return false;
  };
  if (!go(t, 0)) throw std::runtime_error("decompose: no decomposition within bound");
  std::reverse(out.begin(), out.end());
  return out;
}

Factorization compose(const Factorization& F, const Factorization& F2, int k) {
  if (k < 0 || k >= static_cast<int>(F.levels.size()))
    throw std::invalid_argument("compose: level index out of range");
  if (F.base != F2.base) throw std::invalid_argument("compose: alphabet mismatch");
  const DerivedAlphabet& target = F.levels[k];
  for (const auto& level : F2.levels)
    for (const Trace& g : level.generators) {
      auto factors = peel_factors(target, g);
      if (!factors.count(Word{}))
        throw std::invalid_argument("compose: generator '" + g.str() +
                                    "' is not expressible over the replaced level");
    }
  Factorization out;
  out.base = F.base;
  out.levels.assign(F.levels.begin(), F.levels.begin() + k);
  out.levels.insert(out.levels.end(), F2.levels.begin(), F2.levels.end());
  out.levels.insert(out.levels.end(), F.levels.begin() + k + 1, F.levels.end());
  return out;
}

Factorization restrict_to(const Factorization& F, const DerivedAlphabet& X, int bound) {
  Factorization out;
  out.base = F.base;
  for (const auto& level : F.levels) {
    bool keep = true;
    for (const Trace& g : level.generators) {
      if (g.length() > bound) continue;
      auto factors = peel_factors(X, g);
      if (!factors.count(Word{})) {
        keep = false;
        break;
      }
    }
    if (keep) out.levels.push_back(level);
  }
  return out;
}

bool is_cut(const Factorization& F, int i, Mask B, int bound) {
  if (i < 0 || i >= static_cast<int>(F.levels.size()))
    throw std::invalid_argument("is_cut: level index out of range");
  const auto& alpha = *F.base;
  Mask Z = alpha.all_mask() & ~B;
  // Members of <Y_i> of length <= bound by forward closure.
  std::unordered_set<Word> members{Word{}};
  std::vector<Trace> queue{Trace::identity(alpha)};
  bool left_hit = false, right_hit = false;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Trace cur = queue[qi];
    for (const Trace& g : F.levels[i].generators) {
      if (cur.length() + g.length() > bound) continue;
      Trace next = concat(cur, g);
      if (!members.insert(next.word()).second) continue;
      queue.push_back(next);
      if ((next.alph_mask() & ~B) == 0) left_hit = true;
      if ((initial_alphabet(next) & ~Z) == 0) right_hit = true;
    }
  }
  return left_hit && right_hit;
}

FactorizationCheck verify_factorization(const Factorization& F, int n) {
  const auto& alpha = *F.base;
  int k = static_cast<int>(F.levels.size());
  // count[w][i]: decompositions of w over levels i..k-1; residues are
  // strictly shorter, so filling in (length, lex) order suffices.
  std::unordered_map<Word, std::vector<long long>> memo;
  auto traces = enumerate_traces(alpha, n);
  for (const auto& t : traces) memo.emplace(t.word(), std::vector<long long>(k + 1, 0));
  // Base: the empty residue decomposes exactly once from any level on.
  for (int i = k; i >= 0; --i) memo[Word{}][i] = 1;
  for (const auto& t : traces) {
    if (t.empty()) continue;
    auto& row = memo[t.word()];
    for (int i = k - 1; i >= 0; --i) {
      long long total = row[i + 1];  // skip level i
      for (const auto& [residue, factor] : peel_factors(F.levels[i], t)) {
        if (factor.empty()) continue;
        total += memo.at(residue)[i + 1];
      }
      row[i] = total;
    }
  }
  for (const auto& t : traces) {
    if (t.empty()) continue;
    long long c = memo[t.word()][0];
    if (c != 1) return {false, t, c};
  }
  return {};
}

}  // namespace tracealg
