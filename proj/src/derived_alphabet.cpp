#include "tracealg/derived_alphabet.hpp"

#include <algorithm>

namespace tracealg {

bool DerivedAlphabet::related(int i, int j) const {
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  return std::binary_search(relation.begin(), relation.end(), std::make_pair(i, j));
}

int DerivedAlphabet::find(const Trace& t) const {
  auto it = std::lower_bound(generators.begin(), generators.end(), t);
  if (it != generators.end() && *it == t) return static_cast<int>(it - generators.begin());
  return -1;
}

DerivedAlphabet derived_independence(const IndependenceAlphabet& alpha, std::vector<Trace> X) {
  for (const Trace& t : X) {
    if (&t.alphabet() != &alpha)
      throw std::invalid_argument("derived_independence: trace over a different alphabet");
    if (t.empty()) throw std::invalid_argument("derived_independence: empty generator trace");
  }
  std::sort(X.begin(), X.end());
  X.erase(std::unique(X.begin(), X.end()), X.end());

  DerivedAlphabet d;
  d.base = &alpha;
  d.generators = std::move(X);
  std::vector<Mask> masks;
  masks.reserve(d.generators.size());
  for (const Trace& t : d.generators) masks.push_back(t.alph_mask());
  for (int i = 0; i < d.size(); ++i) {
    Mask ind = alpha.independent_of(masks[i]);
    for (int j = i + 1; j < d.size(); ++j)
      if ((masks[j] & ~ind) == 0) d.relation.emplace_back(i, j);
  }
  return d;
}

DerivedAlphabet base_level(const IndependenceAlphabet& alpha) {
  std::vector<Trace> letters;
  for (int i = 0; i < alpha.size(); ++i)
    letters.push_back(normalize(alpha, Word(1, static_cast<char>(i))));
  DerivedAlphabet d = derived_independence(alpha, std::move(letters));
  d.enumerated_to = 1;
  return d;
}

}  // namespace tracealg
