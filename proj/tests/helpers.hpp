#ifndef TRACEALG_TESTS_HELPERS_HPP
#define TRACEALG_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "tracealg/alphabet.hpp"
#include "tracealg/trace.hpp"

namespace th {

using tracealg::IndependenceAlphabet;

inline std::vector<std::string> letter_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

/// Path graph a-b-c-...
inline IndependenceAlphabet path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return IndependenceAlphabet(letter_names(n), edges);
}

/// a-b with c isolated: theta = {(a,b)} on three letters.
inline IndependenceAlphabet ab_c() {
  return IndependenceAlphabet(letter_names(3), std::vector<std::pair<int, int>>{{0, 1}});
}

inline IndependenceAlphabet free_monoid(int n) {
  return IndependenceAlphabet(letter_names(n), std::vector<std::pair<int, int>>{});
}

inline IndependenceAlphabet complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return IndependenceAlphabet(letter_names(n), edges);
}

/// Graph on n letters from an edge bitmask over pairs (i,j), i<j in
/// lexicographic pair order.
inline IndependenceAlphabet from_edge_mask(int n, unsigned mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1u) edges.emplace_back(i, j);
  return IndependenceAlphabet(letter_names(n), edges);
}

inline tracealg::Trace tr(const IndependenceAlphabet& a, std::string_view text) {
  return tracealg::parse_trace(a, text);
}

}  // namespace th

#endif
