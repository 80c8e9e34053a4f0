#include "tracealg/alphabet.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <sstream>

namespace tracealg {

namespace {

bool valid_symbol(const std::string& s) {
  if (s.empty() || s == "1") return false;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (!std::isprint(static_cast<unsigned char>(c)) || std::isspace(static_cast<unsigned char>(c)) ||
        c == '"')
      return false;
    // Apostrophes mark group inverses; only a trailing one is allowed,
    // and only on letters built internally (the file parser refuses it).
    if (c == '\'' && i + 1 != s.size()) return false;
  }
  return s != "'";
}

}  // namespace

int mask_popcount(Mask m) { return std::popcount(m); }

std::vector<int> mask_letters(Mask m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

IndependenceAlphabet::IndependenceAlphabet(std::vector<std::string> letters,
                                           const std::vector<std::pair<int, int>>& theta_edges)
    : letters_(std::move(letters)) {
  finish();
  for (auto [i, j] : theta_edges) add_edge(i, j);
}

IndependenceAlphabet::IndependenceAlphabet(
    std::vector<std::string> letters,
    const std::vector<std::pair<std::string, std::string>>& theta_edges)
    : letters_(std::move(letters)) {
  finish();
  for (const auto& [a, b] : theta_edges) add_edge(index(a), index(b));
}

void IndependenceAlphabet::finish() {
  if (letters_.size() > 32) throw std::invalid_argument("alphabet: more than 32 letters");
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (!valid_symbol(letters_[i]))
      throw std::invalid_argument("alphabet: invalid letter symbol '" + letters_[i] + "'");
    if (letters_[i].size() > 1) single_char_ = false;
    for (size_t j = i + 1; j < letters_.size(); ++j)
      if (letters_[i] == letters_[j])
        throw std::invalid_argument("alphabet: duplicate letter '" + letters_[i] + "'");
  }
  adj_.assign(letters_.size(), 0);
}

void IndependenceAlphabet::add_edge(int i, int j) {
  if (i < 0 || j < 0 || i >= size() || j >= size())
    throw std::invalid_argument("alphabet: edge letter out of range");
  if (i == j)
    throw std::invalid_argument("alphabet: loop edge (" + letters_[i] + "," + letters_[j] + ")");
  adj_[i] |= Mask{1} << j;
  adj_[j] |= Mask{1} << i;
}

int IndependenceAlphabet::find(std::string_view symbol) const {
  for (int i = 0; i < size(); ++i)
    if (letters_[i] == symbol) return i;
  return -1;
}

int IndependenceAlphabet::index(std::string_view symbol) const {
  int i = find(symbol);
  if (i < 0) throw std::invalid_argument("alphabet: unknown letter '" + std::string(symbol) + "'");
  return i;
}

Mask IndependenceAlphabet::independent_of(Mask m) const {
  Mask r = all_mask();
  for (int i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) r &= adj_[i];
  return r;
}

std::vector<std::pair<int, int>> IndependenceAlphabet::theta_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (independent(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<int, int>> IndependenceAlphabet::dependence_graph() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (!independent(i, j)) out.emplace_back(i, j);
  return out;
}

IndependenceAlphabet IndependenceAlphabet::restrict(Mask keep) const {
  if ((keep & ~all_mask()) != 0)
    throw std::invalid_argument("alphabet: restriction to unknown letters");
  std::vector<int> kept = mask_letters(keep);
  std::vector<std::string> names;
  names.reserve(kept.size());
  for (int i : kept) names.push_back(letters_[i]);
  std::vector<std::pair<int, int>> edges;
  for (size_t a = 0; a < kept.size(); ++a)
    for (size_t b = a + 1; b < kept.size(); ++b)
      if (independent(kept[a], kept[b])) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return IndependenceAlphabet(std::move(names), edges);
}

std::vector<Mask> IndependenceAlphabet::independent_clique_masks() const {
  std::vector<Mask> out;
  // Recursive extension in letter order; DFS emits subsets in
  // lexicographic order, the caller regroups by size.
  struct Rec {
    const IndependenceAlphabet& a;
    std::vector<Mask>& out;
    void go(Mask current, Mask candidates, int from) {
      out.push_back(current);
      for (int i = from; i < a.size(); ++i) {
        if (!((candidates >> i) & 1u)) continue;
        go(current | (Mask{1} << i), candidates & a.neighbors(i), i + 1);
      }
    }
  } rec{*this, out};
  rec.go(0, all_mask(), 0);
  std::stable_sort(out.begin(), out.end(),
                   [](Mask x, Mask y) { return std::popcount(x) < std::popcount(y); });
  return out;
}

std::vector<std::vector<int>> IndependenceAlphabet::independent_cliques() const {
  std::vector<std::vector<int>> out;
  for (Mask m : independent_clique_masks()) out.push_back(mask_letters(m));
  return out;
}

Mask IndependenceAlphabet::parse_subset(std::string_view text) const {
  Mask m = 0;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    m |= Mask{1} << index(token);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      token.push_back(c);
  }
  flush();
  return m;
}

std::string IndependenceAlphabet::subset_str(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (int i : mask_letters(m)) {
    if (!first) out += ",";
    out += letters_[i];
    first = false;
  }
  return out + "}";
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

IndependenceAlphabet parse_alphabet(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_letters = false;
  std::vector<std::string> letters;
  std::vector<std::pair<std::string, std::string>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (!have_letters) {
      if (toks[0] != "letters")
        throw ParseError("line " + std::to_string(lineno) + ": expected 'letters' line first");
      letters.assign(toks.begin() + 1, toks.end());
      for (const auto& l : letters)
        if (l.find('\'') != std::string::npos)
          throw ParseError("line " + std::to_string(lineno) +
                           ": apostrophe is reserved for group inverses");
      have_letters = true;
    } else if (toks[0] == "letters") {
      throw ParseError("line " + std::to_string(lineno) + ": duplicate 'letters' line");
    } else if (toks[0] == "edge") {
      if (toks.size() != 3)
        throw ParseError("line " + std::to_string(lineno) + ": expected 'edge <li> <lj>'");
      edges.emplace_back(toks[1], toks[2]);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + toks[0] + "'");
    }
  }
  if (!have_letters) throw ParseError("missing 'letters' line");
  try {
    return IndependenceAlphabet(std::move(letters), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

IndependenceAlphabet parse_alphabet(const std::string& text) {
  std::istringstream ss(text);
  return parse_alphabet(ss);
}

IndependenceAlphabet parse_alphabet_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open alphabet file '" + path + "'");
  return parse_alphabet(f);
}

}  // namespace tracealg
