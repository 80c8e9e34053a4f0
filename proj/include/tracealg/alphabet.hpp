#ifndef TRACEALG_ALPHABET_HPP
#define TRACEALG_ALPHABET_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tracealg {

/// Index of a letter inside its alphabet.
using Letter = unsigned char;

/// A word over an alphabet, stored as a string of letter indices
/// (not symbols). Byte-wise comparison of words coincides with the
/// lexicographic order induced by the letter declaration order.
using Word = std::string;

/// Subset of letters as a bit mask over letter indices.
using Mask = std::uint32_t;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An independence alphabet (A, theta): a finite ordered set of letter
/// symbols together with an antireflexive symmetric relation theta.
/// (a, b) in theta means a and b commute. The declaration order of the
/// letters is the total order used for every normal form and canonical
/// tie-break in this library.
class IndependenceAlphabet {
 public:
  IndependenceAlphabet(std::vector<std::string> letters,
                       const std::vector<std::pair<int, int>>& theta_edges);
  IndependenceAlphabet(std::vector<std::string> letters,
                       const std::vector<std::pair<std::string, std::string>>& theta_edges);

  int size() const { return static_cast<int>(letters_.size()); }
  const std::string& letter(int i) const { return letters_.at(i); }
  const std::vector<std::string>& letters() const { return letters_; }

  /// Index of a symbol; throws std::invalid_argument for unknown symbols.
  int index(std::string_view symbol) const;
  int find(std::string_view symbol) const;  // -1 when unknown

  bool independent(int i, int j) const { return (adj_[i] >> j) & 1u; }
  /// theta-neighbourhood of letter i as a mask (never contains i).
  Mask neighbors(int i) const { return adj_[i]; }
  Mask all_mask() const { return size() == 32 ? ~Mask{0} : ((Mask{1} << size()) - 1); }

  /// Letters independent of every letter of m. For m = 0 this is all of A.
  Mask independent_of(Mask m) const;

  /// Independence edges as unordered pairs (i < j), sorted.
  std::vector<std::pair<int, int>> theta_pairs() const;

  /// All unordered pairs of distinct letters not in theta, sorted.
  std::vector<std::pair<int, int>> dependence_graph() const;

  /// Subalphabet induced on `keep`, letters in inherited order.
  IndependenceAlphabet restrict(Mask keep) const;

  /// Every subset of pairwise independent letters (the empty set
  /// included), in size-then-lexicographic order.
  std::vector<std::vector<int>> independent_cliques() const;
  std::vector<Mask> independent_clique_masks() const;

  /// Parses a subset given as symbols separated by commas or spaces.
  Mask parse_subset(std::string_view text) const;
  std::string subset_str(Mask m) const;

  bool single_char_symbols() const { return single_char_; }

  bool operator==(const IndependenceAlphabet& o) const {
    return letters_ == o.letters_ && adj_ == o.adj_;
  }

 private:
  void add_edge(int i, int j);
  void finish();

  std::vector<std::string> letters_;
  std::vector<Mask> adj_;
  bool single_char_ = true;
};

/// Reads the line-oriented alphabet format:
///   letters <l1> <l2> ...      (exactly one, first content line)
///   edge <li> <lj>             (zero or more independence edges)
/// '#' starts a comment, blank lines are ignored.
IndependenceAlphabet parse_alphabet(std::istream& in);
IndependenceAlphabet parse_alphabet(const std::string& text);
IndependenceAlphabet parse_alphabet_file(const std::string& path);

int mask_popcount(Mask m);
std::vector<int> mask_letters(Mask m);

}  // namespace tracealg

#endif
