#ifndef TRACEALG_GROUP_HPP
#define TRACEALG_GROUP_HPP

#include <memory>

#include "tracealg/elimination.hpp"

namespace tracealg {

/// The doubled alphabet A~ = A u A-bar carrying the lifted relation
/// theta~: (x, y) related iff their base letters differ and are related
/// in theta. Letters interleave as a < a' < b < b' < ... and the
/// involution is index xor 1. Inverse letters print with a trailing
/// apostrophe.
class DoubledAlphabet {
 public:
  explicit DoubledAlphabet(const IndependenceAlphabet& base);

  const IndependenceAlphabet& base() const { return *base_; }
  const IndependenceAlphabet& doubled() const { return *doubled_; }

  static int bar(int letter) { return letter ^ 1; }
  static bool is_inverse(int letter) { return (letter & 1) != 0; }
  static int base_letter(int letter) { return letter >> 1; }
  static int embed(int base_letter, bool inverse = false) { return 2 * base_letter + (inverse ? 1 : 0); }

  /// B~ mask over doubled indices from a base-letter mask.
  Mask embed_mask(Mask base_mask) const;

 private:
  const IndependenceAlphabet* base_;
  std::unique_ptr<const IndependenceAlphabet> doubled_;
};

DoubledAlphabet extend_alphabet(const IndependenceAlphabet& alpha);

/// A trace over the doubled alphabet with no cancellable pair: the
/// unique minimal-length trace representing its group element.
class ReducedTrace {
 public:
  const Trace& trace() const { return trace_; }
  bool operator==(const ReducedTrace& o) const { return trace_ == o.trace_; }
  bool operator!=(const ReducedTrace& o) const { return !(*this == o); }

 private:
  friend ReducedTrace reduce_trace(const DoubledAlphabet&, Trace);
  explicit ReducedTrace(Trace t) : trace_(std::move(t)) {}
  Trace trace_;
};

/// Whether t contains no cancellable pair: positions i < j with
/// letters(i) = bar(letters(j)) and everything between related to
/// letters(i) in theta~.
bool is_reduced(const DoubledAlphabet& dbl, const Trace& t);

/// Deletes cancellable pairs (least i, then least j) until none remain.
ReducedTrace reduce_trace(const DoubledAlphabet& dbl, Trace t);

/// Parses a group word: space-separated letters, apostrophe = inverse
/// ("c' a c"); "1" is the identity.
Trace parse_group_word(const DoubledAlphabet& dbl, std::string_view text);

bool group_equal(const DoubledAlphabet& dbl, const Trace& u, const Trace& v);
ReducedTrace group_mul(const DoubledAlphabet& dbl, const Trace& u, const Trace& v);
ReducedTrace group_inverse(const DoubledAlphabet& dbl, const Trace& u);

struct RhoGenerator {
  Trace gen;          // zw in beta_Z^R(B~), z an unbarred letter of Z
  ReducedTrace conj;  // the reduced conjugate w-bar z w
};

/// Enumerates zw in beta over the doubled subalphabet B~ (z in Z
/// unbarred, w reduced over B~, |zw| <= maxlen, zw reduced) and pairs
/// each with its reduced conjugate. Verifies the length condition
/// |w-bar z w| = 2|w| + 1 on every conjugate.
std::vector<RhoGenerator> rho_generators(const DoubledAlphabet& dbl, Mask B, int maxlen);

struct SemidirectSplit {
  ReducedTrace b_part;  // image under the Z-deleting retraction
  ReducedTrace h_part;  // inverse(b_part) . g, in the kernel
};

SemidirectSplit semidirect_split(const DoubledAlphabet& dbl, const Trace& g, Mask B);

/// Applies the Z-deleting retraction (erase z and z-bar for z in Z).
ReducedTrace retract_to(const DoubledAlphabet& dbl, const Trace& g, Mask B);

struct CommutationClosure {
  std::vector<RhoGenerator> generators;
  /// Index pairs (i < j) of distinct conjugates that commute in the group.
  std::vector<std::pair<int, int>> commuting;
};

CommutationClosure commutation_closure(const DoubledAlphabet& dbl, Mask B, int maxlen);

/// When B is not a TFSA: a pair of beta_Z^R generators that are not
/// theta~-related although their conjugates commute (built from the
/// shortest TFSA witness path). When B is a TFSA: verifies that the
/// commutation closure coincides with the theta~ relation on the
/// enumerated generators and returns nothing.
std::optional<std::pair<Trace, Trace>> alpha_injectivity_witness(const DoubledAlphabet& dbl,
                                                                 Mask B, int maxlen);

}  // namespace tracealg

#endif
