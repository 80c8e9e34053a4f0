#include "tracealg/trace.hpp"

#include <algorithm>
#include <map>

namespace tracealg {

Mask Trace::alph_mask() const {
  Mask m = 0;
  for (unsigned char c : word_) m |= Mask{1} << c;
  return m;
}

std::string Trace::str() const {
  if (word_.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i && !alpha_->single_char_symbols()) out += ' ';
    out += alpha_->letter(word_[i]);
  }
  return out;
}

Trace normalize(const IndependenceAlphabet& alpha, const Word& w) {
  for (unsigned char c : w)
    if (c >= static_cast<unsigned>(alpha.size()))
      throw std::invalid_argument("trace: letter index out of range");
  Trace t(alpha);
  Word rest = w;
  Word& out = t.word_;
  out.reserve(w.size());
  while (!rest.empty()) {
    // A position is movable to the front iff its letter commutes with
    // everything before it; among movable letters pick the least.
    int best = -1;
    Mask seen = 0;
    for (size_t i = 0; i < rest.size(); ++i) {
      unsigned char c = rest[i];
      if ((seen & ~alpha.neighbors(c)) == 0 && (best < 0 || rest[i] < rest[best]))
        best = static_cast<int>(i);
      seen |= Mask{1} << c;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + best);
  }
  return t;
}

Trace parse_trace(const IndependenceAlphabet& alpha, std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) tokens.push_back(cur), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  Word w;
  if (tokens.size() == 1 && tokens[0] == "1") return Trace::identity(alpha);
  for (const auto& tok : tokens) {
    if (alpha.find(tok) >= 0) {
      w.push_back(static_cast<char>(alpha.index(tok)));
    } else if (alpha.single_char_symbols()) {
      for (char c : tok) w.push_back(static_cast<char>(alpha.index(std::string(1, c))));
    } else {
      throw std::invalid_argument("trace: unknown letter '" + tok + "'");
    }
  }
  return normalize(alpha, w);
}

Trace concat(const Trace& t, const Trace& u) {
  if (&t.alphabet() != &u.alphabet())
    throw std::invalid_argument("trace: alphabet mismatch in product");
  return normalize(t.alphabet(), t.word() + u.word());
}

bool equivalent(const IndependenceAlphabet& alpha, const Word& u, const Word& v) {
  auto counts = [&](const Word& w) {
    std::vector<int> c(alpha.size(), 0);
    for (unsigned char x : w) {
      if (x >= static_cast<unsigned>(alpha.size()))
        throw std::invalid_argument("trace: letter index out of range");
      ++c[x];
    }
    return c;
  };
  if (counts(u) != counts(v)) return false;
  auto project = [&](const Word& w, int a, int b) {
    Word p;
    for (unsigned char x : w)
      if (x == a || x == b) p.push_back(static_cast<char>(x));
    return p;
  };
  for (auto [a, b] : alpha.dependence_graph())
    if (project(u, a, b) != project(v, a, b)) return false;
  return true;
}

Mask initial_alphabet(const Trace& t) {
  const auto& alpha = t.alphabet();
  Mask ia = 0, seen = 0;
  for (unsigned char c : t.word()) {
    if ((seen & ~alpha.neighbors(c)) == 0) ia |= Mask{1} << c;
    seen |= Mask{1} << c;
  }
  return ia;
}

Mask terminal_alphabet(const Trace& t) {
  const auto& alpha = t.alphabet();
  Mask ta = 0, seen = 0;
  const Word& w = t.word();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    unsigned char c = *it;
    if ((seen & ~alpha.neighbors(c)) == 0) ta |= Mask{1} << c;
    seen |= Mask{1} << c;
  }
  return ta;
}

std::optional<Trace> left_divide(int a, const Trace& t) {
  const auto& alpha = t.alphabet();
  const Word& w = t.word();
  Mask seen = 0;
  for (size_t i = 0; i < w.size(); ++i) {
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

std::optional<Trace> left_divide(const Trace& x, const Trace& t) {
  if (&x.alphabet() != &t.alphabet())
    throw std::invalid_argument("trace: alphabet mismatch in division");
  Trace rest = t;
  for (unsigned char c : x.word()) {
    auto next = left_divide(c, rest);
    if (!next) return std::nullopt;
    rest = std::move(*next);
  }
  return rest;
}

std::vector<Trace> enumerate_traces(const IndependenceAlphabet& alpha, int n) {
  if (n < 0) throw std::invalid_argument("enumerate_traces: negative bound");
  std::vector<Trace> out{Trace::identity(alpha)};
  size_t level_begin = 0;
  for (int len = 1; len <= n; ++len) {
    size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i) {
      Word w = out[i].word();
      for (int a = 0; a < alpha.size(); ++a) {
        // w.a is a normal form iff no bigger letter of w commutes with a
        // and with everything after itself.
        bool ok = true;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
          if (!alpha.independent(*it, a)) break;
          if (*it > a) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        out.push_back(normalize(alpha, w + static_cast<char>(a)));
      }
    }
    level_begin = level_end;
    std::sort(out.begin() + level_begin, out.end());
  }
  return out;
}

LeviWitness levi_factor(const Trace& w, const Trace& t, const Trace& w2, const Trace& t2) {
  const auto& alpha = w.alphabet();
  if (concat(w, t) != concat(w2, t2))
    throw std::invalid_argument("levi_factor: the two products differ");
  if (w.empty()) return {Trace::identity(alpha), t2, w2, Trace::identity(alpha)};
  int a = mask_letters(initial_alphabet(w)).front();
  Trace wr = *left_divide(a, w);
  if (auto w2r = left_divide(a, w2)) {
    LeviWitness sub = levi_factor(wr, t, *w2r, t2);
    Trace al = normalize(alpha, Word(1, static_cast<char>(a)));
    return {concat(al, sub.p), sub.q, sub.r, sub.s};
  }
  // a is initial in w2.t2 but not in w2, so it is initial in t2 and
  // independent of all of w2.
  Trace t2r = *left_divide(a, t2);
  LeviWitness sub = levi_factor(wr, t, w2, t2r);
  Trace al = normalize(alpha, Word(1, static_cast<char>(a)));
  return {sub.p, sub.q, sub.r, concat(al, sub.s)};
}

}  // namespace tracealg
