#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "helpers.hpp"

using namespace tracealg;

namespace {

std::vector<Word> all_words(int letters, int maxlen) {
  std::vector<Word> out{Word{}};
  size_t begin = 0;
  for (int len = 1; len <= maxlen; ++len) {
    size_t end = out.size();
    for (size_t i = begin; i < end; ++i)
      for (int a = 0; a < letters; ++a) out.push_back(out[i] + static_cast<char>(a));
    begin = end;
  }
  return out;
}

}  // namespace

TEST_CASE("normalize examples") {
  auto ab = IndependenceAlphabet({"a", "b"}, std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(normalize(ab, Word{1, 0}).str() == "ab");

  auto p3 = th::path(3);
  CHECK(parse_trace(p3, "cba").str() == "bca");
  CHECK(parse_trace(p3, "a").str() == "a");
  CHECK(parse_trace(p3, "1").empty());
  CHECK_THROWS_AS(parse_trace(p3, "axc"), std::invalid_argument);
}

TEST_CASE("normalize agrees with the projection oracle exhaustively") {
  // Classes of length <= 6 words computed by single-swap closure; both
  // normalize and equivalent must match the closure exactly.
  for (const auto& alpha :
       {th::path(3), th::ab_c(), th::free_monoid(2), th::complete(3), th::path(4)}) {
    auto words = all_words(alpha.size(), 6);
    std::map<Word, int> cls;
    std::vector<std::vector<Word>> groups;
    for (const auto& w : words) {
      if (cls.count(w)) continue;
      // BFS over adjacent transpositions of independent letters.
      std::vector<Word> group{w};
      cls[w] = static_cast<int>(groups.size());
      for (size_t qi = 0; qi < group.size(); ++qi) {
        Word cur = group[qi];
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
          if (!alpha.independent(cur[i], cur[i + 1])) continue;
          Word next = cur;
          std::swap(next[i], next[i + 1]);
          if (!cls.count(next)) {
            cls[next] = cls[w];
            group.push_back(next);
          }
        }
      }
      groups.push_back(std::move(group));
    }
    std::set<Word> normal_forms;
    for (const auto& group : groups) {
      Word least = *std::min_element(group.begin(), group.end(), [](const Word& x, const Word& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
      });
      for (const auto& w : group) CHECK(normalize(alpha, w).word() == least);
      CHECK(normal_forms.insert(least).second);
    }
    // equivalent(u, v) iff same class; true cases exhaustively, false
    // cases on a deterministic sample.
    std::mt19937 rng(7);
    for (const auto& group : groups)
      for (const auto& w : group) {
        CHECK(equivalent(alpha, group.front(), w));
        const auto& other = groups[rng() % groups.size()].front();
        CHECK(equivalent(alpha, w, other) == (cls.at(other) == cls.at(w)));
      }
  }
}

TEST_CASE("concat") {
  auto ab = IndependenceAlphabet({"a", "b"}, std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(concat(th::tr(ab, "b"), th::tr(ab, "a")).str() == "ab");

  auto abc = th::ab_c();
  CHECK(concat(th::tr(abc, "a"), th::tr(abc, "bc")) == concat(th::tr(abc, "b"), th::tr(abc, "ac")));
  CHECK(concat(th::tr(abc, "a"), th::tr(abc, "bc")).str() == "abc");

  auto p3 = th::path(3);
  auto t = th::tr(p3, "bca");
  CHECK(concat(t, Trace::identity(p3)) == t);
  CHECK(concat(Trace::identity(p3), t) == t);

  // Associativity, length and alphabet additivity on random triples.
  std::mt19937 rng(11);
  auto words = all_words(3, 4);
  for (int it = 0; it < 200; ++it) {
    auto pick = [&] { return normalize(p3, words[rng() % words.size()]); };
    Trace x = pick(), y = pick(), z = pick();
    CHECK(concat(concat(x, y), z) == concat(x, concat(y, z)));
    CHECK(concat(x, y).length() == x.length() + y.length());
    CHECK(concat(x, y).alph_mask() == (x.alph_mask() | y.alph_mask()));
  }

  auto other = th::path(3);
  CHECK_THROWS_AS(concat(th::tr(p3, "a"), th::tr(other, "a")), std::invalid_argument);
}

TEST_CASE("initial and terminal alphabets") {
  auto p3 = th::path(3);
  CHECK(initial_alphabet(th::tr(p3, "bc")) == p3.parse_subset("b,c"));
  CHECK(initial_alphabet(th::tr(p3, "ac")) == p3.parse_subset("a"));
  CHECK(initial_alphabet(Trace::identity(p3)) == 0);
  CHECK(terminal_alphabet(th::tr(p3, "ac")) == p3.parse_subset("c"));
  CHECK(terminal_alphabet(th::tr(p3, "bc")) == p3.parse_subset("b,c"));

  // IA letters are pairwise independent; a is initial iff left division
  // succeeds and recombines.
  auto words = all_words(3, 5);
  for (const auto& w : words) {
    Trace t = normalize(p3, w);
    Mask ia = initial_alphabet(t);
    for (int a : mask_letters(ia))
      for (int b : mask_letters(ia))
        if (a != b) CHECK(p3.independent(a, b));
    for (int a = 0; a < 3; ++a) {
      auto q = left_divide(a, t);
      CHECK(q.has_value() == (((ia >> a) & 1u) != 0));
      if (q) CHECK(concat(normalize(p3, Word(1, static_cast<char>(a))), *q) == t);
    }
  }
}

TEST_CASE("left division examples") {
  auto ab = IndependenceAlphabet({"a", "b"}, std::vector<std::pair<int, int>>{{0, 1}});
  auto q = left_divide(1, th::tr(ab, "ab"));
  REQUIRE(q);
  CHECK(q->str() == "a");

  auto p3 = th::path(3);
  CHECK(!left_divide(2, th::tr(p3, "ac")));
  CHECK(!left_divide(0, Trace::identity(p3)));
}

TEST_CASE("enumerate_traces") {
  auto abc = th::ab_c();
  auto t2 = enumerate_traces(abc, 2);
  CHECK(t2.size() == 12);  // 1 + 3 + 8

  auto free2 = th::free_monoid(2);
  CHECK(enumerate_traces(free2, 2).size() == 7);  // 1 + 2 + 4

  auto p4 = th::path(4);
  auto t3 = enumerate_traces(p4, 3);
  std::map<int, int> per_len;
  for (const auto& t : t3) ++per_len[t.length()];
  CHECK(per_len[0] == 1);
  CHECK(per_len[1] == 4);
  CHECK(per_len[2] == 13);
  CHECK(per_len[3] == 40);

  // No duplicates, sorted, closed under left division.
  std::set<Trace> seen;
  for (size_t i = 0; i < t3.size(); ++i) {
    if (i) CHECK(t3[i - 1] < t3[i]);
    CHECK(seen.insert(t3[i]).second);
  }
  for (const auto& t : t3)
    for (int a : mask_letters(initial_alphabet(t))) CHECK(seen.count(*left_divide(a, t)));
}

TEST_CASE("levi factorization") {
  auto abc = th::ab_c();
  // a.bc = b.ac
  auto w = th::tr(abc, "a"), t = th::tr(abc, "bc");
  auto w2 = th::tr(abc, "b"), t2 = th::tr(abc, "ac");
  auto res = levi_factor(w, t, w2, t2);
  CHECK(res.p.empty());
  CHECK(res.s.str() == "a");
  CHECK(res.r.str() == "b");
  CHECK(res.q.str() == "c");

  auto p3 = th::path(3);
  auto u = th::tr(p3, "bca");
  auto trivial = levi_factor(u, th::tr(p3, "ab"), u, th::tr(p3, "ab"));
  CHECK(trivial.p == u);
  CHECK(trivial.s.empty());
  CHECK(trivial.r.empty());

  auto empty = levi_factor(Trace::identity(p3), u, Trace::identity(p3), u);
  CHECK(empty.r.empty());
  CHECK(empty.q == u);

  CHECK_THROWS_AS(levi_factor(th::tr(p3, "a"), th::tr(p3, "c"), th::tr(p3, "c"), th::tr(p3, "a")),
                  std::invalid_argument);

  // Exhaustive: all equal products w.t = w2.t2 of length <= 5 recombine.
  auto words = all_words(3, 5);
  std::map<Word, std::vector<std::pair<Trace, Trace>>> by_product;
  for (const auto& lw : all_words(3, 3))
    for (const auto& rw : all_words(3, 2)) {
      Trace l = normalize(p3, lw), r = normalize(p3, rw);
      if (l.word() != lw || r.word() != rw) continue;  // one split per trace pair
      by_product[concat(l, r).word()].emplace_back(l, r);
    }
  for (const auto& [prod, splits] : by_product)
    for (const auto& [w1, t1] : splits)
      for (const auto& [w2b, t2b] : splits) {
        auto lf = levi_factor(w1, t1, w2b, t2b);
        CHECK(concat(lf.p, lf.s) == w1);
        CHECK(concat(lf.r, lf.q) == t1);
        CHECK(concat(lf.p, lf.r) == w2b);
        CHECK(concat(lf.s, lf.q) == t2b);
        // r and s commute letterwise.
        for (int x : mask_letters(lf.r.alph_mask()))
          for (int y : mask_letters(lf.s.alph_mask())) CHECK(p3.independent(x, y));
        CHECK(concat(concat(lf.p, lf.s), concat(lf.r, lf.q)) ==
              concat(concat(lf.p, lf.r), concat(lf.s, lf.q)));
      }
}

TEST_CASE("trivial levi case w = w2") {
  auto abc = th::ab_c();
  auto w = th::tr(abc, "ca");
  auto t = th::tr(abc, "b");
  auto res = levi_factor(w, t, w, t);
  CHECK(res.p == w);
  CHECK(res.q == t);
  CHECK(res.s.empty());
  CHECK(res.r.empty());
}
