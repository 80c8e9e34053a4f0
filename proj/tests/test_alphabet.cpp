#include "doctest.h"

#include <set>
#include <sstream>

#include "helpers.hpp"
#include "tracealg/derived_alphabet.hpp"

using namespace tracealg;

TEST_CASE("parse_alphabet basics") {
  auto a = parse_alphabet("letters a b c\nedge a b\n");
  CHECK(a.size() == 3);
  CHECK(a.letter(0) == "a");
  CHECK(a.independent(0, 1));
  CHECK(!a.independent(0, 2));
  CHECK(a.theta_pairs() == std::vector<std::pair<int, int>>{{0, 1}});

  auto free2 = parse_alphabet("letters a b");
  CHECK(free2.theta_pairs().empty());

  CHECK_THROWS_AS(parse_alphabet("letters a\nedge a a"), ParseError);
  CHECK_THROWS_AS(parse_alphabet("letters a a"), ParseError);
  CHECK_THROWS_AS(parse_alphabet("letters a b\nedge a c"), ParseError);
  CHECK_THROWS_AS(parse_alphabet("edge a b\nletters a b"), ParseError);
  CHECK_THROWS_AS(parse_alphabet("letters a b\nfrobnicate a"), ParseError);
  CHECK_THROWS_AS(parse_alphabet("letters a b\nedge a"), ParseError);
}

TEST_CASE("comments and spacing") {
  auto a = parse_alphabet("# a comment\n\nletters a b c  # trailing\nedge b c\n# done\n");
  CHECK(a.size() == 3);
  CHECK(a.independent(1, 2));
}

TEST_CASE("dependence graph complements theta") {
  auto p3 = th::path(3);
  CHECK(p3.dependence_graph() == std::vector<std::pair<int, int>>{{0, 2}});
  auto free2 = th::free_monoid(2);
  CHECK(free2.dependence_graph() == std::vector<std::pair<int, int>>{{0, 1}});
  auto abc = th::ab_c();
  CHECK(abc.dependence_graph() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});

  // theta, dependence and the diagonal partition A x A.
  for (const auto& alpha : {th::path(4), th::ab_c(), th::free_monoid(3), th::complete(4)}) {
    std::set<std::pair<int, int>> seen;
    for (auto pr : alpha.theta_pairs()) CHECK(seen.insert(pr).second);
    for (auto pr : alpha.dependence_graph()) CHECK(seen.insert(pr).second);
    CHECK(static_cast<int>(seen.size()) == alpha.size() * (alpha.size() - 1) / 2);
  }
}

TEST_CASE("restrict") {
  auto p4 = th::path(4);
  auto ac = p4.restrict(p4.parse_subset("a,c"));
  CHECK(ac.size() == 2);
  CHECK(ac.theta_pairs().empty());

  auto all = p4.restrict(p4.all_mask());
  CHECK(all == p4);

  auto p3 = th::path(3);
  auto ab = p3.restrict(p3.parse_subset("a b"));
  CHECK(ab.theta_pairs() == std::vector<std::pair<int, int>>{{0, 1}});

  // restrict composes.
  auto abc = p4.restrict(p4.parse_subset("a,b,c"));
  auto inner = abc.restrict(abc.parse_subset("a,c"));
  CHECK(inner == ac);

  CHECK_THROWS_AS(p3.restrict(0xF0), std::invalid_argument);
}

TEST_CASE("independent cliques") {
  auto p4 = th::path(4);
  auto cliques = p4.independent_cliques();
  std::vector<std::vector<int>> expected{{}, {0}, {1}, {2}, {3}, {0, 1}, {1, 2}, {2, 3}};
  CHECK(cliques == expected);

  CHECK(th::free_monoid(3).independent_cliques().size() == 4);
  CHECK(th::complete(3).independent_cliques().size() == 8);

  // Downward closure: every subset of a clique is a clique.
  for (const auto& alpha : {th::path(4), th::complete(4), th::ab_c()}) {
    auto masks = alpha.independent_clique_masks();
    std::set<Mask> all(masks.begin(), masks.end());
    CHECK(all.size() == masks.size());
    for (Mask m : masks)
      for (int i : mask_letters(m)) CHECK(all.count(m & ~(Mask{1} << i)));
  }
}

TEST_CASE("derived independence") {
  auto p3 = th::path(3);
  auto d = derived_independence(
      p3, {th::tr(p3, "b"), th::tr(p3, "a"), th::tr(p3, "ac"), th::tr(p3, "acc")});
  REQUIRE(d.size() == 4);
  // Sorted by (length, lex): a, b, ac, acc.
  CHECK(d.generators[0].str() == "a");
  CHECK(d.generators[1].str() == "b");
  CHECK(d.generators[2].str() == "ac");
  CHECK(d.generators[3].str() == "acc");
  CHECK(d.relation == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}});

  auto p4 = th::path(4);
  auto d2 = derived_independence(
      p4, {th::tr(p4, "b"), th::tr(p4, "d"), th::tr(p4, "a"), th::tr(p4, "ac")});
  // Sorted: a, b, d, ac. Edges: (a,b) and (b,ac) only.
  CHECK(d2.relation == std::vector<std::pair<int, int>>{{0, 1}, {1, 3}});

  // On single letters the derived relation coincides with theta restricted.
  auto letters = derived_independence(p4, {th::tr(p4, "a"), th::tr(p4, "b"), th::tr(p4, "c")});
  auto restricted = p4.restrict(p4.parse_subset("a,b,c"));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      CHECK(letters.related(i, j) == restricted.independent(i, j));

  CHECK_THROWS_AS(derived_independence(p3, {Trace::identity(p3)}), std::invalid_argument);
}
