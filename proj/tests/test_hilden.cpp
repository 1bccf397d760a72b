#include "doctest.h"
#include "oracles.hpp"
#include "platkit/errors.hpp"
#include "platkit/hilden.hpp"
#include "platkit/plat.hpp"

using namespace platkit;

TEST_CASE("Hilden generators") {
  CHECK(hilden_generators(1) == std::vector<BraidWord>{BraidWord(2, {1})});
  const auto g = hilden_generators(3);
  REQUIRE(g.size() == 4);
  CHECK(g[0] == BraidWord(6, {1}));
  CHECK(g[1] == BraidWord(6, {2, 1, 3, 2}));
  CHECK(g[2] == BraidWord(6, {2, 1, -3, -2}));
  CHECK(g[3] == BraidWord(6, {4, 3, -5, -4}));
  for (const auto& w : g) {
    CHECK(preserves_pairing(w));
    CHECK(component_count(plat_close(w)) == 3);
  }
  CHECK_FALSE(preserves_pairing(BraidWord(4, {2})));
}

TEST_CASE("expanded expressions fix the trivial plat") {
  oracle::Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    const int m = oracle::uniform(rng, 1, 4);
    const HildenExpression e = oracle::random_expression(rng, m, 12);
    const BraidWord w = expand_expression(e);
    CHECK(w.strands() == 2 * m);
    CHECK(preserves_pairing(w));
    CHECK(oracle::plat_components(w) == m);
    CHECK(verify_membership(w, e));
    if (t < 60) CHECK(trivial_link_check(plat_close(w)) == TrivialityVerdict::ConsistentWithTrivial);
  }
}

TEST_CASE("membership search") {
  const auto id = search_membership(BraidWord(4), 3);
  REQUIRE(id);
  CHECK(id->factors.empty());

  const auto inv = search_membership(BraidWord(4, {-1}), 3);
  REQUIRE(inv);
  CHECK(format_expression_tokens(*inv) == "g0^-1");

  CHECK_FALSE(search_membership(BraidWord(4, {2}), 3).has_value());
  CHECK_FALSE(search_membership(BraidWord(4, {2, 2, 2}), 3).has_value());

  oracle::Rng rng(32);
  for (int t = 0; t < 40; ++t) {
    const int m = oracle::uniform(rng, 1, 3);
    const HildenExpression e = oracle::random_expression(rng, m, 3);
    const BraidWord w = expand_expression(e);
    MembershipSearchStats stats;
    const auto found = search_membership(w, 3, &stats);
    REQUIRE(found);
    CHECK(found->factors.size() <= e.factors.size());
    CHECK(verify_membership(w, *found));
    CHECK(stats.nodes >= 1);
    // deterministic
    CHECK(search_membership(w, 3) == found);
  }
}

TEST_CASE("lexicographically least among shortest") {
  // g0 g1 and g1 g0 expand to different braids; each must come back as itself
  const HildenExpression a{2, {{0, 1}, {1, 1}}};
  const auto found = search_membership(expand_expression(a), 2);
  REQUIRE(found);
  CHECK(found->factors.size() == 2);
  // every shortest expression found must be <= the one we built when equal length
  CHECK(found->factors <= a.factors);
}

TEST_CASE("expression text") {
  const HildenExpression e = parse_expression("m=3\ng0 g2^-1 g3");
  CHECK(e.m == 3);
  CHECK(e.factors == std::vector<HildenFactor>{{0, 1}, {2, -1}, {3, 1}});
  CHECK(format_expression(e) == "m=3\ng0 g2^-1 g3\n");
  CHECK(parse_expression(format_expression(e)) == e);
  CHECK(parse_expression_tokens("", 2).factors.empty());
  CHECK_THROWS_AS(parse_expression("m=2\ng7"), ParseError);
  CHECK_THROWS_AS(parse_expression("g0"), ParseError);
  CHECK_THROWS_AS(parse_expression_tokens("h1", 2), ParseError);
  CHECK_THROWS_AS(parse_expression_tokens("g1^2", 2), ParseError);
}
