#include "doctest.h"
#include "oracles.hpp"
#include "platkit/errors.hpp"
#include "platkit/plat.hpp"
#include "platkit/stabilization.hpp"

using namespace platkit;

namespace {

LaurentPoly bracket_of(int strands, const std::string& word) {
  return kauffman_bracket(plat_close(parse_braid(word, strands)));
}

const LaurentPoly kDelta = LaurentPoly::delta();

}  // namespace

TEST_CASE("plat closure rejects odd strand counts") {
  CHECK_THROWS_AS(plat_close(BraidWord(3)), DomainError);
  CHECK(plat_close(BraidWord(4)).top == Pairing::standard(2));
  CHECK(Pairing::standard(3).is_noncrossing());
  CHECK_FALSE(Pairing({3, 4, 1, 2}).is_noncrossing());
}

TEST_CASE("component count matches strand following") {
  CHECK(component_count(plat_close(parse_braid("2 2 2", 4))) == 1);
  CHECK(component_count(plat_close(parse_braid("2 2", 4))) == 2);
  CHECK(component_count(plat_close(BraidWord(6))) == 3);
  oracle::Rng rng(21);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 * oracle::uniform(rng, 1, 5);
    const BraidWord w = oracle::random_word(rng, n, 30);
    CHECK(component_count(plat_close(w)) == oracle::plat_components(w));
  }
}

TEST_CASE("brackets of small plats") {
  CHECK(bracket_of(2, "1") == oracle::poly({{3, -1}}));
  CHECK(bracket_of(2, "-1") == oracle::poly({{-3, -1}}));
  CHECK(bracket_of(2, "") == LaurentPoly::constant(1));
  CHECK(bracket_of(6, "") == kDelta * kDelta);
  // Hopf link, either chirality
  CHECK(bracket_of(4, "2 2") == oracle::poly({{4, -1}, {-4, -1}}));
  // trefoil and its mirror
  const LaurentPoly t1 = oracle::poly({{5, -1}, {-3, -1}, {-7, 1}});
  const LaurentPoly t2 = oracle::poly({{-5, -1}, {3, -1}, {7, 1}});
  const LaurentPoly b = bracket_of(4, "2 2 2");
  CHECK((b == t1 || b == t2));
  CHECK(bracket_of(4, "-2 -2 -2") == (b == t1 ? t2 : t1));
}

TEST_CASE("three bracket routes agree") {
  oracle::Rng rng(22);
  for (int t = 0; t < 150; ++t) {
    const int n = 2 * oracle::uniform(rng, 1, 4);
    const PlatDiagram d = plat_close(oracle::random_word(rng, n, 14));
    const LaurentPoly serial = kernels::bracket_state_sum_serial(d);
    CHECK(kernels::bracket_state_sum_parallel(d) == serial);
    CHECK(kernels::bracket_transfer(d) == serial);
    CHECK(kauffman_bracket(d) == serial);
  }
}

TEST_CASE("PD export reads back to the same link") {
  oracle::Rng rng(23);
  for (int t = 0; t < 150; ++t) {
    const int n = 2 * oracle::uniform(rng, 1, 4);
    const BraidWord w = oracle::random_word(rng, n, 12);
    const PlatDiagram d = plat_close(w);
    const auto pd = oracle::read_pd(export_pd(d));
    CHECK(pd.crossings.size() == w.length());
    CHECK(pd.arcs.size() == static_cast<std::size_t>(n));
    CHECK(oracle::pd_components(pd) == component_count(d));
    CHECK(oracle::pd_bracket(pd) == kernels::bracket_state_sum_serial(d));
  }
}

TEST_CASE("bracket is invariant under braid relation rewrites") {
  oracle::Rng rng(24);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 * oracle::uniform(rng, 2, 4);
    const BraidWord a = oracle::random_word(rng, n, 6);
    const BraidWord b = oracle::random_word(rng, n, 6);
    const int i = oracle::uniform(rng, 1, n - 2);
    const int s = oracle::uniform(rng, 0, 1) ? 1 : -1;
    const BraidWord lhs = a * BraidWord(n, {s * i, s * (i + 1), s * i}) * b;
    const BraidWord rhs = a * BraidWord(n, {s * (i + 1), s * i, s * (i + 1)}) * b;
    CHECK(kauffman_bracket(plat_close(lhs)) == kauffman_bracket(plat_close(rhs)));
    if (n >= 4) {
      const int j = i + 2 <= n - 1 ? i + 2 : 1;
      if (std::abs(i - j) >= 2) {
        const BraidWord c1 = a * BraidWord(n, {i, -j}) * b;
        const BraidWord c2 = a * BraidWord(n, {-j, i}) * b;
        CHECK(kauffman_bracket(plat_close(c1)) == kauffman_bracket(plat_close(c2)));
      }
    }
    const BraidWord r2 = a * BraidWord(n, {i, -i}) * b;
    CHECK(kauffman_bracket(plat_close(r2)) == kauffman_bracket(plat_close(a * b)));
  }
}

TEST_CASE("split pair multiplies by delta and stabilization by a unit") {
  oracle::Rng rng(25);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 * oracle::uniform(rng, 1, 3);
    const BraidWord w = oracle::random_word(rng, n, 10);
    const LaurentPoly b = kauffman_bracket(plat_close(w));
    CHECK(kauffman_bracket(plat_close(embed(w, n + 2))) == b * kDelta);
    const BraidWord w1 = l_stabilize(w, 1);
    CHECK(unit_ratio(kauffman_bracket(plat_close(w1)), b).has_value());
    CHECK(component_count(plat_close(w1)) == component_count(plat_close(w)));
  }
}

TEST_CASE("bracket budget") {
  oracle::Rng rng(26);
  const BraidWord w = oracle::random_word(rng, 4, 30, 30);
  BracketOptions state_sum{24, BracketMethod::StateSum};
  if (w.freely_reduced().length() > 24) {
    CHECK_THROWS_AS(kauffman_bracket(plat_close(w), state_sum), ResourceError);
  }
  // the transfer sweep handles it under the same allowance
  CHECK_NOTHROW(kauffman_bracket(plat_close(w)));
  BracketOptions tiny{3, BracketMethod::Auto};
  CHECK_THROWS_AS(kauffman_bracket(plat_close(oracle::random_word(rng, 12, 40, 40)), tiny), ResourceError);
  CHECK(component_count(plat_close(oracle::random_word(rng, 12, 40, 40))) >= 1);
}

TEST_CASE("trivial link check") {
  CHECK(trivial_link_check(plat_close(BraidWord(6))) == TrivialityVerdict::ConsistentWithTrivial);
  CHECK(trivial_link_check(plat_close(parse_braid("1 1 1", 4))) == TrivialityVerdict::ConsistentWithTrivial);
  CHECK(trivial_link_check(plat_close(parse_braid("2 2 2", 4))) == TrivialityVerdict::NotTrivial);
  CHECK(trivial_link_check(plat_close(parse_braid("2 2", 4))) == TrivialityVerdict::NotTrivial);
  CHECK(to_string(TrivialityVerdict::NotTrivial) == "NotTrivial");
}
