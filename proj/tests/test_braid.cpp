#include "doctest.h"
#include "oracles.hpp"
#include "platkit/braid.hpp"
#include "platkit/errors.hpp"

using namespace platkit;

TEST_CASE("parse and print braid words") {
  const BraidWord w = parse_braid("  2 1 -3\t-2 ", 4);
  CHECK(w.letters() == std::vector<int>{2, 1, -3, -2});
  CHECK(w.to_string() == "2 1 -3 -2");
  CHECK(parse_braid("", 3).empty());
  CHECK(parse_braid(w.to_string(), 4) == w);
  CHECK_THROWS_AS(parse_braid("1 x", 3), ParseError);
  CHECK_THROWS_AS(parse_braid("1.5", 3), ParseError);
  CHECK_THROWS(parse_braid("3", 3));
  CHECK_THROWS(parse_braid("0", 3));
  CHECK_THROWS_AS(BraidWord(0), DomainError);
}

TEST_CASE("permutation follows strands upward") {
  const Permutation p = permutation_of(parse_braid("1 2", 3));
  CHECK(p(1) == 3);
  CHECK(p(2) == 1);
  CHECK(p(3) == 2);
  CHECK(p.cycle_type() == std::vector<int>{3});
  CHECK(permutation_of(BraidWord(5)) == Permutation::identity(5));
}

TEST_CASE("braid relations hold for every n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) >= 2) {
          CHECK(braids_equal(BraidWord(n, {i, j}), BraidWord(n, {j, i})));
        }
      }
      if (i + 1 < n) {
        CHECK(braids_equal(BraidWord(n, {i, i + 1, i}), BraidWord(n, {i + 1, i, i + 1})));
        CHECK(braids_equal(BraidWord(n, {-i, -(i + 1), -i}), BraidWord(n, {-(i + 1), -i, -(i + 1)})));
        CHECK_FALSE(braids_equal(BraidWord(n, {i, i + 1}), BraidWord(n, {i + 1, i})));
      }
      CHECK(braids_equal(BraidWord(n, {i, -i}), BraidWord(n)));
      CHECK_FALSE(braids_equal(BraidWord(n, {i, i}), BraidWord(n)));
    }
  }
}

TEST_CASE("permutation and exponent sum are homomorphisms") {
  oracle::Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const int n = oracle::uniform(rng, 2, 8);
    const BraidWord a = oracle::random_word(rng, n, 20);
    const BraidWord b = oracle::random_word(rng, n, 20);
    CHECK(permutation_of(a * b) == permutation_of(a).then(permutation_of(b)));
    CHECK(exponent_sum(a * b) == exponent_sum(a) + exponent_sum(b));
    CHECK(permutation_of(a.inverse()) == permutation_of(a).inverse());
    CHECK(exponent_sum(a) == oracle::letter_sum(a));
    const auto where = oracle::follow_strands(a);
    for (int s = 1; s <= n; ++s) CHECK(permutation_of(a)(s) == where[s]);
  }
}

TEST_CASE("embed commutes with products and inverses") {
  oracle::Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    const int n = oracle::uniform(rng, 2, 6);
    const int n2 = n + oracle::uniform(rng, 0, 3);
    const BraidWord a = oracle::random_word(rng, n, 15);
    const BraidWord b = oracle::random_word(rng, n, 15);
    CHECK(embed(a * b, n2) == embed(a, n2) * embed(b, n2));
    CHECK(embed(a.inverse(), n2) == embed(a, n2).inverse());
  }
  CHECK_THROWS_AS(embed(BraidWord(4), 3), DomainError);
}

TEST_CASE("Artin image matches substitution oracle") {
  oracle::Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    const int n = oracle::uniform(rng, 2, 6);
    const BraidWord w = oracle::random_word(rng, n, 16);
    const auto ours = ArtinImage::of(w).images();
    const auto ref = oracle::artin_images(w);
    REQUIRE(ours.size() == ref.size());
    for (std::size_t k = 0; k < ref.size(); ++k) CHECK(ours[k] == ref[k]);
  }
}

TEST_CASE("Artin image composes and w w^-1 is the identity") {
  oracle::Rng rng(14);
  for (int t = 0; t < 1000; ++t) {
    const int n = oracle::uniform(rng, 2, 8);
    const BraidWord w = oracle::random_word(rng, n, 40);
    CHECK(ArtinImage::of(w * w.inverse()).is_identity());
    if (t % 5 == 0) {
      const BraidWord v = oracle::random_word(rng, n, 10);
      CHECK(compose(ArtinImage::of(w), ArtinImage::of(v)) == ArtinImage::of(w * v));
    }
  }
}

TEST_CASE("braids_equal agrees with the oracle") {
  oracle::Rng rng(15);
  for (int t = 0; t < 300; ++t) {
    const int n = oracle::uniform(rng, 2, 6);
    const BraidWord a = oracle::random_word(rng, n, 12);
    BraidWord b = oracle::random_word(rng, n, 12);
    if (t % 3 == 0) {
      const BraidWord c = oracle::random_word(rng, n, 6);
      b = c * a * c.inverse();  // equal only when c commutes with a
    }
    const bool eq = braids_equal(a, b);
    CHECK(eq == oracle::equal(a, b));
    if (eq) {
      CHECK(permutation_of(a) == permutation_of(b));
      CHECK(exponent_sum(a) == exponent_sum(b));
    }
  }
  CHECK_THROWS_AS(braids_equal(BraidWord(3), BraidWord(4)), DomainError);
}

TEST_CASE("Artin image respects the letter limit") {
  std::vector<int> letters;
  for (int k = 0; k < 40; ++k) {
    letters.push_back(1);
    letters.push_back(-2);
  }
  const BraidWord w(3, letters);
  CHECK_THROWS_AS(ArtinImage::of(w, 1000), ResourceError);
  CHECK_THROWS_AS(ArtinImage::of(w), ResourceError);
  CHECK(ArtinImage::of(BraidWord(3, {1, -2, 1, -2})).total_letters() < 1000);
}

TEST_CASE("free reduction and concat") {
  const BraidWord w(4, {1, 2, -2, -1, 3});
  CHECK(w.freely_reduced() == BraidWord(4, {3}));
  const std::vector<BraidWord> parts{BraidWord(4, {1}), BraidWord(4), BraidWord(4, {-3, 2})};
  CHECK(concat(parts, 4) == BraidWord(4, {1, -3, 2}));
  CHECK(is_trivial_braid(w * BraidWord(4, {-3})));
}
