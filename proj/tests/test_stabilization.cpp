#include "doctest.h"
#include "oracles.hpp"
#include "platkit/errors.hpp"
#include "platkit/hilden.hpp"
#include "platkit/plat.hpp"
#include "platkit/stabilization.hpp"

using namespace platkit;

namespace {

// T(lambda) written out letter by letter from its defining product.
std::vector<int> t_lambda_letters(const std::vector<int>& l) {
  const int m = static_cast<int>(l.size());
  std::vector<int> partial{m};
  for (int x : l) partial.push_back(partial.back() + x);
  auto tau = [](int i, int e) {
    std::vector<int> t{2 * i, 2 * i - 1, 2 * i + 1, 2 * i};
    if (e < 0) {
      std::reverse(t.begin(), t.end());
      for (auto& x : t) x = -x;
    }
    return t;
  };
  std::vector<int> out;
  for (int i = 1; i <= m; ++i) {
    const int lo = partial[i - 1];
    const int hi = partial[i];
    if (lo == hi) continue;
    std::vector<int> conj;
    for (int k = i; k <= m - 1; ++k) {
      const auto t = tau(k, 1);
      conj.insert(conj.end(), t.begin(), t.end());
    }
    for (int k = m; k <= lo - 1; ++k) {
      const auto t = tau(k, -1);
      conj.insert(conj.end(), t.begin(), t.end());
    }
    out.insert(out.end(), conj.begin(), conj.end());
    for (int k = lo; k <= hi - 1; ++k) out.push_back(2 * k);
    for (auto it = conj.rbegin(); it != conj.rend(); ++it) out.push_back(-*it);
  }
  return out;
}

}  // namespace

TEST_CASE("lambda bookkeeping") {
  const Lambda l = parse_lambda("2,0,1");
  CHECK(l.m() == 3);
  CHECK(l.partial(0) == 3);
  CHECK(l.partial(1) == 5);
  CHECK(l.partial(2) == 5);
  CHECK(l.total() == 6);
  CHECK(l.to_string() == "2,0,1");
  CHECK_THROWS_AS(Lambda::zeros(2).precedes(l), DomainError);
  CHECK(parse_lambda("0,0,0").precedes(l));
  CHECK_FALSE(l.precedes(parse_lambda("2,0,0")));
  CHECK_THROWS_AS(parse_lambda("1,-1"), ParseError);
  CHECK_THROWS_AS(parse_lambda("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_lambda(""), ParseError);
}

TEST_CASE("l-stabilization formula") {
  CHECK(l_stabilize(BraidWord(4, {1}), 2) == BraidWord(8, {1, 4, 6}));
  CHECK(l_stabilize(BraidWord(2), 1) == BraidWord(4, {2}));
  CHECK(l_stabilize(BraidWord(4, {3}), 0) == BraidWord(4, {3}));
}

TEST_CASE("tau and T_{i,j} lie in K") {
  CHECK(tau(1, 4) == BraidWord(4, {2, 1, 3, 2}));
  CHECK_THROWS_AS(tau(2, 4), DomainError);
  for (int total = 2; total <= 5; ++total) {
    for (int m = 1; m <= total; ++m) {
      for (int i = 1; i <= m; ++i) {
        for (int j = m - 1; j <= total - 1; ++j) {
          if (j < 1 && i == m) {
            CHECK(t_conjugator(i, j, m, 2 * total).empty());
            continue;
          }
          const BraidWord t = t_conjugator(i, j, m, 2 * total);
          CHECK(preserves_pairing(t));
          CHECK(oracle::plat_components(t) == total);
        }
      }
    }
  }
  CHECK_THROWS_AS(t_conjugator(1, 3, 2, 6), DomainError);
  CHECK_THROWS_AS(t_conjugator(3, 2, 2, 6), DomainError);
}

TEST_CASE("T(lambda) against its defining product") {
  oracle::Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const Lambda l = oracle::random_lambda(rng, oracle::uniform(rng, 1, 4), 3);
    const BraidWord tl = t_lambda(l);
    CHECK(tl.strands() == 2 * l.total());
    CHECK(tl.letters() == t_lambda_letters(l.entries()));
    const auto runs = t_lambda_run_positions(l);
    CHECK(static_cast<int>(runs.size()) == l.total() - l.m());
    CHECK(is_trivial_braid(t_lambda_without_runs(l)));
  }
  CHECK(t_lambda(Lambda::zeros(3)).empty());
  CHECK(t_lambda(parse_lambda("3")) == BraidWord(8, {2, 4, 6}));
  CHECK(lambda_stabilize(BraidWord(2, {1}), parse_lambda("1")) == l_stabilize(BraidWord(2, {1}), 1));
  // the first block's run alone, conjugated
  CHECK(t_lambda(parse_lambda("1,0")) == BraidWord(6, {2, 1, 3, 2, 4, -2, -3, -1, -2}));
}

TEST_CASE("lambda = (0,...,0,l) is l-stabilization") {
  for (int m = 1; m <= 3; ++m) {
    for (int l = 0; l <= 3; ++l) {
      std::vector<int> e(m, 0);
      e.back() = l;
      std::vector<int> run;
      for (int k = m; k <= m + l - 1; ++k) run.push_back(2 * k);
      CHECK(t_lambda(Lambda(e)) == BraidWord(2 * (m + l), run));
      oracle::Rng rng(42 + m * 7 + l);
      const BraidWord w = oracle::random_word(rng, 2 * m, 10);
      CHECK(braids_equal(lambda_stabilize(w, Lambda(e)), l_stabilize(w, l)));
    }
  }
}

TEST_CASE("lambda-stabilization keeps the plat closure") {
  oracle::Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    const int m = oracle::uniform(rng, 1, 3);
    const BraidWord w = oracle::random_word(rng, 2 * m, 8);
    const Lambda l = oracle::random_lambda(rng, m, 2);
    const BraidWord s = lambda_stabilize(w, l);
    CHECK(s.strands() == 2 * l.total());
    CHECK(oracle::plat_components(s) == oracle::plat_components(w));
    if (l.total() <= 5) {
      CHECK(unit_ratio(kauffman_bracket(plat_close(s)), kauffman_bracket(plat_close(w))).has_value());
    }
  }
  CHECK_THROWS_AS(lambda_stabilize(BraidWord(4), parse_lambda("1")), DomainError);
}
