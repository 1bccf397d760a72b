#include "doctest.h"
#include "oracles.hpp"
#include "platkit/banded.hpp"
#include "platkit/errors.hpp"

using namespace platkit;

namespace {

BandedBraid toy() { return BandedBraid(BraidWord(4), {Band{2, 1, 0.5}}); }

Certificates toy_certs() {
  Certificates c;
  c.lambda = parse_lambda("0,0");
  c.lambda1 = parse_lambda("0,0");
  c.lambda2 = parse_lambda("1");
  for (auto* e : {&c.gamma, &c.gamma_prime, &c.delta, &c.delta_prime}) e->m = 2;
  return c;
}

}  // namespace

TEST_CASE("banded braid validation") {
  CHECK_THROWS_AS(BandedBraid(BraidWord(4), {Band{4, 1, 0.5}}), DomainError);
  CHECK_THROWS_AS(BandedBraid(BraidWord(4), {Band{1, 2, 0.5}}), DomainError);
  CHECK_THROWS_AS(BandedBraid(BraidWord(4), {Band{1, 1, 1.0}}), DomainError);
  CHECK_THROWS_AS(BandedBraid(BraidWord(4), {Band{1, 1, 0.3}, Band{2, 1, 0.3}}), DomainError);
  CHECK_THROWS_AS(BandedBraid(BraidWord(3), {}), DomainError);
  const BandedBraid bb(BraidWord(4), {Band{1, 1, 0.7}, Band{3, -1, 0.2}});
  CHECK(bb.bands()[0].time == doctest::Approx(0.2));
}

TEST_CASE("surgery inserts band crossings by height") {
  const BraidWord base(4, {1, 3, 2});  // levels 1/6, 1/2, 5/6
  CHECK(surger(base, {Band{2, 1, 0.1}}).word == BraidWord(4, {2, 1, 3, 2}));
  CHECK(surger(base, {Band{2, -1, 0.4}}).word == BraidWord(4, {1, -2, 3, 2}));
  CHECK(surger(base, {Band{1, 1, 0.9}}).word == BraidWord(4, {1, 3, 2, 1}));
  const Surgery s = surger(base, {Band{2, 1, 0.1}, Band{1, 1, 0.9}});
  CHECK(s.inserted == std::vector<std::size_t>{0, 4});
  CHECK(surgery_result(toy()) == BraidWord(4, {2}));
}

TEST_CASE("marker times invert the insertion rule") {
  oracle::Rng rng(61);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 * oracle::uniform(rng, 1, 3);
    const BraidWord base = oracle::random_word(rng, n, 8);
    const int k = oracle::uniform(rng, 0, 3);
    std::vector<std::size_t> points;
    for (int i = 0; i < k; ++i) points.push_back(oracle::uniform(rng, 0, static_cast<int>(base.length())));
    std::sort(points.begin(), points.end());
    const auto times = marker_times(points, base.length());
    std::vector<Band> bands;
    for (int i = 0; i < k; ++i) bands.push_back({1, 1, times[i]});
    const Surgery s = surger(base, bands);
    for (int i = 0; i < k; ++i) CHECK(s.inserted[i] == points[i] + i);
  }
}

TEST_CASE("admissibility and Euler characteristic") {
  const AdmissibilityReport r = admissibility_report(toy());
  CHECK(r.c1 == 2);
  CHECK(r.c2 == 1);
  CHECK(r.admissible);
  CHECK(realizing_euler_char(toy()) == 2);
  CHECK(realizing_euler_char(toy(), &r) == 2);

  // base is a trefoil plat: not admissible
  const BandedBraid bad(BraidWord(4, {2, 2, 2}), {Band{1, 1, 0.5}});
  CHECK_FALSE(admissibility_report(bad).admissible);
  CHECK_THROWS_AS(compile_surface(bad, toy_certs()), DomainError);
  CHECK_FALSE(search_certificates(bad, {}).has_value());
}

TEST_CASE("toy plan") {
  const BraidedSurfacePlan plan = compile_surface(toy(), toy_certs());
  CHECK(plan.degree == 4);
  REQUIRE(plan.band_branches.size() == 1);
  CHECK(plan.band_branches[0].sign == 1);
  CHECK(plan.chi == 2);
  CHECK(plan.chi == realizing_euler_char(toy()));
  CHECK(plan.chi == euler_char_plat(plan.system()));
  CHECK(preserves_pairing(plan.boundary));
  CHECK(oracle::equal(boundary_braid(plan.system()), plan.boundary));
  CHECK(plan.strips[3].band_markers.size() == 1);
  CHECK(plan.strips[0].lower == BraidWord(4));
  CHECK(plan.strips[6].upper == BraidWord(4));
  for (int i = 0; i + 1 < 7; ++i) CHECK(plan.strips[i].upper == plan.strips[i + 1].lower);

  Certificates wrong = toy_certs();
  wrong.lambda2 = parse_lambda("2");
  CHECK_THROWS_AS(compile_surface(toy(), wrong), DomainError);
  wrong = toy_certs();
  wrong.delta.factors = {{0, 1}};
  CHECK_THROWS_AS(compile_surface(toy(), wrong), VerificationError);
}

TEST_CASE("certificate search rediscovers the toy certificate") {
  CertificateBounds bounds;
  bounds.max_total = 2;
  const auto found = search_certificates(toy(), bounds);
  REQUIRE(found);
  CHECK(found->lambda.total() <= 2);
  CHECK_NOTHROW(compile_surface(toy(), *found));
}

TEST_CASE("plans for several banded braids") {
  struct Case {
    BraidWord base;
    std::vector<Band> bands;
  };
  const std::vector<Case> cases{
      {BraidWord(4), {Band{2, -1, 0.5}}},
      {BraidWord(4, {1}), {Band{2, 1, 0.8}}},
      {BraidWord(4, {-2, 1, 2}), {Band{2, 1, 0.2}}},
      {BraidWord(6), {Band{2, 1, 0.3}, Band{4, 1, 0.6}}},
  };
  for (const auto& c : cases) {
    const BandedBraid bb(c.base, c.bands);
    const auto certs = search_certificates(bb, {});
    if (!admissibility_report(bb).admissible) {
      CHECK_FALSE(certs.has_value());
      continue;
    }
    REQUIRE(certs);
    const BraidedSurfacePlan plan = compile_surface(bb, *certs);
    CHECK(plan.band_branches.size() == c.bands.size());
    for (std::size_t k = 0; k < c.bands.size(); ++k) CHECK(plan.band_branches[k].sign == bb.bands()[k].sign);
    CHECK(plan.chi == realizing_euler_char(bb));
    CHECK(plan.chi == euler_char_plat(plan.system()));
    CHECK(preserves_pairing(plan.boundary));
    CHECK(oracle::equal(boundary_braid(plan.system()), plan.boundary));
  }
}

TEST_CASE("surgery commutes with lambda-stabilization") {
  oracle::Rng rng(62);
  for (int t = 0; t < 100; ++t) {
    const int m = oracle::uniform(rng, 1, 3);
    const BraidWord base = oracle::random_word(rng, 2 * m, 6);
    std::vector<Band> bands;
    const int k = oracle::uniform(rng, 0, 2);
    for (int i = 0; i < k; ++i) {
      bands.push_back({oracle::uniform(rng, 1, 2 * m - 1), oracle::uniform(rng, 0, 1) ? 1 : -1, (i + 1) / (k + 1.0)});
    }
    if (2 * m - 1 < 1) continue;
    const BandedBraid bb(base, bands);
    const Lambda l = oracle::random_lambda(rng, m, 2);
    const Surgery s = surger(base, bb.bands());
    std::vector<std::size_t> points;
    for (std::size_t i = 0; i < s.inserted.size(); ++i) points.push_back(s.inserted[i] - i);
    const BraidWord stabilized = lambda_stabilize(base, l);
    const auto times = marker_times(points, stabilized.length());
    std::vector<Band> copied;
    for (std::size_t i = 0; i < bb.bands().size(); ++i) copied.push_back({bb.bands()[i].slot, bb.bands()[i].sign, times[i]});
    CHECK(oracle::equal(lambda_stabilize(surgery_result(bb), l), surger(stabilized, copied).word));
  }
}
