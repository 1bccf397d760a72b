#include "platkit/banded.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "platkit/errors.hpp"

namespace platkit {

BandedBraid::BandedBraid(BraidWord base, std::vector<Band> bands)
    : base_(std::move(base)), bands_(std::move(bands)) {
  if (base_.strands() % 2 != 0) throw DomainError("banded braid needs an even strand count");
  for (const auto& b : bands_) {
    if (b.slot < 1 || b.slot > base_.strands() - 1) {
      throw DomainError("band slot " + std::to_string(b.slot) + " out of range for " +
                        std::to_string(base_.strands()) + " strands");
    }
    if (b.sign != 1 && b.sign != -1) throw DomainError("band sign must be +1 or -1");
    if (!(b.time > 0.0 && b.time < 1.0)) throw DomainError("band time must lie in (0,1)");
  }
  std::stable_sort(bands_.begin(), bands_.end(), [](const Band& a, const Band& b) { return a.time < b.time; });
  for (std::size_t i = 1; i < bands_.size(); ++i) {
    if (bands_[i].time == bands_[i - 1].time) throw DomainError("band times must be pairwise distinct");
  }
}

namespace {

// Number of base letters strictly below height t.
std::size_t insertion_point(double t, std::size_t length) {
  std::size_t p = 0;
  while (p < length && 2.0 * static_cast<double>(p) + 1.0 < 2.0 * t * static_cast<double>(length)) ++p;
  return p;
}

}  // namespace

std::vector<double> marker_times(const std::vector<std::size_t>& points, std::size_t length) {
  std::vector<double> times(points.size());
  const double len = static_cast<double>(length);
  for (std::size_t i = 0; i < points.size();) {
    std::size_t j = i;
    while (j < points.size() && points[j] == points[i]) ++j;
    const double p = static_cast<double>(points[i]);
    const double lo = length == 0 ? 0.0 : std::max(0.0, (p - 0.5) / len);
    const double hi = length == 0 ? 1.0 : std::min(1.0, (p + 0.5) / len);
    const std::size_t count = j - i;
    for (std::size_t k = 0; k < count; ++k) {
      times[i + k] = lo + (hi - lo) * static_cast<double>(k + 1) / static_cast<double>(count + 1);
    }
    i = j;
  }
  return times;
}

namespace {

BraidWord prefix(const BraidWord& w, std::size_t n) {
  return BraidWord(w.strands(), std::vector<int>(w.letters().begin(), w.letters().begin() + n));
}

}  // namespace

Surgery surger(const BraidWord& base, const std::vector<Band>& bands) {
  std::vector<Band> sorted = bands;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Band& a, const Band& b) { return a.time < b.time; });
  const std::size_t length = base.length();
  Surgery out;
  std::vector<int> letters;
  std::size_t next = 0;
  for (const auto& b : sorted) {
    if (b.slot < 1 || b.slot >= base.strands()) throw DomainError("band slot out of range");
    const std::size_t p = insertion_point(b.time, length);
    while (next < p) letters.push_back(base.letters()[next++]);
    out.inserted.push_back(letters.size());
    letters.push_back(b.sign * b.slot);
  }
  while (next < length) letters.push_back(base.letters()[next++]);
  out.word = BraidWord(base.strands(), std::move(letters));
  return out;
}

BraidWord surgery_result(const BandedBraid& bb) { return surger(bb.base(), bb.bands()).word; }

AdmissibilityReport admissibility_report(const BandedBraid& bb, const BracketOptions& options) {
  AdmissibilityReport r;
  const PlatDiagram before = plat_close(bb.base());
  const PlatDiagram after = plat_close(surgery_result(bb));
  r.c1 = component_count(before);
  r.c2 = component_count(after);
  r.base_verdict = trivial_link_check(before, options);
  r.surgery_verdict = trivial_link_check(after, options);
  r.admissible = r.base_verdict == TrivialityVerdict::ConsistentWithTrivial &&
                 r.surgery_verdict == TrivialityVerdict::ConsistentWithTrivial;
  return r;
}

int realizing_euler_char(const BandedBraid& bb, const AdmissibilityReport* report) {
  int c1, c2;
  if (report) {
    c1 = report->c1;
    c2 = report->c2;
  } else {
    c1 = component_count(plat_close(bb.base()));
    c2 = component_count(plat_close(surgery_result(bb)));
  }
  return c1 + c2 - static_cast<int>(bb.bands().size());
}

// ---------------------------------------------------------------------------

int BraidedSurfacePlan::branch_count() const {
  return static_cast<int>(band_branches.size() + lower_stabilization_branches.size() +
                          upper_stabilization_branches.size());
}

BraidSystem BraidedSurfacePlan::system() const {
  std::vector<SystemEntry> entries;
  for (const auto& e : upper_stabilization_branches) entries.emplace_back(e);
  for (auto it = band_branches.rbegin(); it != band_branches.rend(); ++it) entries.emplace_back(*it);
  for (auto it = lower_stabilization_branches.rbegin(); it != lower_stabilization_branches.rend(); ++it) {
    entries.emplace_back(*it);
  }
  return BraidSystem(degree, std::move(entries));
}

namespace {

struct RunMarkers {
  BraidWord star;
  std::vector<Band> markers;
  std::vector<std::size_t> positions;  // run letters inside the full word
};

// alpha* plus the bands whose surgery turns it back into alpha = T(lambda).
RunMarkers run_markers(const Lambda& lambda) {
  RunMarkers out;
  const BraidWord full = t_lambda(lambda);
  out.star = t_lambda_without_runs(lambda);
  out.positions = t_lambda_run_positions(lambda);
  std::vector<std::size_t> points;
  for (std::size_t k = 0; k < out.positions.size(); ++k) points.push_back(out.positions[k] - k);
  const auto times = marker_times(points, out.star.length());
  for (std::size_t k = 0; k < out.positions.size(); ++k) {
    out.markers.push_back({full.letters()[out.positions[k]], 1, times[k]});
  }
  if (surger(out.star, out.markers).word != full) {
    throw VerificationError("stabilisation markers do not reproduce T(lambda)");
  }
  return out;
}

void check_sizes(const BandedBraid& bb, const Certificates& c, const AdmissibilityReport& r) {
  const int m0 = bb.base().strands() / 2;
  if (c.lambda.m() != m0) throw DomainError("lambda must have one entry per base bridge");
  if (c.lambda1.m() != r.c1) throw DomainError("lambda1 must have c1 entries");
  if (c.lambda2.m() != r.c2) throw DomainError("lambda2 must have c2 entries");
  const int m = c.lambda.total();
  if (c.lambda1.total() != m || c.lambda2.total() != m) {
    throw DomainError("|lambda|, |lambda1| and |lambda2| must agree");
  }
  for (const auto* e : {&c.gamma, &c.gamma_prime, &c.delta, &c.delta_prime}) {
    if (e->m != m) throw DomainError("Hilden certificates must live in K_2|lambda|");
  }
}

}  // namespace

BraidedSurfacePlan compile_surface(const BandedBraid& bb, const Certificates& certs,
                                   const BracketOptions& options) {
  const AdmissibilityReport report = admissibility_report(bb, options);
  if (!report.admissible) throw DomainError("banded braid is not admissible");
  check_sizes(bb, certs, report);

  BraidedSurfacePlan plan;
  plan.certificates = certs;
  const int m = certs.lambda.total();
  const int n = 2 * m;
  plan.degree = n;

  const Surgery base_surgery = surger(bb.base(), bb.bands());
  plan.beta1 = lambda_stabilize(bb.base(), certs.lambda);
  plan.beta2 = lambda_stabilize(base_surgery.word, certs.lambda);
  plan.alpha1 = lambda_stabilize(BraidWord::identity(2 * report.c1), certs.lambda1);
  plan.alpha2 = lambda_stabilize(BraidWord::identity(2 * report.c2), certs.lambda2);

  const BraidWord gamma = expand_expression(certs.gamma);
  const BraidWord gamma_p = expand_expression(certs.gamma_prime);
  const BraidWord delta_w = expand_expression(certs.delta);
  const BraidWord delta_p = expand_expression(certs.delta_prime);
  if (!braids_equal(plan.beta1, gamma * plan.alpha1 * gamma_p)) {
    throw VerificationError("certificate check failed: beta1 != gamma alpha1 gamma'");
  }
  if (!braids_equal(plan.beta2, delta_w * plan.alpha2 * delta_p)) {
    throw VerificationError("certificate check failed: beta2 != delta alpha2 delta'");
  }

  const RunMarkers lower = run_markers(certs.lambda1);
  const RunMarkers upper = run_markers(certs.lambda2);
  plan.alpha1_star = lower.star;
  plan.alpha2_star = upper.star;

  // Copies of the bands on beta1: same insertion points, since the base is a prefix of beta1.
  std::vector<std::size_t> points;
  for (std::size_t k = 0; k < base_surgery.inserted.size(); ++k) points.push_back(base_surgery.inserted[k] - k);
  const auto times = marker_times(points, plan.beta1.length());
  std::vector<Band> copied;
  for (std::size_t k = 0; k < bb.bands().size(); ++k) {
    copied.push_back({bb.bands()[k].slot, bb.bands()[k].sign, times[k]});
  }
  const Surgery lifted = surger(plan.beta1, copied);
  if (lifted.word != plan.beta2) throw VerificationError("copied bands do not reproduce beta2");

  const BraidWord id = BraidWord::identity(n);
  plan.strips[0] = {"E0", id, plan.alpha1_star, id, id, {}, {}};
  plan.strips[1] = {"E1", plan.alpha1_star, plan.alpha1, id, id, plan.alpha1_star, lower.markers};
  plan.strips[2] = {"E2", plan.alpha1, plan.beta1, gamma.inverse(), gamma_p, {}, {}};
  plan.strips[3] = {"E3", plan.beta1, plan.beta2, id, id, plan.beta1, copied};
  plan.strips[4] = {"E4", plan.beta2, plan.alpha2, delta_w, delta_p.inverse(), {}, {}};
  plan.strips[5] = {"E5", plan.alpha2, plan.alpha2_star, id, id, plan.alpha2_star, upper.markers};
  plan.strips[6] = {"E6", plan.alpha2_star, id, id, id, {}, {}};
  for (auto& s : plan.strips) {
    if (s.band_level.strands() != n) s.band_level = id;
  }

  // Branch points, each transported to the lower-left corner along the left side.
  const BraidWord to_e3 = gamma.inverse();
  const BraidWord to_e5 = gamma.inverse() * delta_w;
  for (std::size_t k = 0; k < lower.positions.size(); ++k) {
    const std::size_t q = lower.positions[k];
    plan.lower_stabilization_branches.push_back({prefix(plan.alpha1, q), plan.alpha1.letters()[q], 1});
  }
  for (std::size_t k = 0; k < lifted.inserted.size(); ++k) {
    const std::size_t q = lifted.inserted[k];
    const int g = plan.beta2.letters()[q];
    plan.band_branches.push_back({to_e3 * prefix(plan.beta2, q), std::abs(g), g > 0 ? 1 : -1});
  }
  for (std::size_t k = 0; k < upper.positions.size(); ++k) {
    const std::size_t q = upper.positions[k];
    plan.upper_stabilization_branches.push_back({to_e5 * prefix(plan.alpha2, q), plan.alpha2.letters()[q], -1});
  }

  plan.boundary = gamma.inverse() * delta_w * delta_p * gamma_p.inverse();
  plan.chi = n - plan.branch_count();

  if (!braids_equal(boundary_braid(plan.system()), plan.boundary)) {
    throw VerificationError("branch monodromies do not multiply to the boundary braid");
  }
  return plan;
}

// ---------------------------------------------------------------------------

namespace {

// All k-tuples of non-negative integers summing to s, lexicographically.
void compositions(int s, int k, std::vector<int>& cur, const std::function<bool(const Lambda&)>& visit,
                  bool& stop) {
  if (stop) return;
  if (static_cast<int>(cur.size()) == k - 1) {
    cur.push_back(s);
    if (visit(Lambda(cur))) stop = true;
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= s && !stop; ++v) {
    cur.push_back(v);
    compositions(s - v, k, cur, visit, stop);
    cur.pop_back();
  }
}

std::vector<Lambda> lambdas_with_total(int m_entries, int total) {
  std::vector<Lambda> out;
  if (total < m_entries) return out;
  std::vector<int> cur;
  bool stop = false;
  compositions(total - m_entries, m_entries, cur,
               [&](const Lambda& l) {
                 out.push_back(l);
                 return false;
               },
               stop);
  return out;
}

// Expressions in K_2m with at most max_len factors, shortest first, then lexicographic.
std::vector<HildenExpression> expressions_up_to(int m, int max_len) {
  const int gens = m == 1 ? 1 : m + 1;
  std::vector<HildenFactor> alphabet;
  for (int g = 0; g < gens; ++g) {
    alphabet.push_back({g, 1});
    alphabet.push_back({g, -1});
  }
  std::vector<HildenExpression> out{{m, {}}};
  std::size_t level_start = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (const auto& f : alphabet) {
        HildenExpression e = out[i];
        e.factors.push_back(f);
        out.push_back(std::move(e));
      }
    }
    level_start = level_end;
  }
  return out;
}

// Finds (left, right) with target == left * middle * right, both in K_2m.
std::optional<std::pair<HildenExpression, HildenExpression>> split_double_coset(
    const BraidWord& target, const BraidWord& middle, int left_len, int right_len) {
  const int m = target.strands() / 2;
  for (const auto& left : expressions_up_to(m, left_len)) {
    const BraidWord right = middle.inverse() * expand_expression(left).inverse() * target;
    if (!preserves_pairing(right)) continue;
    if (auto expr = search_membership(right, right_len)) return std::make_pair(left, *expr);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Certificates> search_certificates(const BandedBraid& bb, const CertificateBounds& bounds,
                                                const BracketOptions& options) {
  const AdmissibilityReport report = admissibility_report(bb, options);
  if (!report.admissible) return std::nullopt;
  const int m0 = bb.base().strands() / 2;
  const int m_min = std::max({m0, report.c1, report.c2});
  const BraidWord surgered = surgery_result(bb);

  for (int depth = 0; depth <= bounds.max_hilden_len; ++depth) {
    const int left_len = std::min(depth, bounds.max_left_len);
    for (int m = m_min; m <= bounds.max_total; ++m) {
      for (const auto& lambda : lambdas_with_total(m0, m)) {
        const BraidWord beta1 = lambda_stabilize(bb.base(), lambda);
        const BraidWord beta2 = lambda_stabilize(surgered, lambda);
        for (const auto& lambda1 : lambdas_with_total(report.c1, m)) {
          const BraidWord alpha1 = t_lambda(lambda1);
          const auto gammas = split_double_coset(beta1, alpha1, left_len, depth);
          if (!gammas) continue;
          for (const auto& lambda2 : lambdas_with_total(report.c2, m)) {
            const BraidWord alpha2 = t_lambda(lambda2);
            const auto deltas = split_double_coset(beta2, alpha2, left_len, depth);
            if (!deltas) continue;
            Certificates c{lambda, lambda1, lambda2, gammas->first, gammas->second, deltas->first, deltas->second};
            compile_surface(bb, c, options);  // throws if anything fails to verify
            return c;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace platkit
