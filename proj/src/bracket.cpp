#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "platkit/errors.hpp"
#include "platkit/plat.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace platkit {

namespace {

constexpr int kMaxStateSumCrossings = 40;

void require_planar_caps(const PlatDiagram& d) {
  const int n = d.word.strands();
  if (d.bottom.size() != n || d.top.size() != n) throw DomainError("pairing size mismatch");
  if (!d.bottom.is_noncrossing() || !d.top.is_noncrossing()) {
    throw DomainError("bracket needs non-crossing cup and cap pairings");
  }
}

// counts[a * stride + loops] = number of states with `a` A-smoothings and
// `loops` closed curves.
struct Histogram {
  int crossings = 0;
  int stride = 0;
  std::vector<std::uint64_t> counts;

  Histogram(int c, int max_loops) : crossings(c), stride(max_loops + 1), counts((c + 1) * stride, 0) {}

  void merge(const Histogram& other) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  }

  LaurentPoly to_poly() const {
    LaurentPoly out;
    const LaurentPoly delta = LaurentPoly::delta();
    std::vector<LaurentPoly> delta_pow{LaurentPoly::constant(1)};
    for (int a = 0; a <= crossings; ++a) {
      for (int loops = 1; loops < stride; ++loops) {
        const std::uint64_t count = counts[a * stride + loops];
        if (count == 0) continue;
        while (static_cast<int>(delta_pow.size()) < loops) delta_pow.push_back(delta_pow.back() * delta);
        LaurentPoly term = delta_pow[loops - 1].shifted(2 * a - crossings);
        out += term * LaurentPoly::constant(static_cast<std::int64_t>(count));
      }
    }
    return out;
  }
};

// Resolves one state and returns (number of A-smoothings, loops).
class StateEvaluator {
 public:
  explicit StateEvaluator(const PlatDiagram& d)
      : n_(d.word.strands()),
        crossings_(d.crossings()),
        letters_(d.word.letters()),
        bottom_(d.bottom.partners()),
        top_(d.top.partners()),
        parent_(n_ + 2 * crossings_),
        used_(n_ + 2 * crossings_),
        cur_(n_) {}

  std::pair<int, int> operator()(std::uint64_t state) {
    const int nodes = n_ + 2 * crossings_;
    std::iota(parent_.begin(), parent_.begin() + nodes, 0);
    std::fill(used_.begin(), used_.end(), 0);
    for (int j = 0; j < n_; ++j) {
      cur_[j] = j;
      used_[j] = 1;
    }
    for (int j = 0; j < n_; ++j) unite(j, bottom_[j] - 1);
    int a_count = 0;
    for (int k = 0; k < crossings_; ++k) {
      const bool horizontal = (state >> k) & 1u;
      const int g = letters_[k];
      // sigma: horizontal smoothing is the A-smoothing; sigma^-1: the other.
      if (horizontal == (g > 0)) ++a_count;
      if (!horizontal) continue;
      const int i = std::abs(g) - 1;
      unite(cur_[i], cur_[i + 1]);
      const int lo = n_ + 2 * k;
      used_[lo] = used_[lo + 1] = 1;
      unite(lo, lo + 1);
      cur_[i] = lo;
      cur_[i + 1] = lo + 1;
    }
    for (int j = 0; j < n_; ++j) unite(cur_[j], cur_[top_[j] - 1]);
    int loops = 0;
    for (int x = 0; x < nodes; ++x) loops += used_[x] && find(x) == x;
    return {a_count, loops};
  }

  int max_loops() const { return n_ / 2 + crossings_; }

 private:
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

  int n_;
  int crossings_;
  const std::vector<int>& letters_;
  const std::vector<int>& bottom_;
  const std::vector<int>& top_;
  std::vector<int> parent_;
  std::vector<char> used_;
  std::vector<int> cur_;
};

PlatDiagram reduced_copy(const PlatDiagram& d) {
  return PlatDiagram{d.word.freely_reduced(), d.bottom, d.top};
}

}  // namespace

namespace kernels {

std::uint64_t catalan(int m) {
  std::uint64_t c = 1;
  for (int k = 0; k < m; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

LaurentPoly bracket_state_sum_serial(const PlatDiagram& d) {
  require_planar_caps(d);
  if (d.crossings() > kMaxStateSumCrossings) throw ResourceError("state sum: too many crossings");
  StateEvaluator eval(d);
  Histogram hist(d.crossings(), eval.max_loops());
  const std::uint64_t states = std::uint64_t{1} << d.crossings();
  for (std::uint64_t s = 0; s < states; ++s) {
    auto [a, loops] = eval(s);
    ++hist.counts[a * hist.stride + loops];
  }
  return hist.to_poly();
}

LaurentPoly bracket_state_sum_parallel(const PlatDiagram& d) {
  require_planar_caps(d);
  if (d.crossings() > kMaxStateSumCrossings) throw ResourceError("state sum: too many crossings");
  const std::int64_t states = std::int64_t{1} << d.crossings();
  Histogram total(d.crossings(), d.word.strands() / 2 + d.crossings());
#pragma omp parallel
  {
    StateEvaluator eval(d);
    Histogram local(d.crossings(), eval.max_loops());
#pragma omp for schedule(static)
    for (std::int64_t s = 0; s < states; ++s) {
      auto [a, loops] = eval(static_cast<std::uint64_t>(s));
      ++local.counts[a * local.stride + loops];
    }
#pragma omp critical
    total.merge(local);
  }
  // Integer sums commute, so the merge order does not affect the result.
  return total.to_poly();
}

LaurentPoly bracket_transfer(const PlatDiagram& d) {
  require_planar_caps(d);
  const int n = d.word.strands();
  using Matching = std::vector<std::uint8_t>;  // 0-based partner of each top point
  std::map<Matching, LaurentPoly> states;
  {
    Matching start(n);
    for (int j = 0; j < n; ++j) start[j] = static_cast<std::uint8_t>(d.bottom(j + 1) - 1);
    states.emplace(std::move(start), LaurentPoly::constant(1));
  }
  const LaurentPoly delta = LaurentPoly::delta();
  for (int g : d.word.letters()) {
    const int i = std::abs(g) - 1;
    const int a_exp = g > 0 ? 1 : -1;  // weight of the horizontal smoothing
    std::map<Matching, LaurentPoly> next;
    for (const auto& [match, coeff] : states) {
      next[match] += coeff.shifted(-a_exp);
      Matching cup = match;
      LaurentPoly weight = coeff.shifted(a_exp);
      if (match[i] == i + 1) {
        weight = weight * delta;
      } else {
        const int p = match[i], q = match[i + 1];
        cup[p] = static_cast<std::uint8_t>(q);
        cup[q] = static_cast<std::uint8_t>(p);
        cup[i] = static_cast<std::uint8_t>(i + 1);
        cup[i + 1] = static_cast<std::uint8_t>(i);
      }
      next[cup] += weight;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    states = std::move(next);
  }
  LaurentPoly out;
  for (const auto& [match, coeff] : states) {
    // Loops formed by the matching together with the top caps.
    std::vector<bool> seen(n, false);
    int loops = 0;
    for (int j = 0; j < n; ++j) {
      if (seen[j]) continue;
      ++loops;
      int x = j;
      while (!seen[x]) {
        seen[x] = true;
        const int y = match[x];
        seen[y] = true;
        x = d.top(y + 1) - 1;
      }
    }
    out += coeff * delta.pow(loops - 1);
  }
  return out;
}

}  // namespace kernels

LaurentPoly kauffman_bracket(const PlatDiagram& d, const BracketOptions& options) {
  require_planar_caps(d);
  // Reidemeister II leaves the bracket unchanged, so cancelling pairs go first.
  const PlatDiagram reduced = reduced_copy(d);
  const int budget = std::clamp(options.crossing_budget, 0, 62);
  const std::uint64_t allowance = std::uint64_t{1} << budget;
  const int c = reduced.crossings();
  const bool state_sum_fits = c <= budget && c <= kMaxStateSumCrossings;
  const std::uint64_t matchings = kernels::catalan(reduced.bridges());
  const bool transfer_fits =
      reduced.word.strands() <= 255 && matchings <= allowance &&
      matchings * static_cast<std::uint64_t>(std::max(c, 1)) <= allowance;

  switch (options.method) {
    case BracketMethod::StateSum:
      if (!state_sum_fits) {
        throw ResourceError("bracket: " + std::to_string(c) + " crossings exceed the budget of " +
                            std::to_string(budget));
      }
      return kernels::bracket_state_sum_parallel(reduced);
    case BracketMethod::Transfer:
      if (!transfer_fits) throw ResourceError("bracket: transfer sweep exceeds the budget");
      return kernels::bracket_transfer(reduced);
    case BracketMethod::Auto:
      break;
  }
  if (transfer_fits && (!state_sum_fits || matchings * c < (std::uint64_t{1} << c))) {
    return kernels::bracket_transfer(reduced);
  }
  if (state_sum_fits) return kernels::bracket_state_sum_parallel(reduced);
  throw ResourceError("bracket: " + std::to_string(c) + " crossings on " +
                      std::to_string(reduced.word.strands()) + " strands exceed the budget of " +
                      std::to_string(budget));
}

}  // namespace platkit
