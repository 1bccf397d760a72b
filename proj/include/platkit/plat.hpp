#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "platkit/braid.hpp"
#include "platkit/laurent.hpp"

namespace platkit {

/// Fixed-point-free involution on {1..2m}.
class Pairing {
 public:
  Pairing() = default;
  explicit Pairing(std::vector<int> partner);  // 1-based
  /// {1,2}, {3,4}, ..., {2m-1,2m}.
  static Pairing standard(int m);

  int size() const { return static_cast<int>(partner_.size()); }
  int operator()(int point) const { return partner_[point - 1]; }
  const std::vector<int>& partners() const { return partner_; }
  /// True when no two pairs interleave (drawable as nested cups).
  bool is_noncrossing() const;

  friend bool operator==(const Pairing&, const Pairing&) = default;

 private:
  std::vector<int> partner_;
};

struct PlatDiagram {
  BraidWord word;
  Pairing bottom;
  Pairing top;

  int crossings() const { return static_cast<int>(word.length()); }
  int bridges() const { return word.strands() / 2; }
};

/// Caps a 2m-braid with the standard wicket pairing at both ends.
PlatDiagram plat_close(const BraidWord& w);

/// Number of closed curves: orbits of <bottom, pi^-1 top pi> on {1..2m}.
int component_count(const PlatDiagram& d);

enum class BracketMethod {
  Auto,      ///< cheapest route that fits the budget
  StateSum,  ///< exhaustive smoothing enumeration, OpenMP-parallel
  Transfer,  ///< sweep over crossingless matchings
};

struct BracketOptions {
  /// Work allowance expressed in crossings: the state sum may touch 2^budget
  /// states, and the transfer route may perform about as many updates.
  int crossing_budget = 24;
  BracketMethod method = BracketMethod::Auto;
};

/// Kauffman bracket with <X> = A<U> + A^-1<||> for sigma_i (strand i over
/// strand i+1), d = -A^2 - A^-2 and the single loop normalised to 1.
LaurentPoly kauffman_bracket(const PlatDiagram& d, const BracketOptions& options = {});

namespace kernels {
/// Reference state sum, one thread.
LaurentPoly bracket_state_sum_serial(const PlatDiagram& d);
/// Same sum with the state range split across OpenMP threads.
LaurentPoly bracket_state_sum_parallel(const PlatDiagram& d);
/// Temperley-Lieb sweep from the bottom cups to the top caps.
LaurentPoly bracket_transfer(const PlatDiagram& d);

std::uint64_t catalan(int m);
}  // namespace kernels

enum class TrivialityVerdict { NotTrivial, ConsistentWithTrivial };

/// Compares the bracket with +-A^k d^(c-1).  NotTrivial is definitive;
/// ConsistentWithTrivial is only a necessary condition.
TrivialityVerdict trivial_link_check(const PlatDiagram& d, const BracketOptions& options = {});

std::string to_string(TrivialityVerdict v);

/// Planar-diagram style listing: "X a b c d" per crossing (under-strand
/// entering first, then counterclockwise), then "CUP a b" and "CAP a b".
std::string export_pd(const PlatDiagram& d);

}  // namespace platkit
