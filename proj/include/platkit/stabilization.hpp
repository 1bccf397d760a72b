#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "platkit/braid.hpp"

namespace platkit {

/// An m-tuple of non-negative integers (l_1, ..., l_m).
class Lambda {
 public:
  Lambda() = default;
  explicit Lambda(std::vector<int> entries);
  static Lambda zeros(int m) { return Lambda(std::vector<int>(m, 0)); }

  int m() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  int operator[](int i) const { return entries_[i - 1]; }  // 1-based
  /// |lambda|_i = m + l_1 + ... + l_i; |lambda|_0 = m.
  int partial(int i) const;
  /// |lambda| = |lambda|_m.
  int total() const { return partial(m()); }

  /// Componentwise <=.
  bool precedes(const Lambda& other) const;

  std::string to_string() const;

  friend bool operator==(const Lambda&, const Lambda&) = default;

 private:
  std::vector<int> entries_;
};

/// Comma-separated non-negative integers, e.g. "2,0,1".
Lambda parse_lambda(std::string_view text);

/// iota(w) sigma_2m sigma_2(m+1) ... sigma_2(m+l-1) in B_2(m+l).
BraidWord l_stabilize(const BraidWord& w, int l);

/// tau_i = sigma_2i sigma_2i-1 sigma_2i+1 sigma_2i on `strands` strands.
BraidWord tau(int i, int strands);

/// T_{i,j} = tau_i ... tau_{m-1} * tau_m^-1 ... tau_j^-1 on `strands` strands.
/// The first product is empty for i = m, the second for j = m-1.
BraidWord t_conjugator(int i, int j, int m, int strands);

/// T(lambda) in B_2|lambda|.  The sigma-run of block i is
/// sigma_2k for k = |lambda|_{i-1} .. |lambda|_i - 1, empty when l_i = 0.
BraidWord t_lambda(const Lambda& lambda);

/// The same product with every sigma-run dropped (the trivial braid alpha*).
BraidWord t_lambda_without_runs(const Lambda& lambda);

/// One entry per generator of the sigma-runs of T(lambda): the letter index
/// within t_lambda(lambda) where that generator sits.
std::vector<std::size_t> t_lambda_run_positions(const Lambda& lambda);

/// iota(w) T(lambda) in B_2|lambda|.
BraidWord lambda_stabilize(const BraidWord& w, const Lambda& lambda);

}  // namespace platkit
