#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "platkit/braid.hpp"

namespace platkit {

struct HildenFactor {
  int generator = 0;  ///< index into hilden_generators(m)
  int exponent = 1;   ///< +1 or -1

  friend bool operator==(const HildenFactor&, const HildenFactor&) = default;
  friend auto operator<=>(const HildenFactor& a, const HildenFactor& b) {
    // g0 < g0^-1 < g1 < g1^-1 < ...
    if (a.generator != b.generator) return a.generator <=> b.generator;
    return b.exponent <=> a.exponent;
  }
};

/// A word in the generators of Hilden's subgroup K_2m; a braid equal to its
/// expansion is certified adequate.
struct HildenExpression {
  int m = 1;
  std::vector<HildenFactor> factors;

  friend bool operator==(const HildenExpression&, const HildenExpression&) = default;
};

/// sigma_1, sigma_2 sigma_1 sigma_3 sigma_2, and
/// sigma_2i sigma_2i-1 sigma_2i+1^-1 sigma_2i^-1 for i = 1..m-1, in B_2m.
/// For m = 1 only sigma_1.
std::vector<BraidWord> hilden_generators(int m);

/// The strand permutation carries the pairs {2k-1, 2k} onto themselves setwise.
bool preserves_pairing(const BraidWord& w);

BraidWord expand_expression(const HildenExpression& e);

bool verify_membership(const BraidWord& w, const HildenExpression& e);

struct MembershipSearchStats {
  std::size_t nodes = 0;
  int depth_reached = 0;
};

/// Breadth-first search by factor count, deduplicating group elements by
/// their Artin images.  Returns the lexicographically least expression among
/// the shortest ones, or nullopt if none exists within max_len factors.
std::optional<HildenExpression> search_membership(const BraidWord& w, int max_len,
                                                  MembershipSearchStats* stats = nullptr);

/// "m=<int>" header line followed by tokens g<k> or g<k>^-1.
HildenExpression parse_expression(std::string_view text);
/// Tokens only, with m supplied separately.
HildenExpression parse_expression_tokens(std::string_view tokens, int m);
std::string format_expression(const HildenExpression& e);
std::string format_expression_tokens(const HildenExpression& e);

}  // namespace platkit
