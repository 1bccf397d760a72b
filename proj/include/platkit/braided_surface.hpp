#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "platkit/braid.hpp"

namespace platkit {

/// u sigma_k^sign u^-1: the monodromy around one branch point.
struct MonodromyEntry {
  BraidWord conjugator;
  int index = 1;
  int sign = 1;

  BraidWord expand() const;
  int strands() const { return conjugator.strands(); }

  friend bool operator==(const MonodromyEntry&, const MonodromyEntry&) = default;
};

using SystemEntry = std::variant<BraidWord, MonodromyEntry>;

BraidWord expand_entry(const SystemEntry& e);

/// Recognises a word of the literal shape u g u^-1 (odd length, the tail
/// is the inverse of the head) and returns it as a monodromy entry.
std::optional<MonodromyEntry> as_monodromy_entry(const BraidWord& w);

/// Braid monodromy data: entries in Hurwitz arc order.
class BraidSystem {
 public:
  BraidSystem() = default;
  BraidSystem(int degree, std::vector<SystemEntry> entries);

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<SystemEntry>& entries() const { return entries_; }
  const SystemEntry& operator[](int i) const { return entries_[i]; }
  bool all_monodromy() const;

  friend bool operator==(const BraidSystem&, const BraidSystem&) = default;

 private:
  int degree_ = 1;
  std::vector<SystemEntry> entries_;
};

/// Entrywise equality in B_n (not word equality).
bool systems_equal(const BraidSystem& a, const BraidSystem& b);

struct SurfaceType {
  enum class Kind { Trivial2Knot, NonorientableSum };
  Kind kind = Kind::Trivial2Knot;
  int p = 0;  ///< copies of P_+
  int q = 0;  ///< copies of P_-

  std::string to_string() const;
  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

struct BranchSigns {
  int positive = 0;
  int negative = 0;
  friend bool operator==(const BranchSigns&, const BranchSigns&) = default;
};

/// Left-to-right product of the expanded entries.
BraidWord boundary_braid(const BraidSystem& s);

/// True when the boundary braid is trivial.
bool is_two_dimensional(const BraidSystem& s);

enum class SlideDirection { Forward, Inverse };

/// Forward:  (.., b_j, b_j+1, ..) -> (.., b_j b_j+1 b_j^-1, b_j, ..)
/// Inverse:  (.., b_j, b_j+1, ..) -> (.., b_j+1, b_j+1^-1 b_j b_j+1, ..)
/// j is 1-based.  Monodromy entries stay monodromy entries.
BraidSystem slide(const BraidSystem& s, int j, SlideDirection direction);

struct SlideMove {
  int j = 1;
  SlideDirection direction = SlideDirection::Forward;
  friend bool operator==(const SlideMove&, const SlideMove&) = default;
};

BraidSystem apply_moves(const BraidSystem& s, const std::vector<SlideMove>& moves);

struct HurwitzResult {
  enum class Verdict { Equivalent, NotEquivalent, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::vector<SlideMove> moves;  ///< replayable on the first system when Equivalent
  std::string reason;
  std::size_t nodes = 0;
};

std::string to_string(HurwitzResult::Verdict v);

/// Bounded breadth-first search of the slide orbit of s1 for s2.  `budget`
/// caps the number of distinct systems visited, including s1 itself.
/// NotEquivalent is reported only by an invariant mismatch or after the
/// whole orbit has been enumerated.
HurwitzResult hurwitz_search(const BraidSystem& s1, const BraidSystem& s2, std::size_t budget);

/// 2m - r for a system of even degree 2m.
int euler_char_plat(const BraidSystem& s);

/// Counts of positive and negative monodromy entries; every entry must be a
/// MonodromyEntry.
BranchSigns branch_signs(const BraidSystem& s);

/// Degree-2 systems: trivial 2-knot when empty, otherwise a connected sum
/// of p copies of P_+ and q copies of P_-.
SurfaceType classify_degree2(const BraidSystem& s);

/// 2(p - q) for degree 2; 0 for 2-dimensional systems of monodromy
/// entries; nullopt otherwise.
std::optional<int> normal_euler(const BraidSystem& s);

/// Delta_m = prod_{k=1}^{m-1} sigma_2k sigma_2k-1 ... sigma_1 in B_2m
/// (the identity when m = 1).
BraidWord delta(int m);

/// Conjugates every entry of a 2-dimensional degree-m system into B_2m by
/// Delta_m, yielding a genuine plat presentation of its closure.
BraidSystem to_genuine_plat(const BraidSystem& s);

/// r = 2 and the second entry is the inverse of the first.
bool ribbon_symmetric_check(const BraidSystem& s);

}  // namespace platkit
