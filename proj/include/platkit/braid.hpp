#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace platkit {

/// A word in the standard generators of B_n.  Letter g > 0 stands for
/// sigma_g, g < 0 for sigma_|g|^-1.  Immutable after construction.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<int> letters = {});

  static BraidWord identity(int strands) { return BraidWord(strands); }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  /// Concatenation; strand counts must agree.
  BraidWord operator*(const BraidWord& rhs) const;
  /// Same word with cancelling adjacent pairs removed.
  BraidWord freely_reduced() const;

  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// Parses whitespace-separated signed integers into a word on n strands.
BraidWord parse_braid(std::string_view text, int strands);

/// The inclusion B_n -> B_n2.
BraidWord embed(const BraidWord& w, int strands);

/// Product of the words in order, all on `strands` strands.
BraidWord concat(std::span<const BraidWord> parts, int strands);

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // 1-based images
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  /// (this then other): point -> other(this(point)).
  Permutation then(const Permutation& other) const;
  /// Cycle lengths sorted ascending.
  std::vector<int> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Follows each strand upward; maps a bottom endpoint position to its top position.
Permutation permutation_of(const BraidWord& w);

int exponent_sum(const BraidWord& w);

/// Freely reduced word over x_1..x_n; letter k > 0 is x_k, k < 0 is x_|k|^-1.
using FreeWord = std::vector<int>;

/// Appends `letter` to `word`, cancelling against the last letter if possible.
inline void append_reduced(FreeWord& word, int letter) {
  if (!word.empty() && word.back() == -letter) {
    word.pop_back();
  } else {
    word.push_back(letter);
  }
}

FreeWord free_inverse(const FreeWord& word);

inline constexpr std::size_t kDefaultArtinLetterLimit = 1'000'000;

/// Image of (x_1, ..., x_n) under the automorphism of the free group F_n
/// attached to a braid.  The action sigma_i : x_i -> x_i x_{i+1} x_i^-1,
/// x_{i+1} -> x_i is faithful, so equal images mean equal braids.
class ArtinImage {
 public:
  ArtinImage() = default;
  static ArtinImage identity(int n, std::size_t letter_limit = kDefaultArtinLetterLimit);
  static ArtinImage of(const BraidWord& w, std::size_t letter_limit = kDefaultArtinLetterLimit);

  int strands() const { return static_cast<int>(images_.size()); }
  const std::vector<FreeWord>& images() const { return images_; }
  std::size_t total_letters() const;
  bool is_identity() const;

  /// Image of (this braid) * sigma_|g|^sign(g).
  void push_letter(int g);

  /// Image of the product a * b.
  friend ArtinImage compose(const ArtinImage& a, const ArtinImage& b);

  std::uint64_t hash() const;

  friend bool operator==(const ArtinImage& a, const ArtinImage& b) { return a.images_ == b.images_; }

 private:
  void check_limit() const;

  std::vector<FreeWord> images_;
  std::size_t limit_ = kDefaultArtinLetterLimit;
};

/// Exact equality in B_n.  Throws DomainError on strand mismatch and
/// ResourceError when an Artin image outgrows the letter limit.
bool braids_equal(const BraidWord& a, const BraidWord& b,
                  std::size_t letter_limit = kDefaultArtinLetterLimit);

bool is_trivial_braid(const BraidWord& w, std::size_t letter_limit = kDefaultArtinLetterLimit);

}  // namespace platkit
