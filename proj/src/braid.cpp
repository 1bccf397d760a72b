#include "platkit/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "platkit/errors.hpp"

namespace platkit {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) {
    throw DomainError("braid needs at least one strand, got " + std::to_string(strands));
  }
  for (int g : letters_) {
    if (g == 0 || std::abs(g) >= strands) {
      throw DomainError("letter " + std::to_string(g) + " is not a generator of B_" +
                        std::to_string(strands));
    }
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& g : out) g = -g;
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (rhs.strands_ != strands_) {
    throw DomainError("cannot compose braids on " + std::to_string(strands_) + " and " +
                      std::to_string(rhs.strands_) + " strands");
  }
  std::vector<int> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::freely_reduced() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (int g : letters_) append_reduced(out, g);
  return BraidWord(strands_, std::move(out));
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 1) throw ParseError("strand count must be positive");
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view token = text.substr(pos, end - pos);
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw ParseError("not an integer letter: '" + std::string(token) + "'");
    }
    if (value == 0 || std::abs(value) >= strands) {
      throw ParseError("letter " + std::string(token) + " out of range for B_" +
                       std::to_string(strands));
    }
    letters.push_back(value);
    pos = end;
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord embed(const BraidWord& w, int strands) {
  if (strands < w.strands()) {
    throw DomainError("cannot embed B_" + std::to_string(w.strands()) + " into B_" +
                      std::to_string(strands));
  }
  return BraidWord(strands, w.letters());
}

BraidWord concat(std::span<const BraidWord> parts, int strands) {
  std::vector<int> out;
  for (const auto& p : parts) {
    if (p.strands() != strands) throw DomainError("strand mismatch in concatenation");
    out.insert(out.end(), p.letters().begin(), p.letters().end());
  }
  return BraidWord(strands, std::move(out));
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v]) {
      throw DomainError("not a permutation");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(out));
}

Permutation Permutation::then(const Permutation& other) const {
  if (other.size() != size()) throw DomainError("permutation size mismatch");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = other(images_[i]);
  return Permutation(std::move(out));
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j] - 1) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Permutation permutation_of(const BraidWord& w) {
  // position[p] = current position of the strand that started at bottom p.
  const int n = w.strands();
  std::vector<int> at(n);  // at[q] = start of the strand currently at q
  for (int q = 0; q < n; ++q) at[q] = q;
  for (int g : w.letters()) {
    int i = std::abs(g) - 1;
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> images(n);
  for (int q = 0; q < n; ++q) images[at[q]] = q + 1;
  return Permutation(std::move(images));
}

int exponent_sum(const BraidWord& w) {
  int sum = 0;
  for (int g : w.letters()) sum += g > 0 ? 1 : -1;
  return sum;
}

// ---------------------------------------------------------------------------

FreeWord free_inverse(const FreeWord& word) {
  FreeWord out(word.rbegin(), word.rend());
  for (int& x : out) x = -x;
  return out;
}

namespace {

void append_word(FreeWord& out, const FreeWord& word) {
  for (int x : word) append_reduced(out, x);
}

void append_inverse(FreeWord& out, const FreeWord& word) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) append_reduced(out, -*it);
}

}  // namespace

ArtinImage ArtinImage::identity(int n, std::size_t letter_limit) {
  ArtinImage img;
  img.images_.resize(n);
  for (int i = 0; i < n; ++i) img.images_[i] = {i + 1};
  img.limit_ = letter_limit;
  return img;
}

ArtinImage ArtinImage::of(const BraidWord& w, std::size_t letter_limit) {
  ArtinImage img = identity(w.strands(), letter_limit);
  for (int g : w.letters()) img.push_letter(g);
  return img;
}

std::size_t ArtinImage::total_letters() const {
  std::size_t total = 0;
  for (const auto& w : images_) total += w.size();
  return total;
}

bool ArtinImage::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].size() != 1 || images_[i][0] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

void ArtinImage::check_limit() const {
  if (total_letters() > limit_) {
    throw ResourceError("Artin image exceeds " + std::to_string(limit_) + " free-group letters");
  }
}

// phi_{w g} = phi_w o phi_g, so the new tuple is phi_g's images with x_j
// replaced by the current y_j.  Only two coordinates change.
void ArtinImage::push_letter(int g) {
  const int i = std::abs(g) - 1;
  FreeWord& yi = images_[i];
  FreeWord& yj = images_[i + 1];
  FreeWord next;
  next.reserve(2 * yi.size() + yj.size());
  if (g > 0) {
    // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
    append_word(next, yi);
    append_word(next, yj);
    append_inverse(next, yi);
    yj = yi;
    yi = std::move(next);
  } else {
    // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
    append_inverse(next, yj);
    append_word(next, yi);
    append_word(next, yj);
    yi = yj;
    yj = std::move(next);
  }
  check_limit();
}

ArtinImage compose(const ArtinImage& a, const ArtinImage& b) {
  if (a.strands() != b.strands()) throw DomainError("Artin image strand mismatch");
  ArtinImage out;
  out.limit_ = std::min(a.limit_, b.limit_);
  out.images_.resize(b.images_.size());
  for (std::size_t i = 0; i < b.images_.size(); ++i) {
    FreeWord& dst = out.images_[i];
    for (int x : b.images_[i]) {
      if (x > 0) {
        append_word(dst, a.images_[x - 1]);
      } else {
        append_inverse(dst, a.images_[-x - 1]);
      }
    }
    if (dst.size() > out.limit_) out.check_limit();
  }
  out.check_limit();
  return out;
}

std::uint64_t ArtinImage::hash() const {
  // FNV-1a over the letter stream with separators.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const auto& w : images_) {
    for (int x : w) mix(static_cast<std::uint32_t>(x));
    mix(0x9e3779b9u);
  }
  return h;
}

bool braids_equal(const BraidWord& a, const BraidWord& b, std::size_t letter_limit) {
  if (a.strands() != b.strands()) {
    throw DomainError("braids_equal: strand counts differ (" + std::to_string(a.strands()) +
                      " vs " + std::to_string(b.strands()) + ")");
  }
  if (exponent_sum(a) != exponent_sum(b)) return false;
  if (permutation_of(a) != permutation_of(b)) return false;
  const BraidWord ra = a.freely_reduced();
  const BraidWord rb = b.freely_reduced();
  if (ra == rb) return true;
  return ArtinImage::of(ra, letter_limit) == ArtinImage::of(rb, letter_limit);
}

bool is_trivial_braid(const BraidWord& w, std::size_t letter_limit) {
  return braids_equal(w, BraidWord::identity(w.strands()), letter_limit);
}

}  // namespace platkit
