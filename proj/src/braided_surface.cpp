#include "platkit/braided_surface.hpp"

#include <cstdlib>

#include "platkit/errors.hpp"

namespace platkit {

BraidWord MonodromyEntry::expand() const {
  if (index < 1 || index >= conjugator.strands()) throw DomainError("monodromy index out of range");
  if (sign != 1 && sign != -1) throw DomainError("monodromy sign must be +1 or -1");
  return conjugator * BraidWord(conjugator.strands(), {sign * index}) * conjugator.inverse();
}

BraidWord expand_entry(const SystemEntry& e) {
  if (const auto* w = std::get_if<BraidWord>(&e)) return *w;
  return std::get<MonodromyEntry>(e).expand();
}

namespace {

int entry_strands(const SystemEntry& e) {
  return std::visit([](const auto& x) { return x.strands(); }, e);
}

}  // namespace

std::optional<MonodromyEntry> as_monodromy_entry(const BraidWord& w) {
  const auto& l = w.letters();
  if (l.size() % 2 == 0) return std::nullopt;
  const std::size_t k = l.size() / 2;
  for (std::size_t i = 0; i < k; ++i) {
    if (l[l.size() - 1 - i] != -l[i]) return std::nullopt;
  }
  std::vector<int> head(l.begin(), l.begin() + k);
  return MonodromyEntry{BraidWord(w.strands(), std::move(head)), std::abs(l[k]), l[k] > 0 ? 1 : -1};
}

BraidSystem::BraidSystem(int degree, std::vector<SystemEntry> entries)
    : degree_(degree), entries_(std::move(entries)) {
  if (degree < 1) throw DomainError("braid system degree must be positive");
  for (const auto& e : entries_) {
    if (entry_strands(e) != degree) {
      throw DomainError("braid system entry on " + std::to_string(entry_strands(e)) +
                        " strands in a degree-" + std::to_string(degree) + " system");
    }
    if (const auto* me = std::get_if<MonodromyEntry>(&e)) {
      if (me->index < 1 || me->index >= degree) throw DomainError("monodromy index out of range");
      if (me->sign != 1 && me->sign != -1) throw DomainError("monodromy sign must be +1 or -1");
    }
  }
}

bool BraidSystem::all_monodromy() const {
  for (const auto& e : entries_) {
    if (!std::holds_alternative<MonodromyEntry>(e)) return false;
  }
  return true;
}

bool systems_equal(const BraidSystem& a, const BraidSystem& b) {
  if (a.degree() != b.degree() || a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    if (!braids_equal(expand_entry(a[i]), expand_entry(b[i]))) return false;
  }
  return true;
}

std::string SurfaceType::to_string() const {
  if (kind == Kind::Trivial2Knot) return "Trivial2Knot";
  return "NonorientableSum(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

BraidWord boundary_braid(const BraidSystem& s) {
  std::vector<int> letters;
  for (const auto& e : s.entries()) {
    const BraidWord w = expand_entry(e);
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  }
  return BraidWord(s.degree(), std::move(letters));
}

bool is_two_dimensional(const BraidSystem& s) { return is_trivial_braid(boundary_braid(s)); }

BraidSystem slide(const BraidSystem& s, int j, SlideDirection direction) {
  if (j < 1 || j > s.size() - 1) {
    throw DomainError("slide index " + std::to_string(j) + " out of range for r=" + std::to_string(s.size()));
  }
  std::vector<SystemEntry> entries = s.entries();
  const SystemEntry a = entries[j - 1];
  const SystemEntry b = entries[j];
  if (direction == SlideDirection::Forward) {
    const BraidWord wa = expand_entry(a);
    SystemEntry conj;
    if (const auto* me = std::get_if<MonodromyEntry>(&b)) {
      conj = MonodromyEntry{wa * me->conjugator, me->index, me->sign};
    } else {
      conj = wa * std::get<BraidWord>(b) * wa.inverse();
    }
    entries[j - 1] = std::move(conj);
    entries[j] = a;
  } else {
    const BraidWord wb = expand_entry(b);
    SystemEntry conj;
    if (const auto* me = std::get_if<MonodromyEntry>(&a)) {
      conj = MonodromyEntry{wb.inverse() * me->conjugator, me->index, me->sign};
    } else {
      conj = wb.inverse() * std::get<BraidWord>(a) * wb;
    }
    entries[j - 1] = b;
    entries[j] = std::move(conj);
  }
  return BraidSystem(s.degree(), std::move(entries));
}

BraidSystem apply_moves(const BraidSystem& s, const std::vector<SlideMove>& moves) {
  BraidSystem out = s;
  for (const auto& mv : moves) out = slide(out, mv.j, mv.direction);
  return out;
}

int euler_char_plat(const BraidSystem& s) {
  if (s.degree() % 2 != 0) throw DomainError("plat Euler characteristic needs an even degree");
  return s.degree() - s.size();
}

BranchSigns branch_signs(const BraidSystem& s) {
  BranchSigns out;
  for (const auto& e : s.entries()) {
    const auto* me = std::get_if<MonodromyEntry>(&e);
    if (!me) throw DomainError("branch signs need monodromy entries, found a general braid word");
    (me->sign > 0 ? out.positive : out.negative)++;
  }
  return out;
}

namespace {

// In B_2 = Z every entry is sigma_1^e with e its exponent sum.
std::optional<BranchSigns> degree2_signs(const BraidSystem& s) {
  BranchSigns out;
  for (const auto& e : s.entries()) {
    const int exp = exponent_sum(expand_entry(e));
    if (exp == 1) {
      ++out.positive;
    } else if (exp == -1) {
      ++out.negative;
    } else {
      return std::nullopt;
    }
  }
  return out;
}

}  // namespace

SurfaceType classify_degree2(const BraidSystem& s) {
  if (s.degree() != 2) throw DomainError("classify_degree2 needs a degree-2 system");
  const auto signs = degree2_signs(s);
  if (!signs) throw DomainError("degree-2 entries must each be sigma_1 or its inverse");
  if (signs->positive == 0 && signs->negative == 0) return {};
  return {SurfaceType::Kind::NonorientableSum, signs->positive, signs->negative};
}

std::optional<int> normal_euler(const BraidSystem& s) {
  if (s.degree() == 2) {
    if (const auto signs = degree2_signs(s)) return 2 * (signs->positive - signs->negative);
    return std::nullopt;
  }
  if (s.all_monodromy() && is_two_dimensional(s)) return 0;
  return std::nullopt;
}

BraidWord delta(int m) {
  if (m < 1) throw DomainError("Delta_m needs m >= 1");
  std::vector<int> letters;
  for (int k = 1; k <= m - 1; ++k) {
    for (int g = 2 * k; g >= 1; --g) letters.push_back(g);
  }
  return BraidWord(2 * m, std::move(letters));
}

BraidSystem to_genuine_plat(const BraidSystem& s) {
  if (!is_two_dimensional(s)) throw DomainError("to_genuine_plat needs a 2-dimensional braid system");
  const int m = s.degree();
  const BraidWord d = delta(m);
  const BraidWord d_inv = d.inverse();
  std::vector<SystemEntry> out;
  out.reserve(s.entries().size());
  for (const auto& e : s.entries()) {
    if (const auto* me = std::get_if<MonodromyEntry>(&e)) {
      out.emplace_back(MonodromyEntry{d * embed(me->conjugator, 2 * m), me->index, me->sign});
    } else {
      out.emplace_back(d * embed(std::get<BraidWord>(e), 2 * m) * d_inv);
    }
  }
  return BraidSystem(2 * m, std::move(out));
}

bool ribbon_symmetric_check(const BraidSystem& s) {
  if (s.size() != 2) return false;
  return braids_equal(expand_entry(s[1]), expand_entry(s[0]).inverse());
}

}  // namespace platkit
