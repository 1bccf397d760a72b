#include "platkit/laurent.hpp"

#include <stdexcept>

namespace platkit {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
  LaurentPoly p;
  p.add_term(coeff, exponent);
  return p;
}

LaurentPoly LaurentPoly::delta() {
  LaurentPoly p;
  p.add_term(-1, 2);
  p.add_term(-1, -2);
  return p;
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void LaurentPoly::add_term(std::int64_t coeff, int exponent) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (auto [e, c] : rhs.terms_) add_term(c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (auto [e, c] : rhs.terms_) add_term(checked_mul(c, -1), e);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  out += rhs;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  out -= rhs;
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  LaurentPoly out;
  for (auto [e1, c1] : terms_) {
    for (auto [e2, c2] : rhs.terms_) out.add_term(checked_mul(c1, c2), e1 + e2);
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const { return LaurentPoly() - *this; }

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power of a Laurent polynomial");
  LaurentPoly out = constant(1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (auto [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "A";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::optional<Unit> unit_ratio(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) {
    if (p.is_zero() && q.is_zero()) return Unit{};
    return std::nullopt;
  }
  if (p.terms().size() != q.terms().size()) return std::nullopt;
  const int shift = p.max_degree() - q.max_degree();
  const std::int64_t lp = p.coefficient(p.max_degree());
  const std::int64_t lq = q.coefficient(q.max_degree());
  int sign;
  if (lp == lq) {
    sign = 1;
  } else if (lp == -lq) {
    sign = -1;
  } else {
    return std::nullopt;
  }
  LaurentPoly scaled = q.shifted(shift);
  if (sign < 0) scaled = -scaled;
  if (scaled != p) return std::nullopt;
  return Unit{sign, shift};
}

}  // namespace platkit
