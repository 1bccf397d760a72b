#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace platkit {

/// Laurent polynomial in A with exact integer coefficients.  Zero
/// coefficients are never stored; arithmetic throws std::overflow_error
/// rather than wrapping.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(std::int64_t c) { return monomial(c, 0); }
  static LaurentPoly monomial(std::int64_t coeff, int exponent);
  /// The loop value -A^2 - A^-2.
  static LaurentPoly delta();

  const std::map<int, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(int exponent) const;
  int min_degree() const;
  int max_degree() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  LaurentPoly operator-() const;
  LaurentPoly pow(int k) const;
  /// Multiply by A^k.
  LaurentPoly shifted(int k) const;

  void add_term(std::int64_t coeff, int exponent);

  /// e.g. "-A^3 - A^-1"; "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, std::int64_t> terms_;
};

/// A unit factor +-A^k.
struct Unit {
  int sign = 1;
  int shift = 0;
};

/// Returns (s, k) with p == s * A^k * q, if such a unit exists.
std::optional<Unit> unit_ratio(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace platkit
