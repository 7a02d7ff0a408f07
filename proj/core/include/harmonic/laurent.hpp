#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "harmonic/exact.hpp"

namespace harmonic {

/// Integer Laurent polynomial Σ c_i t^i, stored densely from the lowest
/// nonzero exponent. The zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  /// coeffs[i] is the coefficient of t^(low + i).
  LaurentPoly(std::vector<BigInt> coeffs, std::int64_t low = 0);
  static LaurentPoly constant(BigInt c) { return LaurentPoly({std::move(c)}); }
  static LaurentPoly monomial(BigInt c, std::int64_t exponent) { return LaurentPoly({std::move(c)}, exponent); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t min_exponent() const noexcept { return low_; }
  std::int64_t max_exponent() const noexcept { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  BigInt coefficient(std::int64_t exponent) const;
  /// Coefficients from min_exponent() to max_exponent().
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  std::vector<long long> to_ints() const;

  BigInt evaluate(const BigInt& t) const;  ///< needs t = ±1 when exponents are negative

  /// Shifted to minimal exponent 0, leading coefficient positive.
  LaurentPoly normalized() const;
  bool is_palindromic_up_to_sign() const;

  /// Exact quotient; throws InternalError when `d` does not divide.
  LaurentPoly divide_exact(const LaurentPoly& d) const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
  std::int64_t low_ = 0;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace harmonic
