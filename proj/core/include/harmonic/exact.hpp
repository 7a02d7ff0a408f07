#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace harmonic {

using BigInt = boost::multiprecision::cpp_int;

/// Floor division for possibly negative operands; `den` must be nonzero.
BigInt floor_div(const BigInt& num, const BigInt& den);

/// Least non-negative residue of `value` modulo `modulus` (> 0).
BigInt mod_floor(const BigInt& value, const BigInt& modulus);

BigInt gcd(const BigInt& x, const BigInt& y);

int sign(const BigInt& value) noexcept;

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt value) : num_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  int sign() const noexcept { return harmonic::sign(num_); }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  BigInt floor() const { return floor_div(num_, den_); }
  Rational reciprocal() const;
  double to_double() const;
  std::string to_string() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

 private:
  BigInt num_{0};
  BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// The angle (p/q)·π. Stored as given; comparisons and sign queries reduce
/// on demand, so callers may build angles over any common denominator.
class RationalAngle {
 public:
  RationalAngle(BigInt p, BigInt q);
  explicit RationalAngle(const Rational& turns_of_pi) : RationalAngle(turns_of_pi.num(), turns_of_pi.den()) {}

  const BigInt& p() const noexcept { return p_; }
  const BigInt& q() const noexcept { return q_; }

  /// p/q as an exact rational (the multiple of π).
  Rational ratio() const { return {p_, q_}; }
  RationalAngle reduced() const;

  /// Representative r in [0, 1] with cos(rπ) = cos((p/q)π).
  Rational folded() const;

  double radians() const;

  RationalAngle operator-() const { return {-p_, q_}; }

 private:
  BigInt p_;
  BigInt q_;
};

/// Sign of sin((p/q)π): 0 on integers, otherwise (−1)^⌊p/q⌋.
int sign_sin(const RationalAngle& x);

/// Sign of cos((p/q)π), via sin((1/2 − p/q)π).
int sign_cos(const RationalAngle& x);

/// Orders cos x against cos y without evaluating either.
std::strong_ordering compare_cos(const RationalAngle& x, const RationalAngle& y);

}  // namespace harmonic
