#pragma once

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "harmonic/exact.hpp"

namespace harmonic {

/// Finite continued fraction [a1, a2, ..., an] with integer terms, which may
/// be negative. Zero terms are tolerated in input and removed by normalize().
struct SignedCF {
  std::vector<BigInt> terms;

  SignedCF() = default;
  explicit SignedCF(std::vector<BigInt> t) : terms(std::move(t)) {}
  SignedCF(std::initializer_list<long long> t);

  std::size_t size() const noexcept { return terms.size(); }
  bool empty() const noexcept { return terms.empty(); }
  std::vector<long long> to_ints() const;
  std::string to_string() const;

  friend bool operator==(const SignedCF&, const SignedCF&) = default;
};

std::ostream& operator<<(std::ostream& os, const SignedCF& cf);

/// Schubert fraction alpha/beta of a two-bridge knot or link, alpha > 0 and
/// gcd(alpha, |beta|) = 1. The sign of beta distinguishes mirror images.
struct Fraction {
  BigInt alpha{1};
  BigInt beta{0};

  static Fraction make(BigInt alpha, BigInt beta);
  static Fraction from_rational(const Rational& r);

  /// alpha / beta; throws DivisionByZero for the unknot's 1/0.
  Rational value() const { return {alpha, beta}; }
  Fraction mirror() const { return {alpha, -beta}; }
  bool is_knot() const { return alpha % 2 == 1; }
  std::string to_string() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

/// Integer 2×2 matrix acting as x ↦ (ax + b) / (cx + d).
struct MobiusMatrix {
  BigInt a{1}, b{0}, c{0}, d{1};

  static MobiusMatrix identity() { return {}; }
  BigInt determinant() const { return a * d - b * c; }
  /// Image of ∞, the first column read as a / c.
  Fraction at_infinity() const;

  friend MobiusMatrix operator*(const MobiusMatrix& x, const MobiusMatrix& y);
  friend bool operator==(const MobiusMatrix&, const MobiusMatrix&) = default;
};

/// Generators x ↦ [1, x], x ↦ [2, x] and x ↦ −x.
enum class Mobius { A, B, S };

MobiusMatrix mobius_matrix(Mobius g);
MobiusMatrix mobius_compose(std::span<const Mobius> word);
MobiusMatrix mobius_compose(std::initializer_list<Mobius> word);

/// Exact value of the continued fraction, folded right to left in projective
/// form so that interior zero terms splice exactly like [.., x, 0, y, ..] = [.., x+y, ..].
/// Throws DivisionByZero when the whole fraction evaluates to ∞.
Rational evaluate(const SignedCF& cf);

/// Equal-valued fraction without zero terms (or the single term [0]).
SignedCF normalize(const SignedCF& cf);

/// Crossing number Σ|a_i| − #{sign changes}, valid when a1·a2 > 0,
/// a_{n−1}·a_n > 0 and no two sign changes are adjacent.
BigInt crossing_number_bireg(const SignedCF& cf);

/// Euclidean expansion with positive terms (first term may be 0 when r < 1).
SignedCF positive_cf(const Rational& r);

/// Sum of the positive expansion's terms: the crossing number of S(r).
BigInt cf_crossing_number(const Rational& r);

/// The unique expansion r = [1, ±2, ±1, ±2, ...] with no three consecutive
/// sign changes, for r > 0 with odd alpha and even beta.
SignedCF expand_1212(const Fraction& r);

struct SignChangeProfile {
  std::vector<int> changes;  ///< 1-based j with a_j·a_{j+1} < 0
  int max_run = 0;           ///< longest run of consecutive positions in `changes`
  bool palindromic = false;  ///< change set symmetric under j ↦ n − j

  bool has_two_consecutive() const noexcept { return max_run >= 2; }
  bool has_three_consecutive() const noexcept { return max_run >= 3; }
};

/// Requires the alternating ±1, ±2 magnitude pattern of even length.
SignChangeProfile sign_change_profile(const SignedCF& cf);

/// Inverse of `value` modulo `modulus`; throws NotInvertible.
BigInt mod_inverse(const BigInt& value, const BigInt& modulus);

/// S(f) ≅ S(g): same alpha and g.beta ≡ f.beta^{±1} (mod alpha); with
/// `up_to_mirror`, −g.beta is accepted as well.
bool two_bridge_equivalent(const Fraction& f, const Fraction& g, bool up_to_mirror);

/// Representative with minimal beta in [0, alpha) among {beta, beta⁻¹} mod alpha.
Fraction canonical_fraction(const Fraction& f);

/// As canonical_fraction, but the mirror class {±beta, ±beta⁻¹} is searched too.
/// This is the representative printed in knot tables.
Fraction display_fraction(const Fraction& f);

/// beta² ≡ ±2 (mod alpha), the arithmetic signature of H(4, b, c).
bool beta_squared_pm2(const Fraction& f);

/// Crossing number of the two-bridge knot S(f).
BigInt fraction_crossing_number(const Fraction& f);

}  // namespace harmonic
