#include "harmonic/cfrac.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "harmonic/error.hpp"

namespace harmonic {

SignedCF::SignedCF(std::initializer_list<long long> t) {
  terms.reserve(t.size());
  for (long long x : t) terms.emplace_back(x);
}

std::vector<long long> SignedCF::to_ints() const {
  std::vector<long long> out;
  out.reserve(terms.size());
  for (const auto& x : terms) out.push_back(static_cast<long long>(x));
  return out;
}

std::string SignedCF::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SignedCF& cf) {
  os << '[';
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    if (i) os << ", ";
    os << cf.terms[i];
  }
  return os << ']';
}

// ---------------------------------------------------------------------------
// Fraction

Fraction Fraction::make(BigInt alpha, BigInt beta) {
  if (alpha <= 0) throw Error(ErrorCode::InvalidInput, "fraction numerator must be positive");
  if (gcd(alpha, abs(beta)) != 1) {
    throw Error(ErrorCode::NotInvertible, "alpha and beta are not coprime");
  }
  return {std::move(alpha), std::move(beta)};
}

Fraction Fraction::from_rational(const Rational& r) {
  if (r.is_zero()) throw Error(ErrorCode::InvalidInput, "zero is not a Schubert fraction");
  return {abs(r.num()), r.den() * r.sign()};
}

std::string Fraction::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) {
  return os << f.alpha << '/' << f.beta;
}

// ---------------------------------------------------------------------------
// Möbius generators

Fraction MobiusMatrix::at_infinity() const {
  if (a == 0 && c == 0) throw Error(ErrorCode::DivisionByZero, "degenerate Möbius matrix");
  if (c == 0) return Fraction{1, 0};
  return Fraction::from_rational(Rational(a, c));
}

MobiusMatrix operator*(const MobiusMatrix& x, const MobiusMatrix& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

MobiusMatrix mobius_matrix(Mobius g) {
  switch (g) {
    case Mobius::A: return {1, 1, 1, 0};
    case Mobius::B: return {2, 1, 1, 0};
    case Mobius::S: return {1, 0, 0, -1};
  }
  throw Error(ErrorCode::InternalError, "unknown Möbius generator");
}

MobiusMatrix mobius_compose(std::span<const Mobius> word) {
  MobiusMatrix m = MobiusMatrix::identity();
  for (Mobius g : word) m = m * mobius_matrix(g);
  return m;
}

MobiusMatrix mobius_compose(std::initializer_list<Mobius> word) {
  return mobius_compose(std::span<const Mobius>(word.begin(), word.size()));
}

// ---------------------------------------------------------------------------
// Evaluation and normalization

Rational evaluate(const SignedCF& cf) {
  if (cf.empty()) throw Error(ErrorCode::InvalidInput, "empty continued fraction");
  // Tail kept as num/den with den possibly 0 (∞); a_i + 1/(num/den) = (a_i·num + den)/num.
  BigInt num = cf.terms.back();
  BigInt den = 1;
  for (auto it = cf.terms.rbegin() + 1; it != cf.terms.rend(); ++it) {
    BigInt next = *it * num + den;
    den = std::move(num);
    num = std::move(next);
  }
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "continued fraction evaluates to infinity");
  return {num, den};
}

SignedCF normalize(const SignedCF& cf) {
  if (cf.empty()) throw Error(ErrorCode::InvalidInput, "empty continued fraction");
  std::vector<BigInt> t = cf.terms;
  bool changed = true;
  while (changed && t.size() > 1) {
    changed = false;
    // [.., x, 0, y, ..] -> [.., x+y, ..]
    for (std::size_t i = 1; i + 1 < t.size(); ++i) {
      if (t[i] == 0) {
        t[i - 1] += t[i + 1];
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(i), t.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    // [.., y, x, 0] -> [.., y] since x + 1/0 = ∞
    if (t.size() >= 2 && t.back() == 0) {
      if (t.size() == 2) throw Error(ErrorCode::DivisionByZero, "continued fraction evaluates to infinity");
      t.resize(t.size() - 2);
      changed = true;
      continue;
    }
    // [0, a, r2, .., rn] = [1, −1, 1−a, −r2, .., −rn]
    if (t.front() == 0) {
      std::vector<BigInt> u{1, -1, 1 - t[1]};
      for (std::size_t i = 2; i < t.size(); ++i) u.push_back(-t[i]);
      t = std::move(u);
      changed = true;
    }
  }
  return SignedCF(std::move(t));
}

BigInt crossing_number_bireg(const SignedCF& cf) {
  const auto& a = cf.terms;
  if (a.empty()) throw Error(ErrorCode::PreconditionViolated, "empty continued fraction");
  if (std::any_of(a.begin(), a.end(), [](const BigInt& x) { return x == 0; })) {
    throw Error(ErrorCode::PreconditionViolated, "zero term present");
  }
  std::string failures;
  const std::size_t n = a.size();
  if (n >= 2 && a[0] * a[1] < 0) failures += " a1*a2 > 0 fails;";
  if (n >= 2 && a[n - 2] * a[n - 1] < 0) failures += " a(n-1)*a(n) > 0 fails;";
  BigInt total = 0;
  int changes = 0;
  bool previous_change = false;
  bool adjacent = false;
  for (std::size_t j = 0; j < n; ++j) {
    total += abs(a[j]);
    if (j + 1 < n) {
      bool change = a[j] * a[j + 1] < 0;
      if (change) ++changes;
      if (change && previous_change) adjacent = true;
      previous_change = change;
    }
  }
  if (adjacent) failures += " two consecutive sign changes;";
  if (!failures.empty()) throw Error(ErrorCode::PreconditionViolated, cf.to_string() + ":" + failures);
  return total - changes;
}

SignedCF positive_cf(const Rational& r) {
  if (r.sign() <= 0) throw Error(ErrorCode::NonPositive, "positive_cf needs r > 0, got " + r.to_string());
  std::vector<BigInt> terms;
  BigInt p = r.num();
  BigInt q = r.den();
  while (q != 0) {
    BigInt quotient = p / q;
    BigInt rem = p - quotient * q;
    terms.push_back(std::move(quotient));
    p = std::move(q);
    q = std::move(rem);
  }
  return SignedCF(std::move(terms));
}

BigInt cf_crossing_number(const Rational& r) {
  BigInt sum = 0;
  for (const auto& q : positive_cf(r).terms) sum += q;
  return sum;
}

// ---------------------------------------------------------------------------
// [1, ±2, ..., ±1, ±2] expansions

SignChangeProfile sign_change_profile(const SignedCF& cf) {
  const auto& a = cf.terms;
  if (a.empty() || a.size() % 2 != 0) {
    throw Error(ErrorCode::ShapeError, "expected an even-length [±1, ±2, ...] fraction, got " + cf.to_string());
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    const BigInt expected = (i % 2 == 0) ? 1 : 2;
    if (abs(a[i]) != expected) {
      throw Error(ErrorCode::ShapeError, "term " + std::to_string(i + 1) + " of " + cf.to_string() +
                                             " must have magnitude " + expected.str());
    }
  }
  SignChangeProfile profile;
  int run = 0;
  for (std::size_t j = 0; j + 1 < a.size(); ++j) {
    if (a[j].sign() != a[j + 1].sign()) {
      profile.changes.push_back(static_cast<int>(j + 1));
      profile.max_run = std::max(profile.max_run, ++run);
    } else {
      run = 0;
    }
  }
  const int n = static_cast<int>(a.size());
  profile.palindromic = std::all_of(profile.changes.begin(), profile.changes.end(), [&](int k) {
    return std::binary_search(profile.changes.begin(), profile.changes.end(), n - k);
  });
  return profile;
}

SignedCF expand_1212(const Fraction& r) {
  if (r.alpha % 2 == 0 || r.beta % 2 != 0) {
    throw Error(ErrorCode::InvalidParity, "expand_1212 needs alpha odd and beta even, got " + r.to_string());
  }
  if (r.beta <= 0) throw Error(ErrorCode::NonPositive, "expand_1212 needs r > 0, got " + r.to_string());

  // Peel [1, 2e, tail] from the front. The value stays positive; a negative
  // tail is negated and the flip is carried into every later term.
  const Rational one{1};
  Rational v{r.alpha, r.beta};
  int flip = 1;
  std::vector<BigInt> terms;
  const BigInt max_terms = 2 * r.alpha + 2;
  while (true) {
    if (v == one) throw Error(ErrorCode::InternalError, "expand_1212 reached a unit tail");
    const int e = v > one ? 1 : -1;
    terms.emplace_back(flip);
    terms.emplace_back(2 * e * flip);
    Rational tail_inv = (v - one).reciprocal() - Rational(2 * e);
    if (tail_inv.is_zero()) break;
    Rational tail = tail_inv.reciprocal();
    if (tail.sign() < 0) {
      tail = -tail;
      flip = -flip;
    }
    v = tail;
    if (BigInt(terms.size()) > max_terms) {
      throw Error(ErrorCode::InternalError, "expand_1212 did not terminate for " + r.to_string());
    }
  }

  SignedCF out(std::move(terms));
  if (evaluate(out) != Rational(r.alpha, r.beta)) {
    throw Error(ErrorCode::InternalError, "expand_1212 value mismatch for " + r.to_string());
  }
  if (sign_change_profile(out).has_three_consecutive()) {
    throw Error(ErrorCode::InternalError, "expand_1212 produced three consecutive sign changes: " + out.to_string());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Two-bridge equivalence

BigInt mod_inverse(const BigInt& value, const BigInt& modulus) {
  if (modulus <= 0) throw Error(ErrorCode::InvalidInput, "modulus must be positive");
  if (modulus == 1) return 0;
  // Extended Euclid on (value mod m, m).
  BigInt old_r = mod_floor(value, modulus), r = modulus;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
  }
  if (old_r != 1) {
    throw Error(ErrorCode::NotInvertible, value.str() + " is not invertible modulo " + modulus.str());
  }
  return mod_floor(old_s, modulus);
}

bool two_bridge_equivalent(const Fraction& f, const Fraction& g, bool up_to_mirror) {
  const BigInt& alpha = f.alpha;
  // Validate both before comparing so that bad input is never silently "false".
  BigInt f_inv = mod_inverse(f.beta, alpha);
  mod_inverse(g.beta, g.alpha);
  if (alpha != g.alpha) return false;
  if (alpha == 1) return true;
  const BigInt fb = mod_floor(f.beta, alpha);
  auto matches = [&](const BigInt& beta) {
    BigInt b = mod_floor(beta, alpha);
    return b == fb || b == f_inv;
  };
  return matches(g.beta) || (up_to_mirror && matches(-g.beta));
}

Fraction canonical_fraction(const Fraction& f) {
  if (f.alpha == 1) return {1, 0};
  BigInt b = mod_floor(f.beta, f.alpha);
  BigInt inv = mod_inverse(b, f.alpha);
  return {f.alpha, std::min(b, inv)};
}

Fraction display_fraction(const Fraction& f) {
  Fraction c = canonical_fraction(f);
  Fraction m = canonical_fraction(f.mirror());
  return c.beta <= m.beta ? c : m;
}

bool beta_squared_pm2(const Fraction& f) {
  BigInt sq = mod_floor(f.beta * f.beta, f.alpha);
  return sq == mod_floor(BigInt(2), f.alpha) || sq == mod_floor(BigInt(-2), f.alpha);
}

BigInt fraction_crossing_number(const Fraction& f) {
  if (f.alpha == 1) return 0;
  BigInt b = mod_floor(f.beta, f.alpha);
  return cf_crossing_number(Rational(f.alpha, b));
}

}  // namespace harmonic
