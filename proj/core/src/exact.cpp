#include "harmonic/exact.hpp"

#include <ostream>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "harmonic/error.hpp"

namespace harmonic {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidParity: return "InvalidParity";
    case ErrorCode::InternalError: return "InternalError";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::InvalidTriple: return "InvalidTriple";
    case ErrorCode::DegenerateSign: return "DegenerateSign";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::CoprimalityError: return "CoprimalityError";
    case ErrorCode::UnsupportedBridge: return "UnsupportedBridge";
    case ErrorCode::ZeroTerm: return "ZeroTerm";
    case ErrorCode::MalformedCode: return "MalformedCode";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotAKnot: return "NotAKnot";
  }
  return "UnknownError";
}

bool Error::is_input_error() const noexcept {
  switch (code_) {
    case ErrorCode::InternalError:
    case ErrorCode::DegenerateSign:
      return false;
    default:
      return true;
  }
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "floor_div by zero");
  BigInt q = num / den;  // truncates toward zero
  BigInt r = num - q * den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

BigInt mod_floor(const BigInt& value, const BigInt& modulus) {
  BigInt r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

BigInt gcd(const BigInt& x, const BigInt& y) {
  return boost::multiprecision::gcd(x, y);
}

int sign(const BigInt& value) noexcept {
  return value.sign();
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = harmonic::gcd(abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
  return {den_, num_};
}

double Rational::to_double() const {
  using Float = boost::multiprecision::cpp_bin_float_double;
  return static_cast<double>(Float(num_) / Float(den_));
}

std::string Rational::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational operator+(const Rational& x, const Rational& y) {
  return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
}

Rational operator-(const Rational& x, const Rational& y) {
  return {x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_};
}

Rational operator*(const Rational& x, const Rational& y) {
  return {x.num_ * y.num_, x.den_ * y.den_};
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.num_ == 0) throw Error(ErrorCode::DivisionByZero, "division by zero rational");
  return {x.num_ * y.den_, x.den_ * y.num_};
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  BigInt lhs = x.num_ * y.den_;
  BigInt rhs = y.num_ * x.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.num();
  if (r.den() != 1) os << '/' << r.den();
  return os;
}

// ---------------------------------------------------------------------------
// RationalAngle

RationalAngle::RationalAngle(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
  if (q_ == 0) throw Error(ErrorCode::DivisionByZero, "angle with zero denominator");
  if (q_ < 0) {
    p_ = -p_;
    q_ = -q_;
  }
}

RationalAngle RationalAngle::reduced() const {
  BigInt g = harmonic::gcd(abs(p_), q_);
  if (g <= 1) return *this;
  return {p_ / g, q_ / g};
}

Rational RationalAngle::folded() const {
  // cos is even and 2π-periodic: reduce p/q mod 2, then reflect (1, 2) onto (0, 1).
  BigInt two_q = 2 * q_;
  BigInt r = mod_floor(p_, two_q);
  if (r > q_) r = two_q - r;
  return {r, q_};
}

double RationalAngle::radians() const {
  constexpr double kPi = 3.141592653589793238462643383279502884;
  // Reduce first so large multiples of π do not lose precision.
  Rational turns{mod_floor(p_, 2 * q_), q_};
  return turns.to_double() * kPi;
}

int sign_sin(const RationalAngle& x) {
  BigInt r = mod_floor(x.p(), x.q());
  if (r == 0) return 0;
  BigInt fl = floor_div(x.p(), x.q());
  return (fl % 2 == 0) ? 1 : -1;
}

int sign_cos(const RationalAngle& x) {
  // 1/2 − p/q = (q − 2p) / (2q)
  return sign_sin(RationalAngle(x.q() - 2 * x.p(), 2 * x.q()));
}

std::strong_ordering compare_cos(const RationalAngle& x, const RationalAngle& y) {
  // cos is strictly decreasing on [0, π].
  return y.folded() <=> x.folded();
}

}  // namespace harmonic
