#include "harmonic/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "harmonic/error.hpp"

namespace harmonic {

LaurentPoly::LaurentPoly(std::vector<BigInt> coeffs, std::int64_t low) : coeffs_(std::move(coeffs)), low_(low) {
  trim();
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
  low_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) low_ = 0;
}

BigInt LaurentPoly::coefficient(std::int64_t exponent) const {
  if (exponent < low_ || exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<long long> LaurentPoly::to_ints() const {
  std::vector<long long> out;
  for (const auto& c : coeffs_) out.push_back(static_cast<long long>(c));
  return out;
}

BigInt LaurentPoly::evaluate(const BigInt& t) const {
  if (low_ < 0 && t != 1 && t != -1) {
    throw Error(ErrorCode::InvalidInput, "negative exponents evaluate exactly only at t = ±1");
  }
  // Horner on the polynomial part, then the t^low factor.
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  if (low_ >= 0) return acc * pow(t, static_cast<unsigned>(low_));
  return (t == -1 && (-low_) % 2 == 1) ? BigInt(-acc) : acc;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return {};
  LaurentPoly out(coeffs_, 0);
  if (out.coeffs_.back() < 0) out = -out;
  return out;
}

bool LaurentPoly::is_palindromic_up_to_sign() const {
  const std::size_t n = coeffs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (abs(coeffs_[i]) != abs(coeffs_[n - 1 - i])) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (is_zero()) return {};
  if (coeffs_.size() < d.coeffs_.size()) throw Error(ErrorCode::InternalError, "inexact polynomial division");
  std::vector<BigInt> rem = coeffs_;
  const std::size_t dn = d.coeffs_.size();
  std::vector<BigInt> q(rem.size() - dn + 1);
  const BigInt& lead = d.coeffs_.back();
  for (std::size_t i = q.size(); i-- > 0;) {
    BigInt& top = rem[i + dn - 1];
    if (top == 0) continue;
    BigInt r;
    divide_qr(top, lead, q[i], r);
    if (r != 0) throw Error(ErrorCode::InternalError, "inexact polynomial division");
    for (std::size_t j = 0; j < dn; ++j) rem[i + j] -= q[i] * d.coeffs_[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; })) {
    throw Error(ErrorCode::InternalError, "inexact polynomial division");
  }
  return LaurentPoly(std::move(q), low_ - d.low_);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const std::int64_t low = std::min(x.low_, y.low_);
  const std::int64_t high = std::max(x.max_exponent(), y.max_exponent());
  std::vector<BigInt> c(static_cast<std::size_t>(high - low + 1));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) c[static_cast<std::size_t>(x.low_ - low) + i] += x.coeffs_[i];
  for (std::size_t i = 0; i < y.coeffs_.size(); ++i) c[static_cast<std::size_t>(y.low_ - low) + i] += y.coeffs_[i];
  return LaurentPoly(std::move(c), low);
}

LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) { return x + (-y); }

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<BigInt> c(x.coeffs_.size() + y.coeffs_.size() - 1);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) c[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return LaurentPoly(std::move(c), x.low_ + y.low_);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const std::int64_t e = low_ + static_cast<std::int64_t>(i);
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || e == 0) os << mag;
    if (e != 0) {
      os << 't';
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace harmonic
