#include "harmonic/invariants.hpp"

#include <algorithm>
#include <map>

#include "harmonic/error.hpp"

namespace harmonic {

WirtingerPresentation wirtinger(const GaussCode& gc) {
  gc.validate();
  WirtingerPresentation w;
  const std::size_t m = gc.entries.size();
  if (m == 0) return w;

  std::map<int, int> index;  // crossing id -> relation row
  for (const auto& e : gc.entries) index.emplace(e.crossing_id, 0);
  int row = 0;
  for (auto& [id, r] : index) r = row++;

  const int n = static_cast<int>(index.size());
  w.arc_count = n;
  w.relations.resize(static_cast<std::size_t>(n));

  // Start right after an under-passage so arc 0 begins at the top of the walk.
  std::size_t start = 0;
  while (gc.entries[start].passage != Passage::Under) ++start;
  start = (start + 1) % m;

  int arc = 0;
  for (std::size_t step = 0; step < m; ++step) {
    const auto& e = gc.entries[(start + step) % m];
    auto& rel = w.relations[static_cast<std::size_t>(index.at(e.crossing_id))];
    rel.sign = e.sign;
    if (e.passage == Passage::Over) {
      rel.over_arc = arc;
    } else {
      rel.incoming_arc = arc;
      rel.outgoing_arc = (arc + 1) % n;
      ++arc;
    }
  }
  return w;
}

namespace {

// Dense polynomial in t with non-negative exponents; index = exponent.
using Poly = std::vector<BigInt>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& x, const Poly& y) {
  if (x.empty() || y.empty()) return {};
  Poly out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] != 0) out[i + j] += x[i] * y[j];
    }
  }
  trim(out);
  return out;
}

Poly sub(Poly x, const Poly& y) {
  if (x.size() < y.size()) x.resize(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
  trim(x);
  return x;
}

Poly div_exact(Poly num, const Poly& den) {
  if (num.empty()) return {};
  if (den.size() == 1 && den[0] == 1) return num;
  if (num.size() < den.size()) throw Error(ErrorCode::InternalError, "Bareiss division left a remainder");
  const std::size_t dn = den.size();
  Poly q(num.size() - dn + 1);
  BigInt r;
  for (std::size_t i = q.size(); i-- > 0;) {
    BigInt& top = num[i + dn - 1];
    if (top == 0) continue;
    divide_qr(top, den.back(), q[i], r);
    if (r != 0) throw Error(ErrorCode::InternalError, "Bareiss division left a remainder");
    for (std::size_t j = 0; j < dn; ++j) num[i + j] -= q[i] * den[j];
  }
  if (std::any_of(num.begin(), num.end(), [](const BigInt& c) { return c != 0; })) {
    throw Error(ErrorCode::InternalError, "Bareiss division left a remainder");
  }
  trim(q);
  return q;
}

Poly bareiss_determinant(std::vector<std::vector<Poly>> M) {
  const std::size_t n = M.size();
  if (n == 0) return {1};
  int sign = 1;
  Poly prev{1};
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && M[pivot][k].empty()) ++pivot;
    if (pivot == n) return {};
    if (pivot != k) {
      std::swap(M[pivot], M[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly v = mul(M[k][k], M[i][j]);
        if (!M[i][k].empty() && !M[k][j].empty()) v = sub(std::move(v), mul(M[i][k], M[k][j]));
        M[i][j] = div_exact(std::move(v), prev);
      }
      M[i][k].clear();
    }
    prev = M[k][k];
  }
  Poly det = std::move(M[n - 1][n - 1]);
  if (sign < 0) {
    for (auto& c : det) c = -c;
  }
  return det;
}

void add_to(Poly& cell, const Poly& p) {
  if (cell.size() < p.size()) cell.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) cell[i] += p[i];
  trim(cell);
}

}  // namespace

LaurentPoly alexander(const WirtingerPresentation& w) {
  const int n = w.arc_count;
  if (n <= 1) return LaurentPoly::constant(1);
  const Poly one_minus_t{1, -1}, t{0, 1}, minus_one{-1};
  // Drop the last relation and the last arc.
  const std::size_t m = static_cast<std::size_t>(n - 1);
  std::vector<std::vector<Poly>> M(m, std::vector<Poly>(m));
  for (std::size_t r = 0; r < m; ++r) {
    const auto& rel = w.relations[r];
    auto put = [&](int arc, const Poly& p) {
      if (static_cast<std::size_t>(arc) < m) add_to(M[r][static_cast<std::size_t>(arc)], p);
    };
    put(rel.over_arc, one_minus_t);
    if (rel.sign > 0) {
      put(rel.incoming_arc, t);
      put(rel.outgoing_arc, minus_one);
    } else {
      put(rel.incoming_arc, minus_one);
      put(rel.outgoing_arc, t);
    }
  }
  Poly det = bareiss_determinant(std::move(M));
  return LaurentPoly(std::move(det)).normalized();
}

LaurentPoly alexander(const GaussCode& gc) { return alexander(wirtinger(gc)); }

BigInt determinant(const LaurentPoly& alexander_poly) { return abs(alexander_poly.evaluate(-1)); }

BigInt determinant(const GaussCode& gc) { return determinant(alexander(gc)); }

LaurentPoly alexander_of_fraction(const ConwayForm& cf) { return alexander(diagram_from_conway(cf)); }

std::optional<LaurentPoly> factor_square(const LaurentPoly& p) {
  if (p.is_zero()) return std::nullopt;
  const LaurentPoly base = p.normalized();
  const auto& c = base.coefficients();
  if ((c.size() - 1) % 2 != 0) return std::nullopt;
  const std::size_t half = (c.size() - 1) / 2;
  for (int s : {1, -1}) {
    // Power-series square root of s·p from the constant term up.
    const BigInt c0 = s * c[0];
    if (c0 <= 0) continue;
    const BigInt r0 = sqrt(c0);
    if (r0 * r0 != c0) continue;
    std::vector<BigInt> q{r0};
    bool ok = true;
    for (std::size_t k = 1; k <= half && ok; ++k) {
      BigInt acc = s * c[k];
      for (std::size_t i = 1; i < k; ++i) acc -= q[i] * q[k - i];
      BigInt quotient, rem;
      divide_qr(acc, BigInt(2 * r0), quotient, rem);
      ok = rem == 0;
      q.push_back(quotient);
    }
    if (!ok) continue;
    LaurentPoly candidate(q);
    LaurentPoly sq = candidate * candidate;
    if (sq == base || -sq == base) return candidate.normalized();
  }
  return std::nullopt;
}

}  // namespace harmonic
