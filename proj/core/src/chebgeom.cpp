#include "harmonic/chebgeom.hpp"

#include <algorithm>
#include <numeric>

#include "harmonic/error.hpp"

namespace harmonic {

namespace {

void require_pair(const HarmonicTriple& K, std::int64_t h, std::int64_t k) {
  if (h < 1 || k < 1 || k * K.b + h * K.a >= K.a * K.b) {
    throw Error(ErrorCode::InvalidInput, "(h, k) = (" + std::to_string(h) + ", " + std::to_string(k) +
                                             ") is not a double point of " + K.to_string());
  }
}

// Angles over the common denominator ab: τ = (kb + ha)/(ab), σ = (kb − ha)/(ab).
RationalAngle over_ab(const HarmonicTriple& K, std::int64_t numerator) {
  return {BigInt(numerator), BigInt(K.a * K.b)};
}

int nonzero(int s, const char* what, const HarmonicTriple& K, std::int64_t h, std::int64_t k) {
  if (s == 0) {
    throw Error(ErrorCode::DegenerateSign, std::string(what) + " vanishes at (h, k) = (" + std::to_string(h) +
                                               ", " + std::to_string(k) + ") of " + K.to_string());
  }
  return s;
}

// z(t) − z(s) = −2 sin(ckπ/a) sin(chπ/b).
int z_difference_sign(const HarmonicTriple& K, std::int64_t h, std::int64_t k) {
  int sk = nonzero(sign_sin(RationalAngle(K.c * k, K.a)), "sin(ck/a π)", K, h, k);
  int sh = nonzero(sign_sin(RationalAngle(K.c * h, K.b)), "sin(ch/b π)", K, h, k);
  return -sk * sh;
}

// x′(t)·y′(t) ∼ (−1)^{h+k} sin(ah/b π) sin(bk/a π).
int tangent_product_sign(const HarmonicTriple& K, std::int64_t h, std::int64_t k) {
  int parity = (h + k) % 2 == 0 ? 1 : -1;
  int s1 = nonzero(sign_sin(RationalAngle(K.a * h, K.b)), "sin(ah/b π)", K, h, k);
  int s2 = nonzero(sign_sin(RationalAngle(K.b * k, K.a)), "sin(bk/a π)", K, h, k);
  return parity * s1 * s2;
}

// sign of d/dt T_n(cos θ) = n sin(nθ)/sin(θ).
int derivative_sign(std::int64_t n, const RationalAngle& theta) {
  RationalAngle n_theta(theta.p() * n, theta.q());
  return sign_sin(n_theta) * sign_sin(theta);
}

}  // namespace

HarmonicTriple HarmonicTriple::make(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a < 1 || b < 1 || c < 1) {
    throw Error(ErrorCode::InvalidTriple, "parameters must be positive, got (" + std::to_string(a) + ", " +
                                              std::to_string(b) + ", " + std::to_string(c) + ")");
  }
  auto check = [](const char* names, std::int64_t x, std::int64_t y) {
    if (std::gcd(x, y) != 1) {
      throw Error(ErrorCode::InvalidTriple, std::string(names) + " = (" + std::to_string(x) + ", " +
                                                std::to_string(y) + ") are not coprime");
    }
  };
  check("a, b", a, b);
  check("a, c", a, c);
  check("b, c", b, c);
  return {a, b, c};
}

std::string HarmonicTriple::to_string() const {
  return "H(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

int crossing_sign(const HarmonicTriple& K, std::int64_t h, std::int64_t k) {
  require_pair(K, h, k);
  return z_difference_sign(K, h, k) * tangent_product_sign(K, h, k);
}

bool over_strand(const HarmonicTriple& K, std::int64_t h, std::int64_t k) {
  require_pair(K, h, k);
  return z_difference_sign(K, h, k) > 0;
}

int writhe_sign(const HarmonicTriple& K, std::int64_t h, std::int64_t k) {
  require_pair(K, h, k);
  const RationalAngle tau = over_ab(K, k * K.b + h * K.a);
  const RationalAngle sigma = over_ab(K, k * K.b - h * K.a);
  int xt = nonzero(derivative_sign(K.a, tau), "x'(t)", K, h, k);
  int yt = nonzero(derivative_sign(K.b, tau), "y'(t)", K, h, k);
  int xs = nonzero(derivative_sign(K.a, sigma), "x'(s)", K, h, k);
  int ys = nonzero(derivative_sign(K.b, sigma), "y'(s)", K, h, k);
  // Both branches meet at the same point, so x′(t)y′(s) and y′(t)x′(s) have opposite signs.
  if (xt * ys != -yt * xs) {
    throw Error(ErrorCode::InternalError, "tangent signs inconsistent at a crossing of " + K.to_string());
  }
  // Over strand o, under strand u: sign of o × u.
  return z_difference_sign(K, h, k) * xt * ys;
}

std::vector<Crossing> enumerate_crossings(const HarmonicTriple& K) {
  HarmonicTriple::make(K.a, K.b, K.c);
  std::vector<Crossing> out;
  out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(K.crossing_count(), 0)));
  for (std::int64_t k = 1; k < K.a; ++k) {
    for (std::int64_t h = 1; h < K.b; ++h) {
      if (k * K.b + h * K.a >= K.a * K.b) break;
      Crossing x;
      x.h = h;
      x.k = k;
      x.t_angle = over_ab(K, k * K.b + h * K.a);
      x.s_angle = over_ab(K, k * K.b - h * K.a);
      x.x_angle = RationalAngle(x.t_angle.p() * K.a, x.t_angle.q());
      x.y_angle = RationalAngle(x.t_angle.p() * K.b, x.t_angle.q());
      x.sign = crossing_sign(K, h, k);
      x.over_at_t = over_strand(K, h, k);
      x.writhe_sign = writhe_sign(K, h, k);
      out.push_back(std::move(x));
    }
  }
  if (static_cast<std::int64_t>(out.size()) != K.crossing_count()) {
    throw Error(ErrorCode::InternalError, "crossing count mismatch for " + K.to_string());
  }

  // |y| grows as the folded y angle moves away from 1/2.
  const Rational half(1, 2);
  auto y_distance = [&](const Crossing& x) {
    Rational d = x.y_angle.folded() - half;
    return d.sign() < 0 ? -d : d;
  };
  std::vector<Rational> levels;
  for (const auto& x : out) {
    Rational d = y_distance(x);
    if (!d.is_zero()) levels.push_back(d);
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (auto& x : out) {
    Rational d = y_distance(x);
    if (d.is_zero()) continue;
    int rank = static_cast<int>(std::lower_bound(levels.begin(), levels.end(), d) - levels.begin()) + 1;
    x.y_level = sign_cos(x.y_angle) * rank;
  }

  std::sort(out.begin(), out.end(), [](const Crossing& p, const Crossing& q) {
    auto cx = compare_cos(p.x_angle, q.x_angle);
    if (cx != 0) return cx > 0;
    auto cy = compare_cos(p.y_angle, q.y_angle);
    if (cy != 0) return cy > 0;
    return std::pair(p.h, p.k) < std::pair(q.h, q.k);
  });
  int rank = -1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i == 0 || compare_cos(out[i - 1].x_angle, out[i].x_angle) != 0) ++rank;
    out[i].x_order = rank;
  }
  return out;
}

std::vector<ParameterEvent> parameter_events(const std::vector<Crossing>& crossings) {
  std::vector<ParameterEvent> events;
  events.reserve(2 * crossings.size());
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const auto& x = crossings[i];
    events.push_back({x.t_angle, i, true});
    const RationalAngle s_abs = x.s_angle.p() < 0 ? -x.s_angle : x.s_angle;
    events.push_back({s_abs, i, false});
  }
  // Angles lie in (0, π), so decreasing angle is increasing cos.
  std::sort(events.begin(), events.end(), [](const ParameterEvent& p, const ParameterEvent& q) {
    return p.angle.ratio() > q.angle.ratio();
  });
  for (std::size_t i = 1; i < events.size(); ++i) {
    if (events[i - 1].angle.ratio() == events[i].angle.ratio()) {
      throw Error(ErrorCode::InternalError, "two crossing passages share a curve parameter");
    }
  }
  return events;
}

}  // namespace harmonic
