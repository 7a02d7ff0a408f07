#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "../fixtures.hpp"
#include "../oracles.hpp"
#include "harmonic/chebgeom.hpp"
#include "harmonic/error.hpp"

using namespace harmonic;

namespace {

std::vector<HarmonicTriple> sample_triples() {
  std::vector<HarmonicTriple> out;
  for (const auto& r : fixtures::table()) out.push_back(HarmonicTriple::make(r.a, r.b, r.c));
  for (std::int64_t a = 2; a <= 7; ++a) {
    for (std::int64_t b = a + 1; b <= 12; ++b) {
      for (std::int64_t c = 1; c <= 25; c += 2) {
        if (std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(b, c) == 1) {
          out.push_back(HarmonicTriple::make(a, b, c));
        }
      }
    }
  }
  return out;
}

int sgn(double v) { return (v > 0) - (v < 0); }

}  // namespace

TEST(HarmonicTriple, Validation) {
  EXPECT_NO_THROW(HarmonicTriple::make(3, 4, 5));
  try {
    HarmonicTriple::make(2, 3, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidTriple);
    EXPECT_NE(std::string(e.what()).find("(2, 4)"), std::string::npos) << e.what();
  }
  EXPECT_THROW(HarmonicTriple::make(0, 3, 5), Error);
  EXPECT_EQ(HarmonicTriple::make(3, 4, 5).to_string(), "H(3,4,5)");
}

TEST(EnumerateCrossings, Counts) {
  EXPECT_EQ(enumerate_crossings(HarmonicTriple::make(3, 4, 5)).size(), 3u);
  EXPECT_EQ(enumerate_crossings(HarmonicTriple::make(4, 5, 7)).size(), 6u);
  EXPECT_EQ(enumerate_crossings(HarmonicTriple::make(5, 7, 11)).size(), 12u);
  for (std::int64_t a = 2; a < 32; ++a) {
    for (std::int64_t b = a + 1; (a - 1) * (b - 1) <= 30; ++b) {
      if (std::gcd(a, b) != 1) continue;
      std::int64_t c = a * b + 1;
      auto K = HarmonicTriple::make(a, b, c);
      EXPECT_EQ(static_cast<std::int64_t>(enumerate_crossings(K).size()), K.crossing_count()) << K.to_string();
    }
  }
}

TEST(EnumerateCrossings, SortedByDecreasingX) {
  for (const auto& K : sample_triples()) {
    auto cs = enumerate_crossings(K);
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
      auto ord = compare_cos(cs[i].x_angle, cs[i + 1].x_angle);
      EXPECT_NE(ord, std::strong_ordering::less) << K.to_string();
      EXPECT_EQ(cs[i].x_order + (ord == std::strong_ordering::greater ? 1 : 0), cs[i + 1].x_order);
    }
  }
}

TEST(CrossingSigns, AgreeWithFloatingPointCurve) {
  int checked = 0;
  for (const auto& K : sample_triples()) {
    for (const auto& x : enumerate_crossings(K)) {
      auto n = oracle::numeric_crossing(K.a, K.b, K.c, x.h, x.k);
      ASSERT_LT(n.mismatch, 1e-7) << K.to_string() << " h=" << x.h << " k=" << x.k;
      EXPECT_NEAR(n.x, std::cos(x.x_angle.radians()), 1e-9);
      EXPECT_NEAR(n.y, std::cos(x.y_angle.radians()), 1e-9);
      if (std::abs(n.z_difference) < 1e-9) continue;
      EXPECT_EQ(x.over_at_t, n.z_difference > 0) << K.to_string() << " h=" << x.h << " k=" << x.k;
      EXPECT_EQ(x.sign, n.twist) << K.to_string() << " h=" << x.h << " k=" << x.k;
      EXPECT_EQ(x.writhe_sign, n.oriented) << K.to_string() << " h=" << x.h << " k=" << x.k;
      EXPECT_EQ(sign_cos(x.y_angle), std::abs(n.y) < 1e-9 ? 0 : sgn(n.y)) << K.to_string();
      ++checked;
    }
  }
  EXPECT_GT(checked, 2000);
}

TEST(CrossingSigns, TrefoilAndFigureEight) {
  auto tre = enumerate_crossings(HarmonicTriple::make(3, 4, 5));
  EXPECT_TRUE(std::all_of(tre.begin(), tre.end(), [&](const Crossing& x) { return x.writhe_sign == tre[0].writhe_sign; }));
  auto fig = enumerate_crossings(HarmonicTriple::make(3, 5, 7));
  int writhe = 0;
  for (const auto& x : fig) writhe += x.writhe_sign;
  EXPECT_EQ(writhe, 0);
  EXPECT_EQ(fig.size(), 4u);
}

TEST(CrossingSigns, FreeFunctionsMatchEnumeration) {
  auto K = HarmonicTriple::make(5, 7, 11);
  for (const auto& x : enumerate_crossings(K)) {
    EXPECT_EQ(crossing_sign(K, x.h, x.k), x.sign);
    EXPECT_EQ(over_strand(K, x.h, x.k), x.over_at_t);
    EXPECT_EQ(writhe_sign(K, x.h, x.k), x.writhe_sign);
  }
}

TEST(CrossingSigns, Errors) {
  auto K = HarmonicTriple::make(3, 4, 5);
  for (auto [h, k] : {std::pair{0, 1}, std::pair{1, 0}, std::pair{3, 3}, std::pair{2, 2}}) {
    try {
      crossing_sign(K, h, k);
      ADD_FAILURE() << h << "," << k;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
    }
  }
  HarmonicTriple bad{3, 6, 5};  // bypasses make(): gcd(3, 6) = 3
  try {
    crossing_sign(bad, 2, 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateSign);
    EXPECT_FALSE(e.is_input_error());
  }
  EXPECT_THROW(over_strand(HarmonicTriple{3, 4, 6}, 2, 1), Error);
}

TEST(CrossingSigns, SignFollowsYOnTheConsecutiveFamily) {
  for (std::int64_t n = 2; n <= 6; ++n) {
    auto K = HarmonicTriple::make(2 * n - 1, 2 * n, 2 * n + 1);
    for (const auto& x : enumerate_crossings(K)) {
      EXPECT_EQ(x.sign, sign_cos(x.y_angle)) << K.to_string() << " h=" << x.h << " k=" << x.k;
      EXPECT_NE(x.y_level, 0);
    }
  }
}

TEST(CrossingSigns, ZDifferenceIdentityOnTheConsecutiveFamily) {
  for (std::int64_t n = 2; n <= 6; ++n) {
    auto K = HarmonicTriple::make(2 * n - 1, 2 * n, 2 * n + 1);
    for (const auto& x : enumerate_crossings(K)) {
      auto num = oracle::numeric_crossing(K.a, K.b, K.c, x.h, x.k);
      EXPECT_NEAR(num.z_difference, 2 * (num.t - num.s) * num.y, 1e-9);
      // t > s exactly when τ < |σ|, so the sign of 2(t−s)y(t) is exact too.
      auto tau = x.t_angle.ratio();
      auto sig = x.s_angle.ratio();
      if (sig.sign() < 0) sig = -sig;
      int t_minus_s = tau < sig ? 1 : -1;
      EXPECT_EQ(x.over_at_t, t_minus_s * sign_cos(x.y_angle) > 0) << K.to_string();
    }
  }
}

TEST(CrossingSigns, ShortcutForBEqualsAPlusOne) {
  int checked = 0;
  for (std::int64_t a = 2; a <= 9; ++a) {
    const std::int64_t b = a + 1;
    for (std::int64_t c = 1; c < 4 * a * b; ++c) {
      if (std::gcd(c, a * b) != 1) continue;
      auto K = HarmonicTriple::make(a, b, c);
      for (const auto& x : enumerate_crossings(K)) {
        auto tau = x.t_angle.ratio();
        auto sig = x.s_angle.ratio();
        if (sig.sign() < 0) sig = -sig;
        int t_minus_s = tau < sig ? 1 : -1;
        int z = x.over_at_t ? 1 : -1;
        EXPECT_EQ(x.sign, z * t_minus_s) << K.to_string() << " h=" << x.h << " k=" << x.k;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(CrossingSigns, MirrorRuleFlipsOverStrands) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> ad(3, 7), bd(4, 11), cd(1, 60);
  int tuples = 0;
  while (tuples < 20) {
    std::int64_t a = ad(rng), b = bd(rng), c = cd(rng);
    if (a >= b || std::gcd(a, b) != 1 || std::gcd(c, a * b) != 1) continue;
    // c′ ≡ c (mod 2a), c′ ≡ −c (mod 2b) by search over one period.
    std::int64_t cp = 0;
    for (std::int64_t x = 1; x <= 4 * a * b; ++x) {
      if ((x - c) % (2 * a) == 0 && (x + c) % (2 * b) == 0) {
        cp = x;
        break;
      }
    }
    if (cp == 0) continue;
    auto K = HarmonicTriple::make(a, b, c);
    auto M = HarmonicTriple::make(a, b, cp);
    auto ks = enumerate_crossings(K);
    auto ms = enumerate_crossings(M);
    ASSERT_EQ(ks.size(), ms.size());
    for (std::size_t i = 0; i < ks.size(); ++i) {
      ASSERT_EQ(ks[i].h, ms[i].h);
      ASSERT_EQ(ks[i].k, ms[i].k);
      EXPECT_NE(ks[i].over_at_t, ms[i].over_at_t) << K.to_string() << " vs " << M.to_string();
      EXPECT_EQ(ks[i].sign, -ms[i].sign);
      EXPECT_EQ(ks[i].writhe_sign, -ms[i].writhe_sign);
    }
    ++tuples;
  }
}

TEST(ParameterEvents, SymmetricAndOrdered) {
  for (const auto& K : sample_triples()) {
    auto cs = enumerate_crossings(K);
    auto ev = parameter_events(cs);
    ASSERT_EQ(ev.size(), 2 * cs.size());
    std::vector<Rational> angles;
    for (const auto& e : ev) angles.push_back(e.angle.ratio());
    for (std::size_t i = 0; i + 1 < angles.size(); ++i) EXPECT_GT(angles[i], angles[i + 1]);
    // θ ↦ π − θ maps the parameter set to itself.
    std::vector<Rational> mirrored;
    for (const auto& r : angles) mirrored.push_back(Rational(1) - r);
    std::sort(mirrored.begin(), mirrored.end(), std::greater<>());
    EXPECT_EQ(angles, mirrored) << K.to_string();
    std::vector<int> seen(cs.size(), 0);
    for (const auto& e : ev) seen[e.crossing] += e.at_t ? 1 : 10;
    for (int s : seen) EXPECT_EQ(s, 11);
  }
}

TEST(CrossingSigns, AgreeWithFloatingPointOnLargerTriples) {
  for (const auto& K : {HarmonicTriple::make(7, 11, 15), HarmonicTriple::make(9, 11, 13), HarmonicTriple::make(5, 11, 17),
                        HarmonicTriple::make(11, 13, 15), HarmonicTriple::make(9, 13, 17), HarmonicTriple::make(7, 13, 19)}) {
    for (const auto& x : enumerate_crossings(K)) {
      auto n = oracle::numeric_crossing(K.a, K.b, K.c, x.h, x.k);
      ASSERT_LT(n.mismatch, 1e-6);
      ASSERT_GT(std::abs(n.z_difference), 1e-9);
      EXPECT_EQ(x.over_at_t, n.z_difference > 0) << K.to_string();
      EXPECT_EQ(x.writhe_sign, n.oriented) << K.to_string();
    }
  }
}
