#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "../fixtures.hpp"
#include "../oracles.hpp"
#include "harmonic/classify.hpp"
#include "harmonic/error.hpp"
#include "harmonic/invariants.hpp"
#include "harmonic/names.hpp"

using namespace harmonic;

namespace {

LaurentPoly delta_of(const HarmonicTriple& K) { return alexander(build_gauss_code(K)); }

bool is_canonical(std::int64_t b, std::int64_t c) { return b < c && c < 3 * b && (c - b) % 4 != 0; }

}  // namespace

TEST(ReduceC, Examples) {
  auto r = reduce_c(HarmonicTriple::make(3, 4, 13));
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_EQ(r.steps[0].from_c, 13);
  EXPECT_EQ(r.steps[0].to_c, 5);
  EXPECT_EQ(r.steps[0].lambda, 3);
  EXPECT_EQ(r.steps[0].mu, 1);
  EXPECT_TRUE(r.mirrored);
  EXPECT_EQ(r.reduced, HarmonicTriple::make(3, 4, 5));
  EXPECT_TRUE(reduce_c(HarmonicTriple::make(4, 5, 7)).steps.empty());
  EXPECT_TRUE(reduce_c(HarmonicTriple::make(3, 4, 5)).steps.empty());
}

TEST(ReduceC, StepsAreValidAndTerminal) {
  for (std::int64_t a = 3; a <= 5; ++a) {
    for (std::int64_t b = a + 1; b <= 9; ++b) {
      for (std::int64_t c = 1; c < 3 * a * b; ++c) {
        if (std::gcd(a, b) != 1 || std::gcd(c, a * b) != 1) continue;
        auto r = reduce_c(HarmonicTriple::make(a, b, c));
        std::int64_t cur = c;
        bool mirrored = false;
        for (const auto& s : r.steps) {
          EXPECT_EQ(s.from_c, cur);
          EXPECT_GT(s.lambda, 0);
          EXPECT_GT(s.mu, 0);
          EXPECT_EQ(s.from_c, s.lambda * a + s.mu * b);
          EXPECT_EQ(s.to_c, std::abs(s.lambda * a - s.mu * b));
          EXPECT_LT(s.to_c, s.from_c);
          mirrored = mirrored != s.mirrored;
          cur = s.to_c;
        }
        EXPECT_EQ(r.reduced.c, cur);
        EXPECT_EQ(r.mirrored, mirrored);
        for (std::int64_t l = 1; l * a < cur; ++l) EXPECT_NE((cur - l * a) % b, 0) << a << "," << b << "," << c;
      }
    }
  }
}

TEST(ReduceC, PreservesTheAlexanderPolynomial) {
  std::mt19937_64 rng(4);
  int sampled = 0;
  while (sampled < 20) {
    std::int64_t a = std::uniform_int_distribution<std::int64_t>(3, 4)(rng);
    std::int64_t b = std::uniform_int_distribution<std::int64_t>(a + 1, a == 3 ? 16 : 11)(rng);
    std::int64_t c = std::uniform_int_distribution<std::int64_t>(b + 1, 2 * a * b)(rng);
    if (std::gcd(a, b) != 1 || std::gcd(c, a * b) != 1) continue;
    auto K = HarmonicTriple::make(a, b, c);
    auto r = reduce_c(K);
    if (r.steps.empty()) continue;
    EXPECT_EQ(delta_of(K), delta_of(r.reduced)) << K.to_string() << " -> " << r.reduced.to_string();
    ++sampled;
  }
}

TEST(CanonicalH4, Examples) {
  auto k = canonical_h4(5, 7);
  EXPECT_EQ(k.b_prime, 5);
  EXPECT_EQ(k.c_prime, 7);
  EXPECT_FALSE(k.mirrored);
  EXPECT_TRUE(two_bridge_equivalent(k.fraction, {7, 2}, true));
  EXPECT_EQ(k.crossing_number, 5);

  auto l = canonical_h4(5, 11);
  EXPECT_TRUE(two_bridge_equivalent(l.fraction, {11, 3}, true));
  EXPECT_EQ(l.crossing_number, 6);

  auto t = canonical_h4(3, 5);
  EXPECT_EQ(t.fraction.alpha, 3);
  EXPECT_EQ(t.crossing_number, 3);

  EXPECT_THROW(canonical_h4(4, 7), Error);
  EXPECT_THROW(canonical_h4(9, 15), Error);
  EXPECT_THROW(canonical_h4(7, 7), Error);
}

TEST(CanonicalH4, IdempotentWithTypeInvariants) {
  for (std::int64_t b = 1; b < 200; b += 2) {
    for (std::int64_t c = 1; b + c <= 200; c += 2) {
      if (b == c || std::gcd(b, c) != 1) continue;
      auto k = canonical_h4(b, c);
      if (k.unknot) {
        EXPECT_EQ(k.fraction.alpha, 1);
        continue;
      }
      ASSERT_TRUE(is_canonical(k.b_prime, k.c_prime)) << b << "," << c;
      EXPECT_EQ(k.crossing_number, (3 * k.b_prime + k.c_prime - 2) / 4);
      EXPECT_EQ(BigInt(k.crossing_number), fraction_crossing_number(k.fraction));
      auto again = canonical_h4(k.b_prime, k.c_prime);
      EXPECT_EQ(again.b_prime, k.b_prime);
      EXPECT_EQ(again.c_prime, k.c_prime);
      EXPECT_FALSE(again.mirrored);
    }
  }
}

TEST(CanonicalH4, MirrorFlagTracksTheClosedForm) {
  for (std::int64_t b = 3; b < 80; b += 2) {
    for (std::int64_t c = 1; b + c <= 80; c += 2) {
      if (std::gcd(b, c) != 1 || (b - c) % 4 == 0) continue;
      auto k = canonical_h4(b, c);
      auto direct = fraction_of(conway_form_h4(b, c));
      if (k.unknot) {
        EXPECT_EQ(direct.alpha, 1) << b << "," << c;
        continue;
      }
      EXPECT_TRUE(two_bridge_equivalent(k.input_fraction(), direct, false))
          << b << "," << c << ": " << k.input_fraction() << " vs " << direct;
    }
  }
}

TEST(CanonicalH4, DistinctPairsGiveDistinctKnots) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t b = 3; b < 40; b += 2) {
    for (std::int64_t c = b + 2; c < 3 * b; c += 2) {
      if (std::gcd(b, c) == 1 && is_canonical(b, c)) pairs.emplace_back(b, c);
    }
  }
  std::mt19937_64 rng(100);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(100);
  std::vector<Fraction> fs;
  for (auto [b, c] : pairs) fs.push_back(canonical_h4(b, c).fraction);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      EXPECT_FALSE(two_bridge_equivalent(fs[i], fs[j], true))
          << pairs[i].first << "," << pairs[i].second << " vs " << pairs[j].first << "," << pairs[j].second;
    }
  }
}

TEST(PredictFamily, Examples) {
  auto p = predict_family(HarmonicTriple::make(5, 6, 7));
  ASSERT_TRUE(p.has_value());
  ASSERT_TRUE(p->harmonic.has_value());
  EXPECT_EQ(*p->harmonic, HarmonicTriple::make(4, 5, 7));
  EXPECT_EQ(p->conway.terms, (std::vector<int>{3, 2}));

  auto q = predict_family(HarmonicTriple::make(7, 8, 9));
  ASSERT_TRUE(q && q->harmonic);
  EXPECT_EQ(*q->harmonic, HarmonicTriple::make(4, 9, 7));

  auto r = predict_family(HarmonicTriple::make(5, 16, 17));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->conway.terms, (std::vector<int>{7, 6}));
  auto s = predict_family(HarmonicTriple::make(5, 18, 19));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->conway.terms, (std::vector<int>{7, 8}));

  EXPECT_FALSE(predict_family(HarmonicTriple::make(4, 5, 7)).has_value());
  EXPECT_FALSE(predict_family(HarmonicTriple::make(5, 7, 11)).has_value());
}

TEST(PredictFamily, HoldsAtSmallScale) {
  for (std::int64_t n = 2; n <= 4; ++n) {
    auto K = HarmonicTriple::make(2 * n - 1, 2 * n, 2 * n + 1);
    auto p = predict_family(K);
    ASSERT_TRUE(p && p->harmonic);
    EXPECT_EQ(delta_of(K), delta_of(*p->harmonic)) << K.to_string();
    EXPECT_EQ(delta_of(K), alexander_of_fraction(p->conway)) << K.to_string();
  }
  for (std::int64_t n = 1; n <= 2; ++n) {
    for (std::int64_t off : {1, 3}) {
      auto K = HarmonicTriple::make(5, 5 * n + off, 5 * n + off + 1);
      auto p = predict_family(K);
      ASSERT_TRUE(p.has_value());
      EXPECT_EQ(delta_of(K), alexander_of_fraction(p->conway)) << K.to_string();
    }
  }
}

TEST(TwistKnots, OnlySmallOnesPassTheSignature) {
  for (int n = 2; n <= 12; ++n) {
    auto r = twist_knot_check(n);
    EXPECT_EQ(r.fraction.alpha, 2 * n + 1);
    EXPECT_TRUE(r.agrees_with_claim) << n;
    EXPECT_EQ(r.harmonic_eligible, n == 3) << n;
  }
  auto four = twist_knot_check(4);
  bool saw_obstructed = false;
  for (const auto& c : four.candidates) {
    if (c.profile && c.profile->has_two_consecutive()) saw_obstructed = true;
  }
  EXPECT_TRUE(saw_obstructed);
  auto six = twist_knot_check(6);
  for (const auto& c : six.candidates) EXPECT_FALSE(c.beta_squared_pm2);
}

TEST(NonHarmonicFamily, ChecksPass) {
  for (int n = 1; n <= 6; ++n) {
    auto r = non_harmonic_family_check(n);
    EXPECT_TRUE(r.passes) << n;
    EXPECT_EQ(r.fraction, (Fraction{2 * n * n + 1, 2 * n}));
    EXPECT_TRUE(r.beta_squared_minus2);
    EXPECT_TRUE(r.mobius_matches);
    EXPECT_TRUE(r.expansion_matches);
    EXPECT_EQ(r.crossing_number, 3 * n);
    EXPECT_EQ(r.obstructed, n > 1);
  }
  EXPECT_EQ(non_harmonic_family_check(2).expansion, (SignedCF{1, 2, -1, 2, 1, -2, 1, 2}));
  EXPECT_EQ(non_harmonic_family_check(3).fraction, (Fraction{19, 6}));
}

TEST(TableTriples, MatchBruteForce) {
  auto ts = table_triples(30);
  auto rows = oracle::table_rows(30);
  ASSERT_EQ(ts.size(), 51u);
  ASSERT_EQ(ts.size(), rows.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    EXPECT_EQ(ts[i], HarmonicTriple::make(rows[i][0], rows[i][1], rows[i][2]));
  }
  const auto& fx = fixtures::table();
  ASSERT_EQ(fx.size(), ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) EXPECT_EQ(ts[i], HarmonicTriple::make(fx[i].a, fx[i].b, fx[i].c));
}

TEST(Analyze, ReproducesEveryTableRow) {
  for (const auto& row : fixtures::table()) {
    auto K = HarmonicTriple::make(row.a, row.b, row.c);
    auto r = analyze(K);
    ASSERT_TRUE(r.name.has_value()) << K.to_string();
    EXPECT_EQ(*r.name, row.name) << K.to_string();
    if (row.alpha != 0) {
      ASSERT_TRUE(r.fraction.has_value()) << K.to_string();
      EXPECT_TRUE(two_bridge_equivalent(*r.fraction, {row.alpha, row.beta}, true))
          << K.to_string() << ": " << *r.fraction << " vs " << row.alpha << "/" << row.beta;
    }
    EXPECT_EQ(r.classification, row.a <= 4 ? Classification::TwoBridge : Classification::Consistent) << K.to_string();
    EXPECT_EQ(r.determinant, determinant(r.alexander));
    EXPECT_EQ(r.crossing_bound, K.crossing_count());
  }
}

TEST(Analyze, Examples) {
  auto tre = analyze(HarmonicTriple::make(3, 4, 5));
  EXPECT_EQ(tre.fraction->alpha, 3);
  EXPECT_EQ(tre.alexander.to_ints(), (std::vector<long long>{1, -1, 1}));
  EXPECT_EQ(tre.determinant, 3);
  EXPECT_EQ(*tre.crossing_number, 3);
  EXPECT_EQ(*tre.name, "3_1");

  auto six = analyze(HarmonicTriple::make(3, 7, 11));
  EXPECT_TRUE(two_bridge_equivalent(*six.fraction, {13, 5}, true));
  EXPECT_EQ(*six.name, "6_3");

  auto five = analyze(HarmonicTriple::make(5, 6, 7));
  EXPECT_EQ(*five.name, "5_2");
  EXPECT_TRUE(five.fraction_from_table);
  EXPECT_TRUE(two_bridge_equivalent(*five.fraction, {7, 4}, true));
  ASSERT_TRUE(five.prediction_holds.has_value());
  EXPECT_TRUE(*five.prediction_holds);

  EXPECT_EQ(*analyze(HarmonicTriple::make(6, 7, 11)).name, "10_134");

  auto comp = analyze(HarmonicTriple::make(5, 7, 11));
  ASSERT_TRUE(comp.square_root.has_value());
  EXPECT_EQ(comp.square_root->to_ints(), (std::vector<long long>{1, -3, 1}));

  auto unknot = analyze(HarmonicTriple::make(2, 5, 7));
  EXPECT_EQ(unknot.classification, Classification::Unknot);
  EXPECT_EQ(*unknot.name, "0_1");
}

TEST(Analyze, FractionOfInfinity) {
  EXPECT_EQ(fraction_of({{1, -2, 1, -2}}), (Fraction{1, 0}));
  EXPECT_EQ(fraction_of({{3, 2}}), (Fraction{7, 2}));
}

TEST(NameTable, EmbeddedTableIsConsistent) {
  const auto& t = NameTable::embedded();
  EXPECT_GE(t.version(), 1);
  ASSERT_NE(t.find("5_2"), nullptr);
  EXPECT_EQ(t.find("5_2")->determinant, 7);
  EXPECT_EQ(t.find("nope"), nullptr);
  auto* r = t.lookup_by_fraction({7, -2});
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->name, "5_2");
  LaurentPoly d({2, -3, 2});
  EXPECT_TRUE(t.lookup_by_alexander(d, 5).unique());
  EXPECT_TRUE(t.lookup_by_alexander(d, 4).candidates.empty());
  for (const auto& row : fixtures::table()) EXPECT_NE(t.find(row.name), nullptr) << row.name;
}

TEST(NameTable, ParseAndErrors) {
  auto t = NameTable::parse("@version 7\n# comment\n\n3_1|3|3|1,-1,1|3/1|H(3,4,5)\n");
  EXPECT_EQ(t.version(), 7);
  ASSERT_EQ(t.records().size(), 1u);
  EXPECT_EQ(t.records()[0].alexander.to_ints(), (std::vector<long long>{1, -1, 1}));
  for (const char* bad : {"3_1|3|4|1,-1,1|3/1|x\n", "3_1|3|3|1,-1,1|5/2|x\n", "3_1|3\n", "3_1|three|3|1,-1,1|3/1|x\n",
                          "3_1|3|3|1,-1,1|3/1|x\n3_1|3|3|1,-1,1|3/1|y\n"}) {
    try {
      NameTable::parse(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidInput) << bad;
    }
  }
}
