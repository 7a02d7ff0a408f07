#include "harmonic/classify.hpp"

#include <algorithm>
#include <numeric>

#include "harmonic/error.hpp"
#include "harmonic/invariants.hpp"
#include "harmonic/names.hpp"

namespace harmonic {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Unknot: return "unknot";
    case Classification::TwoBridge: return "two-bridge";
    case Classification::Consistent: return "consistent";
    case Classification::Unidentified: return "unidentified";
  }
  return "?";
}

Fraction fraction_of(const ConwayForm& cf) {
  try {
    return Fraction::from_rational(evaluate(cf.to_cf()));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DivisionByZero) return {1, 0};
    throw;
  }
}

// ---------------------------------------------------------------------------

namespace {

std::optional<ReductionStep> best_step(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::optional<ReductionStep> best;
  for (std::int64_t lambda = 1; lambda * a < c; ++lambda) {
    const std::int64_t rest = c - lambda * a;
    if (rest % b != 0) continue;
    const std::int64_t mu = rest / b;
    const std::int64_t to = std::abs(lambda * a - mu * b);
    if (!best || to < best->to_c) best = ReductionStep{c, to, lambda, mu, true};
  }
  return best;
}

}  // namespace

Reduction reduce_c(const HarmonicTriple& K) {
  HarmonicTriple::make(K.a, K.b, K.c);
  Reduction r;
  r.reduced = K;
  while (auto step = best_step(K.a, K.b, r.reduced.c)) {
    if (step->to_c <= 0 || step->to_c >= step->from_c) {
      throw Error(ErrorCode::InternalError, "reduction did not decrease c for " + K.to_string());
    }
    r.steps.push_back(*step);
    r.reduced.c = step->to_c;
    r.mirrored = !r.mirrored;
  }
  return r;
}

CanonicalH4 canonical_h4(std::int64_t b, std::int64_t c) {
  if (b < 1 || c < 1 || b % 2 == 0 || c % 2 == 0 || std::gcd(b, c) != 1 || (b == c && b != 1)) {
    throw Error(ErrorCode::InvalidInput, "canonical_h4 needs distinct odd coprime b, c; got (" + std::to_string(b) +
                                             ", " + std::to_string(c) + ")");
  }
  CanonicalH4 out;
  bool mirrored = false;
  for (int guard = 0;; ++guard) {
    if (guard > 10000) throw Error(ErrorCode::InternalError, "canonical_h4 did not terminate");
    if (b > c) {
      std::swap(b, c);  // exchanging y and z is a reflection
      mirrored = !mirrored;
    }
    if (b == 1) {
      out.unknot = true;
      break;
    }
    if ((c - b) % 4 == 0) {
      c = std::abs(c - 2 * b);  // c = b + 4λ
      mirrored = !mirrored;
    } else if (c > 3 * b) {
      c = std::abs(c - 6 * b);  // c = 3b + 4λ
      mirrored = !mirrored;
    } else {
      break;
    }
  }
  out.b_prime = b;
  out.c_prime = c;
  out.mirrored = mirrored;
  if (out.unknot) {
    out.fraction = {1, 0};
    return out;
  }
  out.conway = conway_form_h4(b, c);
  out.fraction = fraction_of(out.conway);
  out.crossing_number = (3 * b + c - 2) / 4;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

ConwayForm three_then_twos(std::int64_t crossings) {
  ConwayForm cf{{3}};
  for (std::int64_t k = 3; k < crossings; k += 2) cf.terms.push_back(2);
  return cf;
}

}  // namespace

std::optional<ExpectedIdentity> predict_family(const HarmonicTriple& K) {
  const auto [a, b, c] = std::tuple(K.a, K.b, K.c);
  if (a >= 3 && a % 2 == 1 && b == a + 1 && c == a + 2) {
    const std::int64_t n = b / 2;
    ExpectedIdentity e;
    e.harmonic = n % 2 == 1 ? HarmonicTriple{4, 2 * n - 1, 2 * n + 1} : HarmonicTriple{4, 2 * n + 1, 2 * n - 1};
    e.conway = three_then_twos(2 * n - 1);
    e.statement = K.to_string() + " is " + e.harmonic->to_string() + " = " + e.conway.to_string() + " up to mirror";
    return e;
  }
  if (a == 5 && b > 5 && c == b + 1) {
    if (b % 5 == 1) {
      const int n = static_cast<int>((b - 1) / 5);
      ExpectedIdentity e{std::nullopt, ConwayForm{{2 * n + 1, 2 * n}}, {}};
      e.statement = K.to_string() + " is " + e.conway.to_string();
      return e;
    }
    if (b % 5 == 3) {
      const int n = static_cast<int>((b - 3) / 5);
      ExpectedIdentity e{std::nullopt, ConwayForm{{2 * n + 1, 2 * n + 2}}, {}};
      e.statement = K.to_string() + " is " + e.conway.to_string();
      return e;
    }
  }
  return std::nullopt;
}

TwistKnotReport twist_knot_check(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "twist_knot_check needs n >= 1");
  TwistKnotReport report;
  report.n = n;
  report.fraction = fraction_of(ConwayForm{{n, 2}});
  const BigInt alpha = 2 * n + 1;
  std::vector<Fraction> fractions{{alpha, 2}};
  Fraction second = n % 2 == 0 ? Fraction{alpha, -n} : Fraction{alpha, n + 1};
  if (!(second == fractions.front())) fractions.push_back(second);
  for (const auto& f : fractions) {
    TwistCandidate cand;
    cand.fraction = f;
    cand.beta_squared_pm2 = beta_squared_pm2(f);
    if (cand.beta_squared_pm2) {
      cand.expansion = expand_1212(f.beta < 0 ? f.mirror() : f);
      cand.profile = sign_change_profile(*cand.expansion);
      if (!cand.profile->has_two_consecutive()) report.harmonic_eligible = true;
    }
    report.candidates.push_back(std::move(cand));
  }
  report.agrees_with_claim = n <= 3 || !report.harmonic_eligible;
  return report;
}

FamilyReport non_harmonic_family_check(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "non_harmonic_family_check needs n >= 1");
  FamilyReport r;
  r.n = n;
  r.fraction = Fraction::make(BigInt(2) * n * n + 1, BigInt(2) * n);
  r.beta_squared_minus2 = mod_floor(r.fraction.beta * r.fraction.beta + 2, r.fraction.alpha) == 0;

  using enum Mobius;
  const std::vector<Mobius> C{A, B, S, A, S, B}, D{A, S, B, S, A, B}, F{A, B};
  const int k = n / 2;
  std::vector<Mobius> word;
  std::vector<long long> terms;
  for (int i = 0; i < k; ++i) {
    word.insert(word.end(), C.begin(), C.end());
    terms.insert(terms.end(), {1, 2, -1, 2});
  }
  if (n % 2 == 1) {
    word.insert(word.end(), F.begin(), F.end());
    terms.insert(terms.end(), {1, 2});
  }
  for (int i = 0; i < k; ++i) {
    word.insert(word.end(), D.begin(), D.end());
    terms.insert(terms.end(), {1, -2, 1, 2});
  }
  r.mobius_matches = mobius_compose(word).at_infinity() == r.fraction;
  r.expected = SignedCF(std::vector<BigInt>(terms.begin(), terms.end()));
  r.expansion = expand_1212(r.fraction);
  r.expansion_matches = r.expansion == r.expected && evaluate(r.expected) == r.fraction.value();
  r.crossing_number = fraction_crossing_number(r.fraction);
  r.crossing_number_matches = r.crossing_number == 3 * n;
  r.profile = sign_change_profile(r.expansion);
  r.obstructed = r.profile.has_two_consecutive();
  r.passes = r.beta_squared_minus2 && r.mobius_matches && r.expansion_matches && r.crossing_number_matches &&
             r.obstructed == (n > 1);
  return r;
}

// ---------------------------------------------------------------------------

AnalysisReport analyze(const HarmonicTriple& K) {
  AnalysisReport r;
  r.triple = HarmonicTriple::make(K.a, K.b, K.c);
  r.reduction = reduce_c(r.triple);
  r.crossings = enumerate_crossings(r.triple);
  r.gauss_code = build_gauss_code(r.triple, r.crossings);
  r.crossing_bound = static_cast<int>(r.crossings.size());
  r.alexander = alexander(r.gauss_code);
  r.determinant = determinant(r.alexander);
  r.prediction = predict_family(r.triple);

  const NameTable& names = NameTable::embedded();

  if (std::min({K.a, K.b, K.c}) <= 2) {
    // A T_1 or T_2 coordinate has at most one critical point: one bridge.
    r.classification = Classification::Unknot;
    r.fraction = Fraction{1, 0};
    r.display_fraction = r.fraction;
    r.crossing_number = 0;
    r.name = "0_1";
  } else if (K.a == 3 || K.a == 4) {
    r.conway = read_conway_from_diagram(r.triple, r.crossings);
    r.fraction = fraction_of(*r.conway);
    r.display_fraction = display_fraction(*r.fraction);
    r.crossing_number = fraction_crossing_number(*r.fraction);
    if (r.fraction->alpha == 1) {
      r.classification = Classification::Unknot;
      r.name = "0_1";
    } else {
      r.classification = Classification::TwoBridge;
      if (const KnotRecord* rec = names.lookup_by_fraction(*r.fraction)) r.name = rec->name;
    }
    if (r.fraction->alpha != r.determinant) {
      throw Error(ErrorCode::InternalError, K.to_string() + ": determinant " + r.determinant.str() +
                                                " differs from Schubert alpha " + r.fraction->alpha.str());
    }
  } else {
    NameMatch match = names.lookup_by_alexander(r.alexander, r.crossing_bound);
    if (match.unique()) {
      const KnotRecord* rec = match.record();
      r.classification = Classification::Consistent;
      r.name = rec->name;
      if (rec->fraction) {
        r.fraction = rec->fraction;
        r.display_fraction = display_fraction(*rec->fraction);
        r.fraction_from_table = true;
      }
      r.notes.push_back("Alexander polynomial and determinant match " + rec->name + "; not a proof of isotopy");
    } else if (match.candidates.size() > 1) {
      r.notes.push_back("Alexander polynomial matches several table entries");
    }
  }

  if (r.alexander != LaurentPoly::constant(1)) {
    if (auto q = factor_square(r.alexander); q && *q != LaurentPoly::constant(1)) {
      r.square_root = *q;
      r.notes.push_back("Alexander polynomial is the square of " + q->to_string() + ", as for a connected sum K # K");
    }
  }

  if (r.prediction) {
    const LaurentPoly expected = alexander_of_fraction(r.prediction->conway);
    bool holds = expected == r.alexander && determinant(expected) == r.determinant;
    if (r.prediction->harmonic) {
      holds = holds && alexander(build_gauss_code(*r.prediction->harmonic)) == r.alexander;
    }
    r.prediction_holds = holds;
  }
  return r;
}

std::vector<HarmonicTriple> table_triples(std::int64_t max_ab) {
  std::vector<HarmonicTriple> out;
  for (std::int64_t a = 3; (a - 1) * a <= max_ab; ++a) {
    for (std::int64_t b = a + 1; (a - 1) * (b - 1) <= max_ab; ++b) {
      if (std::gcd(a, b) != 1) continue;
      // Every c > ab has a positive representation, so c < ab.
      for (std::int64_t c = b + 1; c < a * b; ++c) {
        if (std::gcd(c, a * b) != 1) continue;
        if (best_step(a, b, c)) continue;
        out.push_back({a, b, c});
      }
    }
  }
  return out;
}

}  // namespace harmonic
