#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "harmonic/cfrac.hpp"
#include "harmonic/chebgeom.hpp"
#include "harmonic/diagram.hpp"
#include "harmonic/laurent.hpp"

namespace harmonic {

/// c = λa + μb (λ, μ > 0) replaced by |λa − μb|; every step is a mirror.
struct ReductionStep {
  std::int64_t from_c = 0;
  std::int64_t to_c = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;
  bool mirrored = true;
};

struct Reduction {
  std::vector<ReductionStep> steps;
  HarmonicTriple reduced;
  bool mirrored = false;  ///< H(original) is the mirror of H(reduced)
};

/// Repeats the step with the smallest resulting c′ (ties: smallest λ) until
/// c has no positive representation.
Reduction reduce_c(const HarmonicTriple& K);

/// Unique representative H(4, b′, c′), b′ < c′ < 3b′, b′ ≢ c′ (mod 4).
struct CanonicalH4 {
  std::int64_t b_prime = 1;
  std::int64_t c_prime = 1;
  bool mirrored = false;  ///< H(4, b, c) is the mirror of H(4, b′, c′)
  bool unknot = false;    ///< reduction reached b′ = 1
  ConwayForm conway;      ///< conway_form_h4(b′, c′)
  Fraction fraction;      ///< value of `conway`, the Schubert fraction of H(4, b′, c′)
  std::int64_t crossing_number = 0;

  /// Schubert fraction of the input H(4, b, c).
  Fraction input_fraction() const { return mirrored ? fraction.mirror() : fraction; }
};

/// Throws InvalidInput unless b, c are odd, positive, coprime and distinct.
CanonicalH4 canonical_h4(std::int64_t b, std::int64_t c);

/// Known isotopy for a family member; a claim to be
/// checked against invariants, not a result.
struct ExpectedIdentity {
  std::optional<HarmonicTriple> harmonic;  ///< expected H(4, ., .) when the family has one
  ConwayForm conway;                       ///< expected two-bridge Conway form
  std::string statement;
};

std::optional<ExpectedIdentity> predict_family(const HarmonicTriple& K);

struct TwistCandidate {
  Fraction fraction;
  bool beta_squared_pm2 = false;
  std::optional<SignedCF> expansion;  ///< of the positive representative, when β² ≡ ±2
  std::optional<SignChangeProfile> profile;
};

struct TwistKnotReport {
  int n = 0;
  Fraction fraction;  ///< value of C(n, 2)
  std::vector<TwistCandidate> candidates;
  bool harmonic_eligible = false;  ///< some candidate passes β² ≡ ±2 with no two consecutive sign changes
  bool agrees_with_claim = false;  ///< not eligible whenever n > 3
};

/// Twist knot C(n, 2): test the even-β fractions (2n+1)/2 and (2n+1)/(−n)
/// or (2n+1)/(n+1) for the H(4, b, c) signature.
TwistKnotReport twist_knot_check(int n);

struct FamilyReport {
  int n = 0;
  Fraction fraction;  ///< (2n² + 1)/(2n)
  bool beta_squared_minus2 = false;
  bool mobius_matches = false;  ///< C^k D^k(∞) or C^k F D^k(∞) equals the fraction
  SignedCF expected;            ///< the expansion built from the Möbius word
  SignedCF expansion;           ///< expand_1212 of the fraction
  bool expansion_matches = false;
  BigInt crossing_number;
  bool crossing_number_matches = false;  ///< = 3n
  SignChangeProfile profile;
  bool obstructed = false;  ///< two consecutive sign changes
  bool passes = false;      ///< every check holds and obstructed == (n > 1)
};

/// S(n + 1/(2n)) is not of the form H(4, b, c) for n > 1.
FamilyReport non_harmonic_family_check(int n);

enum class Classification {
  Unknot,        ///< a ≤ 2, or a two-bridge reading with α = 1
  TwoBridge,     ///< a ∈ {3, 4}: Schubert fraction read from the diagram
  Consistent,    ///< a ≥ 5: Δ matches a named knot; not a proof
  Unidentified,
};

std::string_view to_string(Classification c);

struct AnalysisReport {
  HarmonicTriple triple;
  Reduction reduction;
  std::vector<Crossing> crossings;
  GaussCode gauss_code;
  std::optional<ConwayForm> conway;       ///< a ∈ {3, 4}
  std::optional<Fraction> fraction;       ///< raw Schubert fraction (mirror-sensitive)
  std::optional<Fraction> display_fraction;
  bool fraction_from_table = false;       ///< a ≥ 5: taken from the matched name record
  std::optional<BigInt> crossing_number;  ///< exact for two-bridge readings
  int crossing_bound = 0;                 ///< crossings in the Chebyshev diagram
  LaurentPoly alexander;
  BigInt determinant;
  std::optional<std::string> name;
  Classification classification = Classification::Unidentified;
  std::optional<LaurentPoly> square_root;  ///< Δ = q², q ≠ 1: likely a connected sum K # K
  std::optional<ExpectedIdentity> prediction;
  std::optional<bool> prediction_holds;    ///< Δ and determinant match the prediction
  std::vector<std::string> notes;
};

AnalysisReport analyze(const HarmonicTriple& K);

/// 3 ≤ a < b < c, gcd(a, b) = 1, (a−1)(b−1) ≤ max_ab, gcd(c, ab) = 1 and
/// c ≠ λa + μb with λ, μ > 0; sorted by (a, b, c).
std::vector<HarmonicTriple> table_triples(std::int64_t max_ab = 30);

/// Fraction of a Conway form, with 1/0 when it evaluates to ∞.
Fraction fraction_of(const ConwayForm& cf);

}  // namespace harmonic
