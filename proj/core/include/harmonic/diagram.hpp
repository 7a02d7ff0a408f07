#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harmonic/cfrac.hpp"
#include "harmonic/chebgeom.hpp"

namespace harmonic {

enum class Passage { Over, Under };

struct GaussEntry {
  int crossing_id = 0;
  Passage passage = Passage::Over;
  int sign = 0;  ///< oriented crossing sign, repeated on both passages

  friend bool operator==(const GaussEntry&, const GaussEntry&) = default;
};

/// Closed traversal of a knot diagram. The last entry is followed by the
/// first one; for harmonic knots the two open ends meet at infinity along an
/// arc with no crossings.
struct GaussCode {
  std::vector<GaussEntry> entries;

  std::size_t crossing_count() const { return entries.size() / 2; }

  /// Throws MalformedCode unless every id occurs once over and once under
  /// with one consistent ±1 sign.
  void validate() const;

  /// Same knot traversed backwards (crossing signs are unchanged).
  GaussCode reversed() const;
  /// Mirror image: passages swapped and signs negated.
  GaussCode mirrored() const;
  std::string to_string() const;

  friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

struct ConwayForm {
  std::vector<int> terms;

  SignedCF to_cf() const;
  std::string to_string() const;

  friend bool operator==(const ConwayForm&, const ConwayForm&) = default;
};

/// Gauss code of H(a,b,c) in increasing curve parameter. Crossing ids index
/// into enumerate_crossings(K).
GaussCode build_gauss_code(const HarmonicTriple& K);
GaussCode build_gauss_code(const HarmonicTriple& K, const std::vector<Crossing>& crossings);

/// [e1, 2e2, e3, 2e4, ..., e_{b−2}, 2e_{b−1}] with e_j = sign sin((j − b)θ),
/// θ = (3b − c)π/(4b). Needs b ≥ 3 odd, c odd, gcd(b, c) = 1, b ≢ c (mod 4).
ConwayForm conway_form_h4(std::int64_t b, std::int64_t c);

/// Conway form read off the Chebyshev diagram, for a = 3 or 4.
/// a = 4 reads x-groups left to right: an axis crossing gives its twist sign,
/// a symmetric off-axis pair gives minus the sum of its two signs. a = 3 reads
/// right to left with the twist sign negated at even positions.
ConwayForm read_conway_from_diagram(const HarmonicTriple& K);
ConwayForm read_conway_from_diagram(const HarmonicTriple& K, const std::vector<Crossing>& crossings);

/// Standard 4-plat diagram of C(a1, ..., an). Throws ZeroTerm on a zero
/// term and NotAKnot when the plat closure has two components.
GaussCode diagram_from_conway(const ConwayForm& cf);

}  // namespace harmonic
