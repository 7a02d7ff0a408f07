#pragma once

#include <optional>
#include <vector>

#include "harmonic/diagram.hpp"
#include "harmonic/laurent.hpp"

namespace harmonic {

struct WirtingerRelation {
  int over_arc = 0;
  int incoming_arc = 0;  ///< under-arc ending at the crossing
  int outgoing_arc = 0;  ///< under-arc leaving it
  int sign = 0;
};

/// Arcs run from one under-passage to the next. Relations are listed in
/// increasing crossing id.
struct WirtingerPresentation {
  int arc_count = 0;
  std::vector<WirtingerRelation> relations;
};

/// Throws MalformedCode for an invalid code.
WirtingerPresentation wirtinger(const GaussCode& gc);

/// Fox matrix of the presentation with its last row and column removed,
/// determinant by fraction-free elimination over Z[t]; normalized with
/// minimal exponent 0 and positive leading coefficient.
LaurentPoly alexander(const GaussCode& gc);
LaurentPoly alexander(const WirtingerPresentation& w);

/// |Δ(−1)|.
BigInt determinant(const GaussCode& gc);
BigInt determinant(const LaurentPoly& alexander_poly);

/// Δ of C(a1, ..., an) through diagram_from_conway; shares no code with the
/// Chebyshev diagram builder.
LaurentPoly alexander_of_fraction(const ConwayForm& cf);

/// q with q² = ±p, normalized, if one exists over Z.
std::optional<LaurentPoly> factor_square(const LaurentPoly& p);

}  // namespace harmonic
