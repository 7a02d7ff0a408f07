#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harmonic/exact.hpp"

namespace harmonic {

/// Parameters of the harmonic knot x = T_a(t), y = T_b(t), z = T_c(t).
/// Only positivity and pairwise coprimality are enforced; a < b is the usual
/// ordering but canonical forms such as H(4, 3, 5) need the other one.
struct HarmonicTriple {
  std::int64_t a = 0, b = 0, c = 0;

  /// Throws InvalidTriple naming the offending pair.
  static HarmonicTriple make(std::int64_t a, std::int64_t b, std::int64_t c);

  std::int64_t crossing_count() const { return (a - 1) * (b - 1) / 2; }
  std::string to_string() const;

  friend bool operator==(const HarmonicTriple&, const HarmonicTriple&) = default;
  friend auto operator<=>(const HarmonicTriple&, const HarmonicTriple&) = default;
};

/// A double point of the plane curve, reached at t = cos τ and s = cos σ
/// with τ = (k/a + h/b)π and σ = (k/a − h/b)π.
struct Crossing {
  std::int64_t h = 0;
  std::int64_t k = 0;
  RationalAngle t_angle{0, 1};  ///< τ
  RationalAngle s_angle{0, 1};  ///< σ, signed; the parameter is cos|σ|
  RationalAngle x_angle{0, 1};  ///< x = cos(x_angle)
  RationalAngle y_angle{0, 1};  ///< y = cos(y_angle)
  int sign = 0;                 ///< +1 for a right twist (D > 0)
  int writhe_sign = 0;          ///< oriented sign along increasing t
  bool over_at_t = false;       ///< z(t) > z(s)
  int x_order = 0;              ///< dense rank by decreasing x
  int y_level = 0;              ///< 0 on the x-axis, ±1, ±2, ... outward by |y|
};

/// Sign of D = (z(t) − z(s))·x′(t)·y′(t) as an exact product of sine signs.
/// Throws DegenerateSign if a factor vanishes, InvalidInput for a bad (h, k).
int crossing_sign(const HarmonicTriple& K, std::int64_t h, std::int64_t k);

/// True iff z(t) − z(s) > 0, i.e. the strand at parameter t is on top.
bool over_strand(const HarmonicTriple& K, std::int64_t h, std::int64_t k);

/// Oriented crossing sign of the diagram traversed by increasing t.
int writhe_sign(const HarmonicTriple& K, std::int64_t h, std::int64_t k);

/// All (a−1)(b−1)/2 crossings sorted by decreasing x (ties: decreasing y).
std::vector<Crossing> enumerate_crossings(const HarmonicTriple& K);

/// One pass of the curve through a crossing.
struct ParameterEvent {
  RationalAngle angle{0, 1};  ///< the parameter is cos(angle), angle in (0, π)
  std::size_t crossing = 0;   ///< index into enumerate_crossings()
  bool at_t = false;          ///< true for the t-passage, false for the s-passage
};

/// Both passages of every crossing, in increasing curve parameter.
std::vector<ParameterEvent> parameter_events(const std::vector<Crossing>& crossings);

}  // namespace harmonic
