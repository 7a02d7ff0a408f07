#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harmonic/chebgeom.hpp"

namespace harmonic {

struct RenderOptions {
  double size = 480;           ///< px along the longer side of the drawing area
  double margin = 24;          ///< px around it
  double stroke_width = 2.5;
  double gap = 12;             ///< px removed from the under-strand at each crossing
  bool annotate_signs = false;  ///< print the oriented sign next to each crossing
  int samples = 0;             ///< curve samples for render_xy; 0 picks 300·max(a, b)
};

/// The plane curve (T_a(t), T_b(t)) for t in [−1, 1], cut into strands at
/// the under-passages.
std::string render_xy(const HarmonicTriple& K, const RenderOptions& options = {});

struct BilliardVertex {
  std::int64_t u = 0;  ///< parameter t = cos(uπ/(ab))
  std::int64_t x = 0;
  std::int64_t y = 0;
};

struct BilliardCrossing {
  std::size_t index = 0;  ///< into enumerate_crossings()
  std::int64_t u_t = 0;   ///< kb + ha
  std::int64_t u_s = 0;   ///< |kb − ha|
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool over_at_t = false;
  int sign = 0;  ///< oriented sign
};

/// Image of the diagram under (x, y) ↦ (b·F(x), a·F(y)), F(x) = (2/π)·arccos(x) − 1.
/// With θ = uπ/(ab) the point is (2g_b(u) − b, 2g_a(u) − a), g_n folding u mod 2n
/// into [0, n]; vertices sit at multiples of a or b.
struct BilliardPath {
  std::int64_t width = 0;   ///< 2b
  std::int64_t height = 0;  ///< 2a
  std::vector<BilliardVertex> vertices;
  std::vector<BilliardCrossing> crossings;
};

BilliardPath billiard_path(const HarmonicTriple& K);

std::string render_billiard(const HarmonicTriple& K, const RenderOptions& options = {});

}  // namespace harmonic
