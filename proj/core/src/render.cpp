#include "harmonic/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "harmonic/error.hpp"

namespace harmonic {

namespace {

struct Point {
  double x, y;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

// Parameter intervals [lo, hi] kept after removing a gap around each cut.
std::vector<std::pair<double, double>> strand_intervals(double lo, double hi, std::vector<std::pair<double, double>> cuts) {
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::pair<double, double>> out;
  double start = lo;
  for (const auto& [c0, c1] : cuts) {
    if (c0 > start) out.emplace_back(start, c0);
    start = std::max(start, c1);
  }
  if (start < hi) out.emplace_back(start, hi);
  return out;
}

class Svg {
 public:
  Svg(double width, double height, const std::string& title) {
    os_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
        << "<title>" << title << "</title>\n";
  }
  void style(double stroke) {
    os_ << "<style>.strand{fill:none;stroke:#1f3a68;stroke-width:" << num(stroke)
        << ";stroke-linejoin:round;stroke-linecap:round}.frame{fill:none;stroke:#999;stroke-width:1}"
           ".sign{font:11px sans-serif;fill:#b03020}</style>\n";
  }
  void path(const std::vector<Point>& pts) {
    if (pts.size() < 2) return;
    os_ << "<path class=\"strand\" d=\"M" << num(pts[0].x) << ' ' << num(pts[0].y);
    for (std::size_t i = 1; i < pts.size(); ++i) os_ << " L" << num(pts[i].x) << ' ' << num(pts[i].y);
    os_ << "\"/>\n";
  }
  void rect(double x, double y, double w, double h) {
    os_ << "<rect class=\"frame\" x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w) << "\" height=\""
        << num(h) << "\"/>\n";
  }
  void sign(Point p, int s) {
    os_ << "<text class=\"sign\" x=\"" << num(p.x + 5) << "\" y=\"" << num(p.y - 5) << "\">" << (s > 0 ? '+' : '-')
        << "</text>\n";
  }
  std::string finish() {
    os_ << "</svg>\n";
    return os_.str();
  }

 private:
  std::ostringstream os_;
};

double fold(double u, double n) {
  double r = std::fmod(u, 2 * n);
  if (r < 0) r += 2 * n;
  return r > n ? 2 * n - r : r;
}

std::int64_t fold(std::int64_t u, std::int64_t n) {
  std::int64_t r = ((u % (2 * n)) + 2 * n) % (2 * n);
  return r > n ? 2 * n - r : r;
}

}  // namespace

std::string render_xy(const HarmonicTriple& K, const RenderOptions& options) {
  const auto crossings = enumerate_crossings(K);
  const double a = static_cast<double>(K.a), b = static_cast<double>(K.b);
  const double half = options.size / 2;
  const double side = options.size + 2 * options.margin;
  auto to_svg = [&](double theta) {
    return Point{options.margin + half * (1 + std::cos(a * theta)), options.margin + half * (1 - std::cos(b * theta))};
  };
  // The curve is walked by θ from π to 0, i.e. t = cos θ increasing; work in
  // φ = π − θ so parameters increase along the walk.
  const double pi = std::numbers::pi;
  std::vector<std::pair<double, double>> cuts;
  for (const auto& x : crossings) {
    const RationalAngle under = x.over_at_t ? (x.s_angle.p() < 0 ? -x.s_angle : x.s_angle) : x.t_angle;
    const double theta = under.radians();
    const double speed = half * std::hypot(a * std::sin(a * theta), b * std::sin(b * theta));
    const double d = options.gap / 2 / std::max(speed, 1e-9);
    cuts.emplace_back(pi - theta - d, pi - theta + d);
  }
  const int samples = options.samples > 0 ? options.samples : static_cast<int>(300 * std::max(a, b));

  Svg svg(side, side, K.to_string());
  svg.style(options.stroke_width);
  for (const auto& [lo, hi] : strand_intervals(0, pi, cuts)) {
    std::vector<Point> pts;
    const int steps = std::max(2, static_cast<int>(std::ceil((hi - lo) / pi * samples)));
    for (int i = 0; i <= steps; ++i) pts.push_back(to_svg(pi - (lo + (hi - lo) * i / steps)));
    svg.path(pts);
  }
  if (options.annotate_signs) {
    for (const auto& x : crossings) svg.sign(to_svg(x.t_angle.radians()), x.writhe_sign);
  }
  return svg.finish();
}

BilliardPath billiard_path(const HarmonicTriple& K) {
  const auto crossings = enumerate_crossings(K);
  BilliardPath path;
  path.width = 2 * K.b;
  path.height = 2 * K.a;
  auto at = [&](std::int64_t u) { return BilliardVertex{u, 2 * fold(u, K.b) - K.b, 2 * fold(u, K.a) - K.a}; };
  for (std::int64_t u = 0; u <= K.a * K.b; ++u) {
    if (u == 0 || u == K.a * K.b || u % K.a == 0 || u % K.b == 0) path.vertices.push_back(at(u));
  }
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const auto& x = crossings[i];
    BilliardCrossing bc;
    bc.index = i;
    bc.u_t = x.k * K.b + x.h * K.a;
    bc.u_s = std::abs(x.k * K.b - x.h * K.a);
    const auto p = at(bc.u_t), q = at(bc.u_s);
    if (p.x != q.x || p.y != q.y) throw Error(ErrorCode::InternalError, "billiard passages of a crossing disagree");
    bc.x = p.x;
    bc.y = p.y;
    bc.over_at_t = x.over_at_t;
    bc.sign = x.writhe_sign;
    path.crossings.push_back(bc);
  }
  return path;
}

std::string render_billiard(const HarmonicTriple& K, const RenderOptions& options) {
  const BilliardPath path = billiard_path(K);
  const double unit = options.size / static_cast<double>(std::max(path.width, path.height));
  const double w = unit * static_cast<double>(path.width), h = unit * static_cast<double>(path.height);
  auto to_svg = [&](double x, double y) {
    return Point{options.margin + unit * (x + static_cast<double>(K.b)),
                 options.margin + unit * (static_cast<double>(K.a) - y)};
  };
  auto at = [&](double u) {
    return to_svg(2 * fold(u, static_cast<double>(K.b)) - static_cast<double>(K.b),
                  2 * fold(u, static_cast<double>(K.a)) - static_cast<double>(K.a));
  };
  // One unit of u moves the point by 2√2 lattice units.
  const double d = options.gap / 2 / (2 * std::numbers::sqrt2 * unit);
  std::vector<std::pair<double, double>> cuts;
  for (const auto& c : path.crossings) {
    const double u = static_cast<double>(c.over_at_t ? c.u_s : c.u_t);
    cuts.emplace_back(u - d, u + d);
  }

  Svg svg(w + 2 * options.margin, h + 2 * options.margin, K.to_string() + " billiard");
  svg.style(options.stroke_width);
  svg.rect(options.margin, options.margin, w, h);
  for (const auto& [lo, hi] : strand_intervals(0, static_cast<double>(K.a * K.b), cuts)) {
    std::vector<Point> pts{at(lo)};
    for (const auto& v : path.vertices) {
      if (static_cast<double>(v.u) > lo && static_cast<double>(v.u) < hi) {
        pts.push_back(to_svg(static_cast<double>(v.x), static_cast<double>(v.y)));
      }
    }
    pts.push_back(at(hi));
    svg.path(pts);
  }
  if (options.annotate_signs) {
    for (const auto& c : path.crossings) svg.sign(to_svg(static_cast<double>(c.x), static_cast<double>(c.y)), c.sign);
  }
  return svg.finish();
}

}  // namespace harmonic
