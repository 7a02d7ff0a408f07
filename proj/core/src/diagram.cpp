#include "harmonic/diagram.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

#include "harmonic/error.hpp"

namespace harmonic {

void GaussCode::validate() const {
  struct Seen {
    int over = 0, under = 0, sign = 0;
  };
  std::map<int, Seen> seen;
  for (const auto& e : entries) {
    if (e.sign != 1 && e.sign != -1) {
      throw Error(ErrorCode::MalformedCode, "crossing " + std::to_string(e.crossing_id) + " has sign " +
                                                std::to_string(e.sign));
    }
    auto& s = seen[e.crossing_id];
    (e.passage == Passage::Over ? s.over : s.under) += 1;
    if (s.sign != 0 && s.sign != e.sign) {
      throw Error(ErrorCode::MalformedCode, "crossing " + std::to_string(e.crossing_id) + " has two signs");
    }
    s.sign = e.sign;
  }
  for (const auto& [id, s] : seen) {
    if (s.over != 1 || s.under != 1) {
      throw Error(ErrorCode::MalformedCode, "crossing " + std::to_string(id) + " needs one over and one under passage");
    }
  }
}

GaussCode GaussCode::reversed() const {
  return GaussCode{{entries.rbegin(), entries.rend()}};
}

GaussCode GaussCode::mirrored() const {
  GaussCode out = *this;
  for (auto& e : out.entries) {
    e.passage = e.passage == Passage::Over ? Passage::Under : Passage::Over;
    e.sign = -e.sign;
  }
  return out;
}

std::string GaussCode::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ' ';
    os << (entries[i].passage == Passage::Over ? 'O' : 'U') << entries[i].crossing_id
       << (entries[i].sign > 0 ? '+' : '-');
  }
  return os.str();
}

SignedCF ConwayForm::to_cf() const {
  std::vector<BigInt> t(terms.begin(), terms.end());
  return SignedCF(std::move(t));
}

std::string ConwayForm::to_string() const {
  std::ostringstream os;
  os << "C(";
  for (std::size_t i = 0; i < terms.size(); ++i) os << (i ? "," : "") << terms[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------

GaussCode build_gauss_code(const HarmonicTriple& K) {
  return build_gauss_code(K, enumerate_crossings(K));
}

GaussCode build_gauss_code(const HarmonicTriple& K, const std::vector<Crossing>& crossings) {
  (void)K;
  GaussCode code;
  code.entries.reserve(2 * crossings.size());
  for (const auto& ev : parameter_events(crossings)) {
    const auto& x = crossings[ev.crossing];
    const bool over = ev.at_t == x.over_at_t;
    code.entries.push_back({static_cast<int>(ev.crossing), over ? Passage::Over : Passage::Under, x.writhe_sign});
  }
  code.validate();
  return code;
}

ConwayForm conway_form_h4(std::int64_t b, std::int64_t c) {
  if (b < 1 || c < 1) throw Error(ErrorCode::InvalidInput, "b and c must be positive");
  if (b % 2 == 0 || c % 2 == 0) {
    throw Error(ErrorCode::ParityError, "b and c must be odd, got (" + std::to_string(b) + ", " + std::to_string(c) + ")");
  }
  if (std::gcd(b, c) != 1) {
    throw Error(ErrorCode::CoprimalityError, "gcd(" + std::to_string(b) + ", " + std::to_string(c) + ") != 1");
  }
  if ((c - b) % 4 == 0) {
    throw Error(ErrorCode::ParityError, "b ≡ c (mod 4) for (" + std::to_string(b) + ", " + std::to_string(c) + ")");
  }
  ConwayForm out;
  for (std::int64_t j = 1; j < b; ++j) {
    int e = sign_sin(RationalAngle((j - b) * (3 * b - c), 4 * b));
    if (e == 0) throw Error(ErrorCode::InternalError, "zero sign in conway_form_h4");
    out.terms.push_back(j % 2 == 1 ? e : 2 * e);
  }
  return out;
}

ConwayForm read_conway_from_diagram(const HarmonicTriple& K) {
  if (K.a != 3 && K.a != 4) {
    throw Error(ErrorCode::UnsupportedBridge, "Conway forms are read only for a = 3 or 4, got " + K.to_string());
  }
  return read_conway_from_diagram(K, enumerate_crossings(K));
}

ConwayForm read_conway_from_diagram(const HarmonicTriple& K, const std::vector<Crossing>& crossings) {
  if (K.a != 3 && K.a != 4) {
    throw Error(ErrorCode::UnsupportedBridge, "Conway forms are read only for a = 3 or 4, got " + K.to_string());
  }
  // Group by x; crossings arrive sorted by decreasing x.
  std::vector<std::vector<const Crossing*>> groups;
  for (const auto& x : crossings) {
    if (groups.empty() || groups.back().front()->x_order != x.x_order) groups.emplace_back();
    groups.back().push_back(&x);
  }
  ConwayForm out;
  if (K.a == 3) {
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (groups[i].size() != 1) throw Error(ErrorCode::InternalError, "a = 3 diagram with stacked crossings");
      out.terms.push_back(i % 2 == 0 ? groups[i][0]->sign : -groups[i][0]->sign);
    }
    return out;
  }
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    const auto& g = *it;
    if (g.size() == 1) {
      if (g[0]->y_level != 0) throw Error(ErrorCode::InternalError, "lone off-axis crossing in a = 4 diagram");
      out.terms.push_back(g[0]->sign);
    } else if (g.size() == 2 && g[0]->y_level == -g[1]->y_level && g[0]->y_level != 0) {
      int d = -(g[0]->sign + g[1]->sign);
      // A zero pair such as in C(1,0,1,2) never occurs in a Chebyshev diagram.
      if (d == 0) throw Error(ErrorCode::InternalError, "zero twist pair in " + K.to_string());
      out.terms.push_back(d);
    } else {
      throw Error(ErrorCode::InternalError, "unexpected crossing group in " + K.to_string());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 4-plat closure of a braid on four strands.

namespace {

struct Generator {
  int left;  // σ_left swaps positions left and left+1 (1-based)
  int sign;  // +1: the strand entering from the top-left goes over
};

std::vector<Generator> plat_word(std::vector<int> terms) {
  // An even-length form is rewritten to odd length without changing the knot
  // or the crossing count: [.., a] = [.., a−1, 1] and [.., −a] = [.., −a+1, −1].
  // A resulting zero term emits no generators, which merges its neighbours.
  if (terms.size() % 2 == 0) {
    int last = terms.back();
    terms.pop_back();
    if (last > 0) {
      terms.push_back(last - 1);
      terms.push_back(1);
    } else {
      terms.push_back(last + 1);
      terms.push_back(-1);
    }
  }
  std::vector<Generator> word;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const int a = terms[j];
    const int s = a > 0 ? 1 : -1;
    for (int r = 0; r < std::abs(a); ++r) {
      if (j % 2 == 0) {
        word.push_back({2, s});
      } else {
        word.push_back({1, -s});
      }
    }
  }
  return word;
}

}  // namespace

GaussCode diagram_from_conway(const ConwayForm& cf) {
  if (cf.terms.empty()) return {};
  for (int t : cf.terms) {
    if (t == 0) throw Error(ErrorCode::ZeroTerm, "zero term in " + cf.to_string());
  }
  const std::vector<Generator> word = plat_word(cf.terms);
  const int levels = static_cast<int>(word.size());
  static constexpr std::array<int, 5> cap{0, 2, 1, 4, 3};

  struct Pass {
    int level;
    bool over;
    int dx, dy;
  };
  std::vector<Pass> passes;
  int pos = 1;
  bool down = true;
  // Caps join positions (1,2) and (3,4) at both ends; start at the top of 1.
  while (true) {
    if (down) {
      for (int l = 0; l < levels; ++l) {
        const auto& g = word[static_cast<std::size_t>(l)];
        if (pos != g.left && pos != g.left + 1) continue;
        const bool first = pos == g.left;  // strand running top-left to bottom-right
        passes.push_back({l, g.sign > 0 ? first : !first, first ? 1 : -1, -1});
        pos = first ? g.left + 1 : g.left;
      }
    } else {
      for (int l = levels - 1; l >= 0; --l) {
        const auto& g = word[static_cast<std::size_t>(l)];
        if (pos != g.left && pos != g.left + 1) continue;
        const bool first = pos == g.left + 1;
        passes.push_back({l, g.sign > 0 ? first : !first, first ? -1 : 1, 1});
        pos = first ? g.left : g.left + 1;
      }
    }
    pos = cap[static_cast<std::size_t>(pos)];
    down = !down;
    if (down && pos == 1) break;
  }
  if (static_cast<int>(passes.size()) != 2 * levels) {
    throw Error(ErrorCode::NotAKnot, cf.to_string() + " closes to a link");
  }

  std::vector<std::array<int, 4>> dirs(static_cast<std::size_t>(levels));  // over dx,dy then under dx,dy
  for (const auto& p : passes) {
    auto& d = dirs[static_cast<std::size_t>(p.level)];
    if (p.over) {
      d[0] = p.dx;
      d[1] = p.dy;
    } else {
      d[2] = p.dx;
      d[3] = p.dy;
    }
  }
  GaussCode code;
  for (const auto& p : passes) {
    const auto& d = dirs[static_cast<std::size_t>(p.level)];
    const int cross = d[0] * d[3] - d[1] * d[2];
    code.entries.push_back({p.level, p.over ? Passage::Over : Passage::Under, cross > 0 ? 1 : -1});
  }
  code.validate();
  return code;
}

}  // namespace harmonic
