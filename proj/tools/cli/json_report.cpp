#include <limits>

#include "commands.hpp"

namespace harmonic::cli {

namespace {

// Integers that fit in 64 bits are numbers; anything larger stays exact as a string.
nlohmann::json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

nlohmann::json fraction(const std::optional<Fraction>& f) {
  if (!f) return nullptr;
  return {{"alpha", big(f->alpha)}, {"beta", big(f->beta)}};
}

}  // namespace

nlohmann::json to_json(const AnalysisReport& r) {
  using nlohmann::json;
  json j;
  j["triple"] = {r.triple.a, r.triple.b, r.triple.c};

  json reductions = json::array();
  for (const auto& s : r.reduction.steps) {
    reductions.push_back({{"from_c", s.from_c}, {"to_c", s.to_c}, {"mirrored", s.mirrored}, {"lambda", s.lambda}, {"mu", s.mu}});
  }
  j["reductions"] = reductions;

  json crossings = json::array();
  for (const auto& x : r.crossings) {
    crossings.push_back({{"h", x.h}, {"k", x.k}, {"sign", x.sign}, {"over_at_t", x.over_at_t}, {"writhe_sign", x.writhe_sign}});
  }
  j["crossings"] = crossings;

  json gauss = json::array();
  for (const auto& e : r.gauss_code.entries) {
    gauss.push_back({{"id", e.crossing_id}, {"passage", e.passage == Passage::Over ? "O" : "U"}, {"sign", e.sign}});
  }
  j["gauss_code"] = gauss;

  j["conway"] = r.conway ? json(r.conway->terms) : json(nullptr);
  j["fraction"] = fraction(r.fraction);
  j["crossing_number"] = r.crossing_number ? big(*r.crossing_number) : json(nullptr);
  json alex = json::array();
  for (const auto& c : r.alexander.coefficients()) alex.push_back(big(c));
  j["alexander"] = alex;
  j["determinant"] = big(r.determinant);
  j["name"] = r.name ? json(*r.name) : json(nullptr);

  j["classification"] = std::string(to_string(r.classification));
  j["display_fraction"] = fraction(r.display_fraction);
  j["fraction_from_table"] = r.fraction_from_table;
  j["crossing_bound"] = r.crossing_bound;
  if (r.prediction) {
    j["prediction"] = {{"statement", r.prediction->statement},
                       {"conway", r.prediction->conway.terms},
                       {"holds", r.prediction_holds.value_or(false)}};
  }
  j["notes"] = r.notes;
  return j;
}

}  // namespace harmonic::cli
