#include "harmonic/names.hpp"

#include <cctype>

#include "harmonic/error.hpp"
#include "harmonic/invariants.hpp"

namespace harmonic {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = s.find(sep, start);
    out.push_back(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) return out;
    start = end + 1;
  }
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

BigInt parse_int(std::string_view s, std::size_t line) {
  s = strip(s);
  std::string text(s);
  bool digits = !text.empty();
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!(std::isdigit(static_cast<unsigned char>(text[i])) || (i == 0 && text[i] == '-' && text.size() > 1))) digits = false;
  }
  if (!digits) {
    throw Error(ErrorCode::InvalidInput, "name table line " + std::to_string(line) + ": bad integer '" + text + "'");
  }
  return BigInt(text);
}

}  // namespace

NameTable NameTable::parse(std::string_view text) {
  NameTable table;
  std::size_t line_no = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = strip(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("@version")) {
      table.version_ = static_cast<int>(parse_int(line.substr(8), line_no));
      continue;
    }
    auto fields = split(line, '|');
    if (fields.size() != 6) {
      throw Error(ErrorCode::InvalidInput, "name table line " + std::to_string(line_no) + ": expected 6 fields");
    }
    KnotRecord r;
    r.name = std::string(strip(fields[0]));
    r.crossings = static_cast<int>(parse_int(fields[1], line_no));
    r.determinant = parse_int(fields[2], line_no);
    std::vector<BigInt> coeffs;
    for (auto c : split(fields[3], ',')) coeffs.push_back(parse_int(c, line_no));
    r.alexander = LaurentPoly(std::move(coeffs)).normalized();
    if (determinant(r.alexander) != r.determinant) {
      throw Error(ErrorCode::InvalidInput, "name table line " + std::to_string(line_no) + ": |Δ(−1)| != determinant");
    }
    std::string_view frac = strip(fields[4]);
    if (frac != "-") {
      auto parts = split(frac, '/');
      if (parts.size() != 2) {
        throw Error(ErrorCode::InvalidInput, "name table line " + std::to_string(line_no) + ": bad fraction");
      }
      r.fraction = Fraction::make(parse_int(parts[0], line_no), parse_int(parts[1], line_no));
      if (r.fraction->alpha != r.determinant) {
        throw Error(ErrorCode::InvalidInput, "name table line " + std::to_string(line_no) + ": alpha != determinant");
      }
    }
    r.source = std::string(strip(fields[5]));
    if (table.find(r.name) != nullptr) {
      throw Error(ErrorCode::InvalidInput, "name table line " + std::to_string(line_no) + ": duplicate name " + r.name);
    }
    table.records_.push_back(std::move(r));
  }
  return table;
}

const NameTable& NameTable::embedded() {
  static const NameTable table = parse(detail::kEmbeddedNameTable);
  return table;
}

const KnotRecord* NameTable::find(std::string_view name) const {
  for (const auto& r : records_) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

NameMatch NameTable::lookup_by_alexander(const LaurentPoly& delta, int crossing_bound) const {
  NameMatch match;
  const LaurentPoly key = delta.normalized();
  for (const auto& r : records_) {
    if (r.crossings <= crossing_bound && r.alexander == key) match.candidates.push_back(&r);
  }
  return match;
}

const KnotRecord* NameTable::lookup_by_fraction(const Fraction& f) const {
  for (const auto& r : records_) {
    if (r.fraction && r.fraction->alpha == f.alpha && two_bridge_equivalent(*r.fraction, f, true)) return &r;
  }
  return nullptr;
}

}  // namespace harmonic
