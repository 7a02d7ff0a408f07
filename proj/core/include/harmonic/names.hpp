#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "harmonic/cfrac.hpp"
#include "harmonic/laurent.hpp"

namespace harmonic {

struct KnotRecord {
  std::string name;  ///< Rolfsen / Hoste–Thistlethwaite style, e.g. "6_3", "12n356"
  int crossings = 0;
  BigInt determinant;
  LaurentPoly alexander;            ///< normalized
  std::optional<Fraction> fraction;  ///< Schubert fraction for two-bridge knots
  std::string source;               ///< harmonic knots carrying this name
};

struct NameMatch {
  std::vector<const KnotRecord*> candidates;

  bool unique() const { return candidates.size() == 1; }
  /// The record when the match is unique.
  const KnotRecord* record() const { return unique() ? candidates.front() : nullptr; }
};

/// Text table, one record per line:
///   name|crossings|determinant|c0,c1,...|alpha/beta or -|source
/// Blank lines and lines starting with '#' are skipped; the first
/// "@version N" line sets the version.
class NameTable {
 public:
  /// Throws InvalidInput naming the offending line.
  static NameTable parse(std::string_view text);
  /// The table compiled into the library.
  static const NameTable& embedded();

  int version() const noexcept { return version_; }
  const std::vector<KnotRecord>& records() const noexcept { return records_; }
  const KnotRecord* find(std::string_view name) const;

  /// Records with this Δ (normalized before comparing) and determinant whose
  /// crossing number does not exceed `crossing_bound`.
  NameMatch lookup_by_alexander(const LaurentPoly& delta, int crossing_bound) const;
  /// The two-bridge record equivalent to `f` up to mirror image.
  const KnotRecord* lookup_by_fraction(const Fraction& f) const;

 private:
  int version_ = 0;
  std::vector<KnotRecord> records_;
};

namespace detail {
extern const std::string_view kEmbeddedNameTable;
}

}  // namespace harmonic
