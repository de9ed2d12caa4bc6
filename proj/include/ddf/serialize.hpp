#ifndef DDF_SERIALIZE_HPP
#define DDF_SERIALIZE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddf/objects.hpp"

namespace ddf {

// Family identifiers. Parametrized families (bicolored UDF paths ending at
// height r) carry the parameter in the id, e.g. "udf-bicolored:1".
enum class Family {
  kTrapezoidal,
  kSymmetricTrapezoidal,
  kPerfectMatching,
  kStirlingPermutation,
  kIncreasingOrderedTree,
  kLeafLabeled02Tree,
  kHeightLabeledDyckPath,
  kHeightLabeledOrderedTree,
  kOverhangPath,
  kBicoloredUDF,
  kUDWalk,
};

struct FamilySpec {
  Family family;
  int param = 0;  // end height r for udf-bicolored; unused otherwise
};

// Parses a family id ("trapezoidal", "stirling", "udf-bicolored:2", ...).
std::optional<FamilySpec> parse_family(const std::string& id);
std::string family_id(const FamilySpec& spec);
Family family_of(const CombObject& o);

// The nine families counted by (2n-1)!!.
std::vector<FamilySpec> core_families();

// Canonical integer encoding. Enumeration order is numeric-lexicographic on
// this key; it is a faithful encoding, so equal keys mean equal objects.
std::vector<std::int64_t> canonical_key(const CombObject& o);

// One-line text form. Word-like objects print as concatenated digits when
// every entry is a single digit, comma-separated otherwise; matchings print
// as "a b/..." pairs ("ab/..." when 2n <= 9); trees print their standard
// edge list; labeled paths print steps plus label list.
std::string canonical_text(const CombObject& o);

// JSON round trip (schema documented in docs/formats.md).
std::string to_json(const CombObject& o);
std::optional<CombObject> from_json(const std::string& json_text);

// CLI convenience: parse either JSON or the compact text form of the family.
std::optional<CombObject> parse_object(const FamilySpec& spec,
                                       const std::string& text);

}  // namespace ddf

#endif
