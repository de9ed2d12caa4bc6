#ifndef DDF_STATISTICS_HPP
#define DDF_STATISTICS_HPP

#include <map>
#include <string>
#include <vector>

#include "ddf/exact.hpp"
#include "ddf/families.hpp"
#include "ddf/objects.hpp"
#include "ddf/serialize.hpp"

namespace ddf {

// Registry entry binding a statistic id to the family it evaluates on.
// Parametrized statistics carry their parameter in the id, e.g.
// "low-match-count:1" (pairs with both entries <= n+1).
struct StatisticDescriptor {
  std::string id;
  std::string family;  // family id the statistic is defined on
  std::string description;
};

const std::vector<StatisticDescriptor>& statistic_registry();

// Family a statistic id evaluates on (resolves parametrized ids).
FamilySpec statistic_family(const std::string& stat_id);

// Value of the statistic on one object. Throws std::invalid_argument on a
// family mismatch or unknown id.
long evaluate(const std::string& stat_id, const CombObject& object);

// Exact counts keyed by statistic value tuples.
struct DistributionTable {
  int n = 0;
  std::map<std::vector<long>, ExactInt> counts;

  ExactInt total() const;
};

DistributionTable distribution(const std::string& stat_id, int n,
                               int bound = kDefaultEnumerationBound);

// Joint counts from a single enumeration pass; all statistics must share a
// family.
DistributionTable joint_distribution(const std::vector<std::string>& stat_ids,
                                     int n,
                                     int bound = kDefaultEnumerationBound);

// Rows sorted ascending by value tuple.
std::string distribution_csv(const DistributionTable& table);
std::string distribution_json(const DistributionTable& table);

}  // namespace ddf

#endif
