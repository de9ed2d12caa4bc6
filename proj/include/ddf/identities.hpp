#ifndef DDF_IDENTITIES_HPP
#define DDF_IDENTITIES_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ddf/exact.hpp"
#include "ddf/families.hpp"

namespace ddf {

// One identity row: summand values keyed by (k) or (k,j); zero terms omitted.
using IdentityRow = std::map<std::vector<long>, ExactInt>;

// How an identity's array is realized by a statistic: the counted objects at
// statistic tuple v land in summand cell remap(v, n).
struct Interpretation {
  std::vector<std::string> stats;
  int param = 0;  // which identity parameter this interpretation belongs to
  std::function<std::vector<long>(const std::vector<long>&, int)> remap;  // optional
};

struct Identity {
  std::string id;
  std::string description;
  int n_min = 1;
  std::vector<int> params{0};  // r or m sweep; {0} when unparametrized
  std::function<bool(int n, int param)> defined;  // optional extra domain guard
  std::function<IdentityRow(int n, int param)> summand_row;
  std::function<ExactInt(int n, int param)> rhs;
  // When set, the row is grouped by its first key component and each group
  // must match this instead of the plain total.
  std::function<ExactInt(int n, long k, int param)> rhs_group;
  // Extra per-n formula consistency check; returns empty string on success.
  std::function<std::string(int n, int param)> extra_check;
  std::vector<Interpretation> interpretations;
};

struct VerificationReport {
  std::string id;
  std::string layer;
  bool pass = true;
  std::string witness;  // first mismatch, when pass is false
};

const std::vector<Identity>& identity_registry();
const Identity& identity(const std::string& id);

// Recurrence registry: each entry re-tabulates an identity's array from its
// recurrence and must reproduce the summand exactly.
struct RecurrenceEntry {
  std::string id;
  std::string identity_id;
  int param = 0;
  std::function<IdentityRow(int n)> rows;
};

const std::vector<RecurrenceEntry>& recurrence_registry();

// Layer (a): summand sums against the closed right-hand side, n <= n_max.
VerificationReport verify_formula(const std::string& id, int n_max);

// Layer (b): recurrence tabulation against the summand, n <= n_max.
VerificationReport verify_recurrence(const std::string& rec_id, int n_max);

// Layer (c): enumeration distributions against the summand, n <= n_max.
VerificationReport verify_combinatorial(const std::string& id, int n_max,
                                        int bound = kDefaultEnumerationBound);

// The two-binomial sum equal to m!(2n+2m)!/(n!(2m)!(n+m)!); throws
// std::logic_error if the two sides ever disagree. Returns the common value.
ExactInt gessel_integer_check(long m, long n);

}  // namespace ddf

#endif
