#ifndef DDF_FAMILIES_HPP
#define DDF_FAMILIES_HPP

#include <vector>

#include "ddf/exact.hpp"
#include "ddf/objects.hpp"
#include "ddf/serialize.hpp"

namespace ddf {

// Hard ceiling on exhaustive enumeration; 15!! objects is the practical
// limit on a desktop.
inline constexpr int kDefaultEnumerationBound = 8;

// Enumerates every object of the family at size n, each exactly once, in
// numeric-lexicographic order of the canonical key. Throws std::domain_error
// for unknown parameters and std::length_error when n exceeds the bound.
std::vector<CombObject> enumerate(const FamilySpec& spec, int n,
                                  int bound = kDefaultEnumerationBound);

// Exact cardinality by exhaustion.
ExactInt count_by_enumeration(const FamilySpec& spec, int n,
                              int bound = kDefaultEnumerationBound);

// Typed enumerators (same order guarantee).
std::vector<TrapezoidalWord> enumerate_trapezoidal(int n);
std::vector<SymmetricTrapezoidalWord> enumerate_symmetric_trapezoidal(int n);
std::vector<PerfectMatching> enumerate_matchings(int n);
std::vector<StirlingPermutation> enumerate_stirling(int n);
std::vector<IncreasingOrderedTree> enumerate_increasing_trees(int n);
std::vector<LeafLabeled02Tree> enumerate_02_trees(int n);
std::vector<HeightLabeledDyckPath> enumerate_hl_dyck(int n);
std::vector<HeightLabeledOrderedTree> enumerate_hl_ordered_trees(int n);
std::vector<OverhangPath> enumerate_overhang(int n);
std::vector<BicoloredUDFPath> enumerate_udf(int n, int end_height);
std::vector<UDWalk> enumerate_ud_walks(int n);

// Unlabeled Dyck paths of n up/downsteps, lexicographic with U < D.
std::vector<std::string> enumerate_dyck_words(int n);

// Alternate construction routes. The primary enumerators above build each
// object by its one-step insertion recurrence where one exists; these build
// the same sets by direct search and must agree with them.
std::vector<StirlingPermutation> enumerate_stirling_bruteforce(int n);
std::vector<IncreasingOrderedTree> enumerate_increasing_trees_bruteforce(int n);
std::vector<HeightLabeledDyckPath> enumerate_hl_dyck_bruteforce(int n);

}  // namespace ddf

#endif
