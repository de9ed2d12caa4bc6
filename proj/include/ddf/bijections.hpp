#ifndef DDF_BIJECTIONS_HPP
#define DDF_BIJECTIONS_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddf/objects.hpp"

namespace ddf {

// Word over the doubled alphabet {v_Y, v_N}: letter i with subscript Y has
// value <= 1 + #N-subscripts before it, with subscript N value <=
// 2i-2 - #N-subscripts before it. The first letter is 1_Y. There are
// (2n-1)!! such words of length n.
struct CodingWord {
  std::vector<std::pair<int, bool>> letters;  // (value, is_Y)
};

ValidationReport validate(const CodingWord& w);
std::vector<CodingWord> enumerate_coding_words(int n);
std::string coding_word_text(const CodingWord& w);
std::optional<CodingWord> parse_coding_word(const std::string& text);

// Tagged element of the disjoint union V (vertex labels) + E (edge
// positions) used by the rightmost-path split.
struct SplitTag {
  int value = 0;
  bool is_vertex = false;
};

struct SplitPair {
  std::vector<SplitTag> x;   // k tags, vertex tags sorted before edge tags
  IncreasingOrderedTree t0;  // standard tree of size n-k
};

// Output of the LR-minima split: a subset of [n-k] (as ranks of non-minima
// values) and a permutation of [n] with k left-to-right minima.
struct LRSplit {
  std::vector<int> subset;
  std::vector<int> tau;
};

// Clockwise walkaround: delete the root label, move labels to parent edges,
// record each edge's label at both visits. Standard trees only.
StirlingPermutation janson(const IncreasingOrderedTree& tree);
IncreasingOrderedTree janson_inverse(const StirlingPermutation& perm);

// Opens the tree out into a path; non-root vertices become upstep tops at
// the same height and keep their labels.
HeightLabeledDyckPath accordion(const HeightLabeledOrderedTree& tree);
HeightLabeledOrderedTree accordion_inverse(const HeightLabeledDyckPath& path);

// Ordinates of the upstep tops, in path order.
TrapezoidalWord overhang_to_trapezoidal(const OverhangPath& path);
OverhangPath overhang_from_trapezoidal(const TrapezoidalWord& word);

// a = upstep positions; b(i) selected from the decreasing downstep-position
// list by the label h(i), consuming entries from i = n downward.
PerfectMatching hldyck_to_matching(const HeightLabeledDyckPath& path);
HeightLabeledDyckPath hldyck_from_matching(const PerfectMatching& m);

// Cut-and-paste removal of the first k edges of the rightmost path,
// yielding a k-subset of V+E and a standard tree of size n-k.
SplitPair rightpath_split(const IncreasingOrderedTree& tree, int k);
IncreasingOrderedTree rightpath_split_inverse(const SplitPair& pair);

// Trees with rightmost path >= k onto size-(n+1) trees whose root has k+1
// children increasing left to right.
IncreasingOrderedTree rightpath_to_rootchildren(
    const IncreasingOrderedTree& tree, int k);
std::pair<IncreasingOrderedTree, int> rootchildren_to_rightpath(
    const IncreasingOrderedTree& tree);

// Builds the tree whose fertility at vertex i-1 is the number of upsteps
// immediately preceding the i-th downstep; the matching upstep's label
// picks which unlabeled leaf (walkaround order) receives label i.
// Sends first-ascent length to root outdegree.
IncreasingOrderedTree firstascent_tree(const HeightLabeledDyckPath& path);
HeightLabeledDyckPath firstascent_tree_inverse(
    const IncreasingOrderedTree& tree);

// Involution phi(A m B m C) = phi(A) m phi(C) m phi(B); swaps descents
// (with the conventional final descent) and plateaus.
StirlingPermutation phi(const StirlingPermutation& perm);

// Plateau-insertion history coding; sends plateaus to distinct entries.
TrapezoidalWord stirling_to_trapezoidal(const StirlingPermutation& perm);
StirlingPermutation stirling_from_trapezoidal(const TrapezoidalWord& word);

// Peels the last upstep labeled 1 (with the final downstep) repeatedly;
// sends upstep-free vertices to Y-subscripts.
CodingWord hldyck_to_coding(const HeightLabeledDyckPath& path);
HeightLabeledDyckPath hldyck_from_coding(const CodingWord& word);

// Peels the adjacent pair nn repeatedly, classifying the vacated gap as a
// descent (Y) or non-descent (N) gap; sends descents to Y-subscripts.
CodingWord stirling_to_coding(const StirlingPermutation& perm);
StirlingPermutation stirling_from_coding(const CodingWord& word);

// Renders subscripts as down/flat steps and reads signed lattice-point
// ordinates, prepending 0.
SymmetricTrapezoidalWord coding_to_symtrapezoidal(const CodingWord& word);
CodingWord coding_from_symtrapezoidal(const SymmetricTrapezoidalWord& word);

// Splits at LR minima and records, for each non-minimal value j, the last
// smaller entry before j and whether both its occurrences precede j.
LRSplit lr_minima_split(const StirlingPermutation& perm);
StirlingPermutation lr_minima_join(const LRSplit& split);

// Candidate-selection bijection: full ascent sequence of the path becomes
// the fertility sequence of the tree; 1s on the first ascent become LR
// minima among the root's children.
IncreasingOrderedTree fertility_tree(const HeightLabeledDyckPath& path);
HeightLabeledDyckPath fertility_tree_inverse(const IncreasingOrderedTree& tree);

// One step of the interchange cascade: lifts a permutation of size n-1 with
// max-before-first-one k-1 and a tentative plateau of 2s (slot in
// [1, 2n-1]) to a permutation of size n with max-before-first-one k.
// Requires 3 <= k <= n. The cascade is capped at n interchanges.
StirlingPermutation maxrec_step(const StirlingPermutation& perm, int slot);

// Sign-reversing involution: swaps b(i) and b(i+1) at the smallest i whose
// pair is not consecutive; the identity pairing is the unique fixed point
// (returned as nullopt).
std::optional<PerfectMatching> pfaffian_involution(const PerfectMatching& m);

// Relabels so the label set becomes 0,1,2,... in order; shared by the
// cut-and-paste steps. Input and output are children-lists keyed by label.
std::vector<std::pair<int, int>> standardize_edges(
    const std::vector<std::pair<int, int>>& edges);

// CLI surface: apply/invert by canonical text or JSON.
struct BijectionInfo {
  std::string id;
  std::string source;
  std::string target;
  std::function<std::string(const std::string&)> forward;
  std::function<std::string(const std::string&)> inverse;  // empty if none
};

const std::vector<BijectionInfo>& bijection_cli_registry();

}  // namespace ddf

#endif
