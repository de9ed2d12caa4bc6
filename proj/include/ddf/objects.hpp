#ifndef DDF_OBJECTS_HPP
#define DDF_OBJECTS_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ddf {

// Word with i-th letter in [1, 2i-1] (1-indexed).
struct TrapezoidalWord {
  std::vector<int> entries;
};

// Word with first letter 0 and |i-th letter| <= i-1 (1-indexed).
struct SymmetricTrapezoidalWord {
  std::vector<int> entries;
};

// Perfect matching of [2n] in standard form: a(i) < b(i) and a's increasing.
struct PerfectMatching {
  std::vector<std::pair<int, int>> pairs;
};

// Multiset permutation in which everything between the two copies of i
// exceeds i. The support set defaults to [n] but may be any finite set of
// positive integers.
struct StirlingPermutation {
  std::vector<int> entries;
};

// Ordered rooted tree with root label 0 and label set [0,n]; every child
// label exceeds its parent label. children[v] lists v's children in
// left-to-right order; the vector is indexed by label.
struct IncreasingOrderedTree {
  std::vector<std::vector<int>> children;

  int size() const { return static_cast<int>(children.size()) - 1; }
};

// Rooted unordered binary tree, every node with 0 or 2 children, leaves
// labeled bijectively with [n+1]. Stored in canonical ordered form: each
// sibling pair is ordered by the minimum leaf label in its subtree.
struct LeafLabeled02Tree {
  struct Node {
    int label = 0;   // leaf label; 0 for internal nodes
    int left = -1;   // node indices; -1 for leaves
    int right = -1;
  };
  std::vector<Node> nodes;
  int root = -1;
};

// Dyck path of n upsteps and n downsteps; each upstep carries a label
// between 1 and the height of its top vertex. steps uses 'U' and 'D';
// labels[i] belongs to the (i+1)-st upstep in path order.
struct HeightLabeledDyckPath {
  std::string steps;
  std::vector<int> labels;
};

// Ordered tree of n edges; each non-root vertex carries a label between 1
// and its height (distance from the root). Vertex 0 is the root.
struct HeightLabeledOrderedTree {
  struct Vertex {
    int hlabel = 0;  // unused for the root
    std::vector<int> kids;
  };
  std::vector<Vertex> v;
};

// Lattice path over steps U=(1,1), D=(1,-1), B=(-1,1) from (0,0) to (2n,0)
// staying in the first quadrant and never repeating a vertex.
struct OverhangPath {
  std::string steps;
};

// Path over upsteps, downsteps and flatsteps of two colors ('U','D','r','b'),
// length n; the end height is #U - #D, measured from the initial vertex.
struct BicoloredUDFPath {
  std::string steps;
};

// Unconstrained walk of 2n steps 'U'/'D'.
struct UDWalk {
  std::string steps;
};

using CombObject =
    std::variant<TrapezoidalWord, SymmetricTrapezoidalWord, PerfectMatching,
                 StirlingPermutation, IncreasingOrderedTree, LeafLabeled02Tree,
                 HeightLabeledDyckPath, HeightLabeledOrderedTree, OverhangPath,
                 BicoloredUDFPath, UDWalk>;

struct ValidationReport {
  bool ok = true;
  std::string violation;  // names the first violated invariant
};

ValidationReport validate(const TrapezoidalWord&);
ValidationReport validate(const SymmetricTrapezoidalWord&);
ValidationReport validate(const PerfectMatching&);
ValidationReport validate(const StirlingPermutation&);
ValidationReport validate(const IncreasingOrderedTree&);
ValidationReport validate(const LeafLabeled02Tree&);
ValidationReport validate(const HeightLabeledDyckPath&);
ValidationReport validate(const HeightLabeledOrderedTree&);
ValidationReport validate(const OverhangPath&);
ValidationReport validate(const BicoloredUDFPath&);
ValidationReport validate(const UDWalk&);
ValidationReport validate(const CombObject&);

// --- small structural helpers shared across modules ---

// Edges (parent,child) in standard order: increasing parent label, children
// of a common parent kept in left-to-right order.
std::vector<std::pair<int, int>> standard_edge_list(
    const IncreasingOrderedTree& t);

// Rebuilds the children table from a standard-order edge list.
IncreasingOrderedTree tree_from_edge_list(
    const std::vector<std::pair<int, int>>& edges);

// Labels of the upstep top vertices, in path order.
std::vector<int> upstep_top_heights(const std::string& steps);

// Positions (1-indexed within the step string) of the upsteps.
std::vector<int> upstep_positions(const std::string& steps);

// True if steps form a Dyck path: balanced and never below the start level.
bool is_dyck(const std::string& steps);

// Height of every vertex of the ordered tree, indexed like t.v.
std::vector<int> vertex_heights(const HeightLabeledOrderedTree& t);

// Depth (edge distance from the root) of each labeled vertex.
std::vector<int> tree_depths(const IncreasingOrderedTree& t);

// Reorders every sibling pair by minimum leaf label in its subtree.
void canonicalize_02_tree(LeafLabeled02Tree& t);

}  // namespace ddf

#endif
