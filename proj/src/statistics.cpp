#include "ddf/statistics.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ddf {

namespace {

int subtree_edge_count(const IncreasingOrderedTree& t, int v) {
  int edges = 0;
  std::function<void(int)> walk = [&](int u) {
    for (int c : t.children[u]) {
      ++edges;
      walk(c);
    }
  };
  walk(v);
  return edges;
}

// Follows the smallest child from `start` to a leaf; returns (leaf, edges).
std::pair<int, int> minimal_path_from(const IncreasingOrderedTree& t,
                                      int start, int edges_so_far) {
  int v = start;
  int len = edges_so_far;
  while (!t.children[v].empty()) {
    v = *std::min_element(t.children[v].begin(), t.children[v].end());
    ++len;
  }
  return {v, len};
}

long require_size(const IncreasingOrderedTree& t, const char* stat) {
  if (t.size() < 1)
    throw std::invalid_argument(std::string(stat) + ": undefined on size 0");
  return t.size();
}

long first_ascent_length(const HeightLabeledDyckPath& p) {
  long k = 0;
  while (k < static_cast<long>(p.steps.size()) && p.steps[k] == 'U') ++k;
  return k;
}

// --- per-statistic evaluators ---

long stat_leftmost_subtree_size(const IncreasingOrderedTree& t) {
  require_size(t, "leftmost-subtree-size");
  return subtree_edge_count(t, t.children[0].front());
}

long stat_rightmost_path_length(const IncreasingOrderedTree& t) {
  int v = 0;
  long len = 0;
  while (!t.children[v].empty()) {
    v = t.children[v].back();
    ++len;
  }
  return len;
}

long stat_max_young_leaf(const IncreasingOrderedTree& t) {
  require_size(t, "max-young-leaf");
  long best = -1;
  for (int v = 0; v <= t.size(); ++v) {
    if (t.children[v].empty()) continue;
    int c = t.children[v].front();  // leaf with no left sibling
    if (t.children[c].empty()) best = std::max(best, static_cast<long>(c));
  }
  return best;
}

long stat_young_leaf_count(const IncreasingOrderedTree& t) {
  long count = 0;
  for (int v = 0; v <= t.size(); ++v) {
    if (t.children[v].empty()) continue;
    int c = t.children[v].front();
    if (t.children[c].empty()) ++count;
  }
  return count;
}

long stat_parent_of_n(const IncreasingOrderedTree& t) {
  long n = require_size(t, "parent-of-n");
  for (int v = 0; v < n; ++v)
    for (int c : t.children[v])
      if (c == n) return v + 1;
  throw std::invalid_argument("parent-of-n: malformed tree");
}

long stat_minimal_path_leaf(const IncreasingOrderedTree& t) {
  return minimal_path_from(t, 0, 0).first;
}

long stat_minimal_path_length(const IncreasingOrderedTree& t) {
  return minimal_path_from(t, 0, 0).second;
}

long stat_smallest_child_of_1(const IncreasingOrderedTree& t) {
  require_size(t, "smallest-child-of-1");
  if (t.children[1].empty()) return 1;
  return *std::min_element(t.children[1].begin(), t.children[1].end());
}

long stat_max_descendant_of_1(const IncreasingOrderedTree& t) {
  long n = require_size(t, "max-descendant-of-1");
  int best = 0;
  std::function<void(int)> walk = [&](int u) {
    for (int c : t.children[u]) {
      best = std::max(best, c);
      walk(c);
    }
  };
  walk(1);
  return best == 0 ? n + 1 : best;
}

long stat_max_child_of_1(const IncreasingOrderedTree& t) {
  long n = require_size(t, "max-child-of-1");
  if (t.children[1].empty()) return n + 1;
  return *std::max_element(t.children[1].begin(), t.children[1].end());
}

long stat_root_outdegree(const IncreasingOrderedTree& t) {
  return static_cast<long>(t.children[0].size());
}

long stat_leaf_count(const IncreasingOrderedTree& t) {
  long count = 0;
  for (int v = 0; v <= t.size(); ++v)
    if (t.children[v].empty()) ++count;
  return count;
}

long stat_tree_descent_count(const IncreasingOrderedTree& t) {
  long count = 0;
  for (int v = 0; v <= t.size(); ++v)
    for (size_t i = 0; i + 1 < t.children[v].size(); ++i)
      if (t.children[v][i] > t.children[v][i + 1]) ++count;
  return count;
}

long stat_rtm_path_length(const IncreasingOrderedTree& t) {
  require_size(t, "right-then-minimal-path-length");
  return minimal_path_from(t, t.children[0].back(), 1).second;
}

long stat_first_entry(const StirlingPermutation& p) {
  if (p.entries.empty())
    throw std::invalid_argument("first-entry: undefined on size 0");
  return p.entries.front();
}

long stat_first_one_position(const StirlingPermutation& p) {
  for (size_t i = 0; i < p.entries.size(); ++i)
    if (p.entries[i] == 1) return static_cast<long>(i + 2) / 2;  // pos 2k-1
  throw std::invalid_argument("first-one-position: no 1 in support");
}

long stat_max_before_first_one(const StirlingPermutation& p) {
  long n = static_cast<long>(p.entries.size()) / 2;
  long best = 0;
  for (int e : p.entries) {
    if (e == 1) break;
    best = std::max(best, static_cast<long>(e));
  }
  return best == 0 ? n + 1 : best;
}

long stat_smallest_after_last_n(const StirlingPermutation& p) {
  if (p.entries.empty())
    throw std::invalid_argument("smallest-after-last-n: undefined on size 0");
  int n = *std::max_element(p.entries.begin(), p.entries.end());
  size_t last = p.entries.size();
  for (size_t i = 0; i < p.entries.size(); ++i)
    if (p.entries[i] == n) last = i;
  long best = 0;
  for (size_t i = last + 1; i < p.entries.size(); ++i)
    best = best == 0 ? p.entries[i]
                     : std::min(best, static_cast<long>(p.entries[i]));
  return best;
}

long stat_descent_count(const StirlingPermutation& p) {
  long count = 1;  // conventional descent at the end
  for (size_t i = 0; i + 1 < p.entries.size(); ++i)
    if (p.entries[i] > p.entries[i + 1]) ++count;
  return count;
}

long stat_plateau_count(const StirlingPermutation& p) {
  long count = 0;
  for (size_t i = 0; i + 1 < p.entries.size(); ++i)
    if (p.entries[i] == p.entries[i + 1]) ++count;
  return count;
}

long stat_strong_descent_count(const StirlingPermutation& p) {
  long count = 0;
  std::map<int, int> seen;
  for (size_t i = 0; i < p.entries.size(); ++i) {
    int e = p.entries[i];
    ++seen[e];
    if (i > 0 && p.entries[i - 1] > e && seen[e] == 1) ++count;
  }
  return count;
}

long stat_ascent_count(const StirlingPermutation& p) {
  long count = 0;
  for (size_t i = 0; i + 1 < p.entries.size(); ++i)
    if (p.entries[i] < p.entries[i + 1]) ++count;
  return count;
}

long stat_lr_minima_count(const StirlingPermutation& p) {
  long count = 0;
  int running = 0;
  bool first = true;
  for (int e : p.entries) {
    if (first || e < running) {
      ++count;
      running = e;
      first = false;
    }
  }
  return count;
}

long stat_first_descent_length(const HeightLabeledDyckPath& p) {
  size_t i = 0;
  while (i < p.steps.size() && p.steps[i] == 'U') ++i;
  long k = 0;
  while (i < p.steps.size() && p.steps[i] == 'D') {
    ++k;
    ++i;
  }
  return k;
}

long stat_upstep_free_vertex_count(const HeightLabeledDyckPath& p) {
  long count = 0;
  size_t m = p.steps.size();
  for (size_t v = 0; v <= m; ++v) {
    bool incident = (v > 0 && p.steps[v - 1] == 'U') ||
                    (v < m && p.steps[v] == 'U');
    if (!incident) ++count;
  }
  return count;
}

long stat_peak_count(const HeightLabeledDyckPath& p) {
  long count = 0;
  for (size_t i = 0; i + 1 < p.steps.size(); ++i)
    if (p.steps[i] == 'U' && p.steps[i + 1] == 'D') ++count;
  return count;
}

long stat_first_ascent_ones(const HeightLabeledDyckPath& p) {
  long k = first_ascent_length(p);
  long ones = 0;
  for (long i = 0; i < k; ++i)
    if (p.labels[i] == 1) ++ones;
  return ones;
}

long stat_first_peak_label(const HeightLabeledDyckPath& p) {
  long k = first_ascent_length(p);
  if (k == 0) throw std::invalid_argument("first-peak-label: empty path");
  return p.labels[k - 1];
}

long stat_last_one_upstep_rank(const HeightLabeledDyckPath& p) {
  for (long i = static_cast<long>(p.labels.size()) - 1; i >= 0; --i)
    if (p.labels[i] == 1) return i + 1;
  throw std::invalid_argument("last-one-upstep-rank: no label 1");
}

long stat_low_match_count(const PerfectMatching& m, int r) {
  long n = static_cast<long>(m.pairs.size());
  long count = 0;
  for (auto [a, b] : m.pairs)
    if (b <= n + r) ++count;
  return count;
}

long stat_distinct_entry_count(const TrapezoidalWord& w) {
  std::vector<int> e = w.entries;
  std::sort(e.begin(), e.end());
  return std::unique(e.begin(), e.end()) - e.begin();
}

long stat_upstep_count(const BicoloredUDFPath& p) {
  return std::count(p.steps.begin(), p.steps.end(), 'U');
}

long stat_ground_returns(const UDWalk& w) {
  long count = 0;
  int h = 0;
  for (char s : w.steps) {
    h += s == 'U' ? 1 : -1;
    if (h == 0) ++count;
  }
  return count;
}

long stat_leaf1_root_path(const LeafLabeled02Tree& t) {
  std::function<int(int, int)> depth = [&](int node, int d) -> int {
    const auto& nd = t.nodes[node];
    if (nd.left < 0) return nd.label == 1 ? d : -1;
    int l = depth(nd.left, d + 1);
    return l >= 0 ? l : depth(nd.right, d + 1);
  };
  int d = t.root < 0 ? -1 : depth(t.root, 0);
  if (d < 0) throw std::invalid_argument("leaf1-root-path-length: no leaf 1");
  return d;
}

struct StatId {
  std::string base;
  int param = 0;
  bool has_param = false;
};

StatId split_stat_id(const std::string& id) {
  StatId s;
  auto colon = id.find(':');
  if (colon == std::string::npos) {
    s.base = id;
  } else {
    s.base = id.substr(0, colon);
    s.param = std::stoi(id.substr(colon + 1));
    s.has_param = true;
  }
  return s;
}

template <typename T>
const T& as(const CombObject& o, const char* id) {
  const T* p = std::get_if<T>(&o);
  if (!p)
    throw std::invalid_argument(std::string(id) + ": object of wrong family");
  return *p;
}

}  // namespace

const std::vector<StatisticDescriptor>& statistic_registry() {
  static const std::vector<StatisticDescriptor> reg = {
      {"leftmost-subtree-size", "increasing-ordered-tree",
       "edge count of the subtree rooted at the leftmost child of the root"},
      {"rightmost-path-length", "increasing-ordered-tree",
       "edges on the path that repeatedly takes the rightmost child"},
      {"max-young-leaf", "increasing-ordered-tree",
       "largest leaf that has no left sibling"},
      {"young-leaf-count", "increasing-ordered-tree",
       "number of leaves with no left sibling"},
      {"parent-of-n", "increasing-ordered-tree",
       "1 + parent label of the largest vertex"},
      {"minimal-path-leaf", "increasing-ordered-tree",
       "label of the leaf reached by repeatedly taking the smallest child"},
      {"minimal-path-length", "increasing-ordered-tree",
       "edges on the smallest-child path from the root"},
      {"smallest-child-of-1", "increasing-ordered-tree",
       "smallest child of vertex 1; 1 when vertex 1 is childless"},
      {"max-descendant-of-1", "increasing-ordered-tree",
       "largest proper descendant of vertex 1; n+1 when 1 is a leaf"},
      {"max-child-of-1", "increasing-ordered-tree",
       "largest child of vertex 1; n+1 when vertex 1 is childless"},
      {"root-outdegree", "increasing-ordered-tree", "children of the root"},
      {"leaf-count", "increasing-ordered-tree", "childless vertices"},
      {"tree-descent-count", "increasing-ordered-tree",
       "adjacent sibling pairs with the left label larger"},
      {"right-then-minimal-path-length", "increasing-ordered-tree",
       "edges on the path: rightmost child first, then smallest children"},
      {"first-entry", "stirling-permutation", "first entry"},
      {"first-one-position", "stirling-permutation",
       "k where the first 1 sits at position 2k-1"},
      {"max-before-first-one", "stirling-permutation",
       "maximum entry before the first 1; n+1 when the first entry is 1"},
      {"smallest-after-last-n", "stirling-permutation",
       "smallest entry after the last n; 0 when the last entry is n"},
      {"descent-count", "stirling-permutation",
       "descents, including a conventional descent at the end"},
      {"plateau-count", "stirling-permutation", "adjacent equal pairs"},
      {"strong-descent-count", "stirling-permutation",
       "descents a>b where that b is the first of its two occurrences"},
      {"ascent-count", "stirling-permutation",
       "strict ascents (no conventional ascent at the start)"},
      {"lr-minima-count", "stirling-permutation",
       "entries smaller than everything before them"},
      {"first-ascent-length", "hl-dyck-path", "upsteps before the first downstep"},
      {"first-descent-length", "hl-dyck-path",
       "length of the first maximal downstep run"},
      {"upstep-free-vertex-count", "hl-dyck-path",
       "vertices not incident with an upstep"},
      {"peak-count", "hl-dyck-path", "UD factors"},
      {"first-ascent-ones-count", "hl-dyck-path",
       "upsteps in the first ascent carrying label 1"},
      {"first-peak-label", "hl-dyck-path", "label on the first peak upstep"},
      {"last-one-upstep-rank", "hl-dyck-path",
       "position among the upsteps of the last upstep labeled 1"},
      {"low-match-count", "perfect-matching",
       "pairs with both entries <= n+r (r from the id suffix)"},
      {"distinct-entry-count", "trapezoidal", "number of distinct letters"},
      {"upstep-count", "udf-bicolored", "number of upsteps"},
      {"ground-returns", "ud-walk", "vertices at the start level after step 1"},
      {"leaf1-root-path-length", "leaf-labeled-02-tree",
       "edges between leaf 1 and the root"},
  };
  return reg;
}

FamilySpec statistic_family(const std::string& stat_id) {
  StatId s = split_stat_id(stat_id);
  for (const auto& d : statistic_registry()) {
    if (d.id == s.base) {
      auto fam = parse_family(d.family);
      fam->param = s.param;
      return *fam;
    }
  }
  throw std::invalid_argument("unknown statistic: " + stat_id);
}

long evaluate(const std::string& stat_id, const CombObject& object) {
  StatId s = split_stat_id(stat_id);
  const std::string& b = s.base;
  const char* id = stat_id.c_str();
  if (b == "leftmost-subtree-size")
    return stat_leftmost_subtree_size(as<IncreasingOrderedTree>(object, id));
  if (b == "rightmost-path-length")
    return stat_rightmost_path_length(as<IncreasingOrderedTree>(object, id));
  if (b == "max-young-leaf")
    return stat_max_young_leaf(as<IncreasingOrderedTree>(object, id));
  if (b == "young-leaf-count")
    return stat_young_leaf_count(as<IncreasingOrderedTree>(object, id));
  if (b == "parent-of-n")
    return stat_parent_of_n(as<IncreasingOrderedTree>(object, id));
  if (b == "minimal-path-leaf")
    return stat_minimal_path_leaf(as<IncreasingOrderedTree>(object, id));
  if (b == "minimal-path-length")
    return stat_minimal_path_length(as<IncreasingOrderedTree>(object, id));
  if (b == "smallest-child-of-1")
    return stat_smallest_child_of_1(as<IncreasingOrderedTree>(object, id));
  if (b == "max-descendant-of-1")
    return stat_max_descendant_of_1(as<IncreasingOrderedTree>(object, id));
  if (b == "max-child-of-1")
    return stat_max_child_of_1(as<IncreasingOrderedTree>(object, id));
  if (b == "root-outdegree")
    return stat_root_outdegree(as<IncreasingOrderedTree>(object, id));
  if (b == "leaf-count")
    return stat_leaf_count(as<IncreasingOrderedTree>(object, id));
  if (b == "tree-descent-count")
    return stat_tree_descent_count(as<IncreasingOrderedTree>(object, id));
  if (b == "right-then-minimal-path-length")
    return stat_rtm_path_length(as<IncreasingOrderedTree>(object, id));
  if (b == "first-entry")
    return stat_first_entry(as<StirlingPermutation>(object, id));
  if (b == "first-one-position")
    return stat_first_one_position(as<StirlingPermutation>(object, id));
  if (b == "max-before-first-one")
    return stat_max_before_first_one(as<StirlingPermutation>(object, id));
  if (b == "smallest-after-last-n")
    return stat_smallest_after_last_n(as<StirlingPermutation>(object, id));
  if (b == "descent-count")
    return stat_descent_count(as<StirlingPermutation>(object, id));
  if (b == "plateau-count")
    return stat_plateau_count(as<StirlingPermutation>(object, id));
  if (b == "strong-descent-count")
    return stat_strong_descent_count(as<StirlingPermutation>(object, id));
  if (b == "ascent-count")
    return stat_ascent_count(as<StirlingPermutation>(object, id));
  if (b == "lr-minima-count")
    return stat_lr_minima_count(as<StirlingPermutation>(object, id));
  if (b == "first-ascent-length")
    return first_ascent_length(as<HeightLabeledDyckPath>(object, id));
  if (b == "first-descent-length")
    return stat_first_descent_length(as<HeightLabeledDyckPath>(object, id));
  if (b == "upstep-free-vertex-count")
    return stat_upstep_free_vertex_count(
        as<HeightLabeledDyckPath>(object, id));
  if (b == "peak-count")
    return stat_peak_count(as<HeightLabeledDyckPath>(object, id));
  if (b == "first-ascent-ones-count")
    return stat_first_ascent_ones(as<HeightLabeledDyckPath>(object, id));
  if (b == "first-peak-label")
    return stat_first_peak_label(as<HeightLabeledDyckPath>(object, id));
  if (b == "last-one-upstep-rank")
    return stat_last_one_upstep_rank(as<HeightLabeledDyckPath>(object, id));
  if (b == "low-match-count")
    return stat_low_match_count(as<PerfectMatching>(object, id), s.param);
  if (b == "distinct-entry-count")
    return stat_distinct_entry_count(as<TrapezoidalWord>(object, id));
  if (b == "upstep-count")
    return stat_upstep_count(as<BicoloredUDFPath>(object, id));
  if (b == "ground-returns")
    return stat_ground_returns(as<UDWalk>(object, id));
  if (b == "leaf1-root-path-length")
    return stat_leaf1_root_path(as<LeafLabeled02Tree>(object, id));
  throw std::invalid_argument("unknown statistic: " + stat_id);
}

ExactInt DistributionTable::total() const {
  ExactInt t = 0;
  for (const auto& [k, v] : counts) t += v;
  return t;
}

DistributionTable distribution(const std::string& stat_id, int n, int bound) {
  return joint_distribution({stat_id}, n, bound);
}

DistributionTable joint_distribution(const std::vector<std::string>& stat_ids,
                                     int n, int bound) {
  if (stat_ids.empty())
    throw std::invalid_argument("joint_distribution: no statistics");
  FamilySpec fam = statistic_family(stat_ids[0]);
  for (const auto& id : stat_ids) {
    FamilySpec f = statistic_family(id);
    if (f.family != fam.family || f.param != fam.param)
      throw std::invalid_argument("joint_distribution: family mismatch");
  }
  DistributionTable table;
  table.n = n;
  for (const auto& obj : enumerate(fam, n, bound)) {
    std::vector<long> key;
    key.reserve(stat_ids.size());
    for (const auto& id : stat_ids) key.push_back(evaluate(id, obj));
    table.counts[key] += 1;
  }
  return table;
}

std::string distribution_csv(const DistributionTable& table) {
  std::ostringstream out;
  for (const auto& [key, count] : table.counts) {
    for (long v : key) out << v << ',';
    out << count.get_str() << '\n';
  }
  return out.str();
}

std::string distribution_json(const DistributionTable& table) {
  std::ostringstream out;
  out << "{\"n\":" << table.n << ",\"counts\":[";
  bool first = true;
  for (const auto& [key, count] : table.counts) {
    if (!first) out << ',';
    first = false;
    out << "{\"value\":[";
    for (size_t i = 0; i < key.size(); ++i) {
      if (i) out << ',';
      out << key[i];
    }
    out << "],\"count\":\"" << count.get_str() << "\"}";
  }
  out << "]}";
  return out.str();
}

}  // namespace ddf
