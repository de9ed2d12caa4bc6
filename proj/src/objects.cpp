#include "ddf/objects.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace ddf {

namespace {
ValidationReport fail(std::string what) { return {false, std::move(what)}; }
}  // namespace

ValidationReport validate(const TrapezoidalWord& w) {
  for (size_t i = 0; i < w.entries.size(); ++i) {
    int bound = 2 * static_cast<int>(i) + 1;
    if (w.entries[i] < 1 || w.entries[i] > bound)
      return fail("entry out of [1, 2i-1]");
  }
  return {};
}

ValidationReport validate(const SymmetricTrapezoidalWord& w) {
  if (!w.entries.empty() && w.entries[0] != 0)
    return fail("first entry must be 0");
  for (size_t i = 0; i < w.entries.size(); ++i) {
    if (std::abs(w.entries[i]) > static_cast<int>(i))
      return fail("entry magnitude exceeds i-1");
  }
  return {};
}

ValidationReport validate(const PerfectMatching& m) {
  int n = static_cast<int>(m.pairs.size());
  std::set<int> seen;
  int prev_a = 0;
  for (auto [a, b] : m.pairs) {
    if (a >= b) return fail("pair not in a<b order");
    if (a <= prev_a) return fail("first entries not increasing");
    prev_a = a;
    seen.insert(a);
    seen.insert(b);
  }
  if (static_cast<int>(seen.size()) != 2 * n || (n > 0 && *seen.rbegin() > 2 * n))
    return fail("pairs do not partition [2n]");
  for (int v = 1; v <= 2 * n; ++v)
    if (!seen.count(v)) return fail("pairs do not partition [2n]");
  return {};
}

ValidationReport validate(const StirlingPermutation& p) {
  std::map<int, std::vector<int>> where;
  for (size_t i = 0; i < p.entries.size(); ++i) {
    if (p.entries[i] < 1) return fail("entries must be positive");
    where[p.entries[i]].push_back(static_cast<int>(i));
  }
  for (auto& [v, pos] : where) {
    if (pos.size() != 2) return fail("support value not appearing exactly twice");
    for (int i = pos[0] + 1; i < pos[1]; ++i)
      if (p.entries[i] <= v)
        return fail("entry between the two occurrences does not exceed them");
  }
  return {};
}

ValidationReport validate(const IncreasingOrderedTree& t) {
  int n = t.size();
  if (n < 0) return fail("missing root");
  std::vector<int> parent(n + 1, -1);
  for (int v = 0; v <= n; ++v) {
    for (int c : t.children[v]) {
      if (c <= v) return fail("child label does not exceed parent label");
      if (c > n) return fail("label outside [0,n]");
      if (parent[c] != -1) return fail("vertex has two parents");
      parent[c] = v;
    }
  }
  for (int v = 1; v <= n; ++v)
    if (parent[v] == -1) return fail("label set is not [0,n]");
  return {};
}

namespace {
// Minimum leaf label in each subtree; -1 marks a malformed node.
int min_leaf(const LeafLabeled02Tree& t, int node, std::vector<int>& memo) {
  if (memo[node] != 0) return memo[node];
  const auto& nd = t.nodes[node];
  int r = nd.left < 0 ? nd.label
                      : std::min(min_leaf(t, nd.left, memo),
                                 min_leaf(t, nd.right, memo));
  memo[node] = r;
  return r;
}
}  // namespace

ValidationReport validate(const LeafLabeled02Tree& t) {
  if (t.root < 0 || t.root >= static_cast<int>(t.nodes.size()))
    return fail("missing root");
  std::set<int> leaves;
  for (size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& nd = t.nodes[i];
    bool l = nd.left >= 0, r = nd.right >= 0;
    if (l != r) return fail("node with exactly one child");
    if (!l) {
      if (nd.label < 1) return fail("leaf label must be positive");
      if (!leaves.insert(nd.label).second) return fail("duplicate leaf label");
    }
  }
  int m = static_cast<int>(leaves.size());
  if (!leaves.empty() && *leaves.rbegin() != m)
    return fail("leaf labels are not [1, n+1]");
  std::vector<int> memo(t.nodes.size(), 0);
  for (size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& nd = t.nodes[i];
    if (nd.left >= 0 &&
        min_leaf(t, nd.left, memo) > min_leaf(t, nd.right, memo))
      return fail("sibling pair not in canonical min-leaf order");
  }
  return {};
}

ValidationReport validate(const HeightLabeledDyckPath& p) {
  if (!is_dyck(p.steps)) return fail("steps are not a Dyck path");
  auto tops = upstep_top_heights(p.steps);
  if (tops.size() != p.labels.size())
    return fail("label count differs from upstep count");
  for (size_t i = 0; i < tops.size(); ++i)
    if (p.labels[i] < 1 || p.labels[i] > tops[i])
      return fail("label exceeds height of upstep top");
  return {};
}

ValidationReport validate(const HeightLabeledOrderedTree& t) {
  if (t.v.empty()) return fail("missing root");
  auto h = vertex_heights(t);
  std::vector<char> reached(t.v.size(), 0);
  reached[0] = 1;
  for (size_t i = 0; i < t.v.size(); ++i)
    for (int k : t.v[i].kids) {
      if (k < 0 || k >= static_cast<int>(t.v.size()) || reached[k])
        return fail("malformed child indices");
      reached[k] = 1;
    }
  for (size_t i = 1; i < t.v.size(); ++i) {
    if (!reached[i]) return fail("unreachable vertex");
    if (t.v[i].hlabel < 1 || t.v[i].hlabel > h[i])
      return fail("label exceeds vertex height");
  }
  return {};
}

ValidationReport validate(const OverhangPath& p) {
  int x = 0, y = 0;
  std::set<std::pair<int, int>> visited{{0, 0}};
  for (char s : p.steps) {
    if (s == 'U') {
      ++x;
      ++y;
    } else if (s == 'D') {
      ++x;
      --y;
    } else if (s == 'B') {
      --x;
      ++y;
    } else {
      return fail("unknown step letter");
    }
    if (x < 0 || y < 0) return fail("vertex outside the first quadrant");
    if (!visited.insert({x, y}).second) return fail("repeated vertex");
  }
  int n2 = x;
  if (y != 0 || (!p.steps.empty() && n2 % 2 != 0))
    return fail("path does not end on the axis at (2n,0)");
  return {};
}

ValidationReport validate(const BicoloredUDFPath& p) {
  for (char s : p.steps)
    if (s != 'U' && s != 'D' && s != 'r' && s != 'b')
      return fail("unknown step letter");
  return {};
}

ValidationReport validate(const UDWalk& w) {
  for (char s : w.steps)
    if (s != 'U' && s != 'D') return fail("unknown step letter");
  if (w.steps.size() % 2 != 0) return fail("walk length must be even");
  return {};
}

ValidationReport validate(const CombObject& o) {
  return std::visit([](const auto& x) { return validate(x); }, o);
}

std::vector<std::pair<int, int>> standard_edge_list(
    const IncreasingOrderedTree& t) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v <= t.size(); ++v)
    for (int c : t.children[v]) edges.emplace_back(v, c);
  return edges;
}

IncreasingOrderedTree tree_from_edge_list(
    const std::vector<std::pair<int, int>>& edges) {
  IncreasingOrderedTree t;
  t.children.assign(edges.size() + 1, {});
  for (auto [p, c] : edges) t.children[p].push_back(c);
  return t;
}

std::vector<int> upstep_top_heights(const std::string& steps) {
  std::vector<int> tops;
  int h = 0;
  for (char s : steps) {
    if (s == 'U') {
      ++h;
      tops.push_back(h);
    } else {
      --h;
    }
  }
  return tops;
}

std::vector<int> upstep_positions(const std::string& steps) {
  std::vector<int> pos;
  for (size_t i = 0; i < steps.size(); ++i)
    if (steps[i] == 'U') pos.push_back(static_cast<int>(i) + 1);
  return pos;
}

bool is_dyck(const std::string& steps) {
  int h = 0;
  for (char s : steps) {
    if (s == 'U')
      ++h;
    else if (s == 'D')
      --h;
    else
      return false;
    if (h < 0) return false;
  }
  return h == 0;
}

std::vector<int> vertex_heights(const HeightLabeledOrderedTree& t) {
  std::vector<int> h(t.v.size(), 0);
  std::function<void(int)> walk = [&](int u) {
    for (int k : t.v[u].kids) {
      h[k] = h[u] + 1;
      walk(k);
    }
  };
  if (!t.v.empty()) walk(0);
  return h;
}

std::vector<int> tree_depths(const IncreasingOrderedTree& t) {
  std::vector<int> d(t.size() + 1, 0);
  std::function<void(int)> walk = [&](int u) {
    for (int c : t.children[u]) {
      d[c] = d[u] + 1;
      walk(c);
    }
  };
  walk(0);
  return d;
}

namespace {
int reorder_02(LeafLabeled02Tree& t, int node) {
  auto& nd = t.nodes[node];
  if (nd.left < 0) return nd.label;
  int ml = reorder_02(t, nd.left);
  int mr = reorder_02(t, nd.right);
  if (ml > mr) {
    std::swap(nd.left, nd.right);
    std::swap(ml, mr);
  }
  return ml;
}
}  // namespace

void canonicalize_02_tree(LeafLabeled02Tree& t) {
  if (t.root >= 0) reorder_02(t, t.root);
}

}  // namespace ddf
