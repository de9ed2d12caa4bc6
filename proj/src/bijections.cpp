#include "ddf/bijections.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ddf/serialize.hpp"
#include "json.hpp"

namespace ddf {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

bool is_standard(const StirlingPermutation& p) {
  int n = static_cast<int>(p.entries.size()) / 2;
  std::set<int> support(p.entries.begin(), p.entries.end());
  if (static_cast<int>(support.size()) != n) return false;
  return support.empty() || (*support.begin() == 1 && *support.rbegin() == n);
}

}  // namespace

// ---------------------------------------------------------------------------
// walkaround / Janson

StirlingPermutation janson(const IncreasingOrderedTree& tree) {
  require(validate(tree).ok, "janson: invalid tree");
  StirlingPermutation out;
  std::function<void(int)> walk = [&](int v) {
    for (int c : tree.children[v]) {
      out.entries.push_back(c);
      walk(c);
      out.entries.push_back(c);
    }
  };
  walk(0);
  return out;
}

IncreasingOrderedTree janson_inverse(const StirlingPermutation& perm) {
  require(validate(perm).ok && is_standard(perm),
          "janson_inverse: not a standard Stirling permutation");
  int n = static_cast<int>(perm.entries.size()) / 2;
  IncreasingOrderedTree t;
  t.children.assign(n + 1, {});
  std::vector<int> parent(n + 1, -1);
  std::vector<char> open(n + 1, 0);
  int cur = 0;
  for (int x : perm.entries) {
    if (!open[x]) {
      open[x] = 1;
      t.children[cur].push_back(x);
      parent[x] = cur;
      cur = x;
    } else {
      require(cur == x, "janson_inverse: malformed nesting");
      cur = parent[x];
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// accordion

HeightLabeledDyckPath accordion(const HeightLabeledOrderedTree& tree) {
  require(validate(tree).ok, "accordion: invalid tree");
  HeightLabeledDyckPath p;
  std::function<void(int)> walk = [&](int v) {
    for (int k : tree.v[v].kids) {
      p.steps.push_back('U');
      p.labels.push_back(tree.v[k].hlabel);
      walk(k);
      p.steps.push_back('D');
    }
  };
  walk(0);
  return p;
}

HeightLabeledOrderedTree accordion_inverse(const HeightLabeledDyckPath& path) {
  require(validate(path).ok, "accordion_inverse: invalid path");
  HeightLabeledOrderedTree t;
  t.v.push_back({});
  std::vector<int> stack{0};
  size_t li = 0;
  for (char s : path.steps) {
    if (s == 'U') {
      t.v.push_back({});
      int id = static_cast<int>(t.v.size()) - 1;
      t.v[id].hlabel = path.labels[li++];
      t.v[stack.back()].kids.push_back(id);
      stack.push_back(id);
    } else {
      stack.pop_back();
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// overhang paths <-> trapezoidal words

TrapezoidalWord overhang_to_trapezoidal(const OverhangPath& path) {
  require(validate(path).ok, "overhang_to_trapezoidal: invalid path");
  TrapezoidalWord w;
  int y = 0;
  for (char s : path.steps) {
    if (s == 'U') {
      ++y;
      w.entries.push_back(y);
    } else if (s == 'D') {
      --y;
    } else {
      ++y;
    }
  }
  return w;
}

OverhangPath overhang_from_trapezoidal(const TrapezoidalWord& word) {
  require(validate(word).ok, "overhang_from_trapezoidal: invalid word");
  OverhangPath p;
  int n = static_cast<int>(word.entries.size());
  for (int i = 0; i < n; ++i) {
    if (i > 0) {
      int delta = word.entries[i] - word.entries[i - 1] - 1;
      p.steps.append(std::abs(delta), delta > 0 ? 'B' : 'D');
    }
    p.steps.push_back('U');
  }
  if (n > 0) p.steps.append(word.entries[n - 1], 'D');
  return p;
}

// ---------------------------------------------------------------------------
// height-labeled paths <-> perfect matchings

PerfectMatching hldyck_to_matching(const HeightLabeledDyckPath& path) {
  require(validate(path).ok, "hldyck_to_matching: invalid path");
  int n = static_cast<int>(path.labels.size());
  auto a = upstep_positions(path.steps);
  std::vector<int> d;
  for (int pos = 2 * n; pos >= 1; --pos)
    if (path.steps[pos - 1] == 'D') d.push_back(pos);
  std::vector<int> b(n);
  for (int i = n - 1; i >= 0; --i) {
    int h = path.labels[i];
    b[i] = d[h - 1];
    d.erase(d.begin() + (h - 1));
  }
  PerfectMatching m;
  for (int i = 0; i < n; ++i) m.pairs.emplace_back(a[i], b[i]);
  require(validate(m).ok, "hldyck_to_matching: produced invalid matching");
  return m;
}

HeightLabeledDyckPath hldyck_from_matching(const PerfectMatching& m) {
  require(validate(m).ok, "hldyck_from_matching: invalid matching");
  int n = static_cast<int>(m.pairs.size());
  HeightLabeledDyckPath p;
  p.steps.assign(2 * n, 'D');
  for (auto [a, b] : m.pairs) p.steps[a - 1] = 'U';
  std::vector<int> d;
  for (int pos = 2 * n; pos >= 1; --pos)
    if (p.steps[pos - 1] == 'D') d.push_back(pos);
  p.labels.assign(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    auto it = std::find(d.begin(), d.end(), m.pairs[i].second);
    require(it != d.end(), "hldyck_from_matching: inconsistent pairing");
    p.labels[i] = static_cast<int>(it - d.begin()) + 1;
    d.erase(it);
  }
  require(validate(p).ok, "hldyck_from_matching: produced invalid path");
  return p;
}

// ---------------------------------------------------------------------------
// rightmost-path cut-and-paste

namespace {

// Ordered tree over stable node ids; labels move, ids do not.
struct MutTree {
  struct Node {
    int label = -1;  // -1 marks a removed node
    std::vector<int> kids;
    int parent = -1;
  };
  std::vector<Node> nodes;
  int root = 0;

  static MutTree from(const IncreasingOrderedTree& t) {
    MutTree m;
    m.nodes.resize(t.children.size());
    for (size_t v = 0; v < t.children.size(); ++v) {
      m.nodes[v].label = static_cast<int>(v);
      m.nodes[v].kids = t.children[v];
      for (int c : t.children[v]) m.nodes[c].parent = static_cast<int>(v);
    }
    return m;
  }

  int new_node(int label) {
    nodes.push_back({});
    nodes.back().label = label;
    return static_cast<int>(nodes.size()) - 1;
  }

  int node_with_label(int label) const {
    for (size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].label == label) return static_cast<int>(i);
    throw std::logic_error("node_with_label: no such label");
  }

  // Relabels alive nodes order-preservingly to 0,1,2,...
  void standardize() {
    std::vector<int> labels;
    for (const auto& nd : nodes)
      if (nd.label >= 0) labels.push_back(nd.label);
    std::sort(labels.begin(), labels.end());
    for (auto& nd : nodes)
      if (nd.label >= 0)
        nd.label = static_cast<int>(
            std::lower_bound(labels.begin(), labels.end(), nd.label) -
            labels.begin());
  }

  // Edges in standard order as (parent-id, child-id).
  std::vector<std::pair<int, int>> standard_edges() const {
    std::vector<std::pair<int, int>> order;
    std::vector<std::pair<int, int>> by_label;  // (label, id)
    for (size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].label >= 0) by_label.emplace_back(nodes[i].label, i);
    std::sort(by_label.begin(), by_label.end());
    for (auto [lab, id] : by_label)
      for (int c : nodes[id].kids) order.emplace_back(id, c);
    return order;
  }

  IncreasingOrderedTree to_tree() const {
    int count = 0;
    for (const auto& nd : nodes)
      if (nd.label >= 0) ++count;
    IncreasingOrderedTree t;
    t.children.assign(count, {});
    for (const auto& nd : nodes) {
      if (nd.label < 0) continue;
      for (int c : nd.kids) t.children[nd.label].push_back(nodes[c].label);
    }
    return t;
  }
};

}  // namespace

std::vector<std::pair<int, int>> standardize_edges(
    const std::vector<std::pair<int, int>>& edges) {
  std::set<int> labels;
  for (auto [p, c] : edges) {
    labels.insert(p);
    labels.insert(c);
  }
  std::map<int, int> rank;
  int next = 0;
  for (int l : labels) rank[l] = next++;
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size());
  for (auto [p, c] : edges) out.emplace_back(rank[p], rank[c]);
  return out;
}

SplitPair rightpath_split(const IncreasingOrderedTree& tree, int k) {
  require(validate(tree).ok, "rightpath_split: invalid tree");
  require(k >= 0, "rightpath_split: negative k");
  MutTree t = MutTree::from(tree);

  std::vector<int> base;
  int cur = t.root;
  for (int i = 0; i < k; ++i) {
    require(!t.nodes[cur].kids.empty(), "rightpath_split: rightmost path shorter than k");
    cur = t.nodes[cur].kids.back();
    base.push_back(cur);
  }
  std::set<int> base_set(base.begin(), base.end());

  std::vector<int> fertile;
  std::vector<int> barren;
  for (int b : base) {
    bool fert = false;
    for (int c : t.nodes[b].kids)
      if (!base_set.count(c)) fert = true;
    (fert ? fertile : barren).push_back(b);
  }

  SplitPair out;
  for (int b : barren) out.x.push_back({t.nodes[b].label, true});

  // leftmost edge out of each fertile base vertex; parent endpoint follows
  // its subtree through the merges below
  std::vector<std::pair<int, int>> highlighted;
  for (int b : fertile) highlighted.push_back({b, t.nodes[b].kids.front()});

  std::set<int> barren_set(barren.begin(), barren.end());
  for (int b : base) {
    if (!barren_set.count(b)) continue;
    int p = t.nodes[b].parent;
    auto& pk = t.nodes[p].kids;
    auto it = std::find(pk.begin(), pk.end(), b);
    std::vector<int> bk = t.nodes[b].kids;  // the next base vertex, if any
    it = pk.erase(it);
    pk.insert(it, bk.begin(), bk.end());
    for (int c : bk) t.nodes[c].parent = p;
    t.nodes[b].label = -1;
    t.nodes[b].kids.clear();
  }
  t.standardize();

  for (int b : fertile) {
    int target = t.node_with_label(t.nodes[b].label - 1);
    int p = t.nodes[b].parent;
    auto& pk = t.nodes[p].kids;
    pk.erase(std::find(pk.begin(), pk.end(), b));
    for (int c : t.nodes[b].kids) {
      t.nodes[target].kids.push_back(c);
      t.nodes[c].parent = target;
    }
    for (auto& e : highlighted)
      if (e.first == b) e.first = target;
    t.nodes[b].label = -1;
    t.nodes[b].kids.clear();
    t.standardize();
  }

  out.t0 = t.to_tree();

  auto order = t.standard_edges();
  std::vector<int> positions;
  for (auto& e : highlighted) {
    auto it = std::find(order.begin(), order.end(), e);
    require(it != order.end(), "rightpath_split: lost a highlighted edge");
    positions.push_back(static_cast<int>(it - order.begin()) + 1);
  }
  std::sort(positions.begin(), positions.end());
  for (int pos : positions) out.x.push_back({pos, false});
  std::sort(out.x.begin(), out.x.end(), [](const SplitTag& a, const SplitTag& b) {
    if (a.is_vertex != b.is_vertex) return a.is_vertex;
    return a.value < b.value;
  });
  return out;
}

IncreasingOrderedTree rightpath_split_inverse(const SplitPair& pair) {
  require(validate(pair.t0).ok, "rightpath_split_inverse: invalid base tree");
  std::vector<int> xv, xe;
  for (const auto& tag : pair.x)
    (tag.is_vertex ? xv : xe).push_back(tag.value);
  std::sort(xv.begin(), xv.end());
  std::sort(xe.begin(), xe.end());
  int n = pair.t0.size() + static_cast<int>(pair.x.size());

  MutTree t = MutTree::from(pair.t0);
  auto order = t.standard_edges();
  std::vector<std::pair<int, int>> highlighted;
  for (int pos : xe) {
    require(pos >= 1 && pos <= static_cast<int>(order.size()),
            "rightpath_split_inverse: edge position out of range");
    highlighted.push_back(order[pos - 1]);
  }

  // Highlighted edges were consumed left to right; rebuild right to left.
  std::vector<int> created(highlighted.size(), -1);
  for (int j = static_cast<int>(highlighted.size()) - 1; j >= 0; --j) {
    auto [a, c] = highlighted[j];
    int blabel = t.nodes[a].label + 1;
    int anchor = j == 0 ? t.root : highlighted[j - 1].first;
    for (auto& nd : t.nodes)
      if (nd.label >= blabel) ++nd.label;
    int b = t.new_node(blabel);
    auto& ak = t.nodes[a].kids;
    auto it = std::find(ak.begin(), ak.end(), c);
    require(it != ak.end(), "rightpath_split_inverse: highlighted child moved");
    t.nodes[b].kids.assign(it, ak.end());
    ak.erase(it, ak.end());
    for (int cc : t.nodes[b].kids) t.nodes[cc].parent = b;
    t.nodes[anchor].kids.push_back(b);
    t.nodes[b].parent = anchor;
    created[j] = b;
  }

  // Map labels back to [0,n] minus the erased vertex labels.
  std::vector<int> keep;
  {
    std::set<int> gone(xv.begin(), xv.end());
    for (int v = 0; v <= n; ++v)
      if (!gone.count(v)) keep.push_back(v);
  }
  for (auto& nd : t.nodes)
    if (nd.label >= 0) nd.label = keep[nd.label];

  // Reattach the erased vertices along the base path.
  std::vector<std::pair<int, int>> path;  // (label, node id), increasing
  path.emplace_back(t.nodes[t.root].label, t.root);
  for (int id : created) path.emplace_back(t.nodes[id].label, id);
  for (int v : xv) {
    auto it = std::upper_bound(
        path.begin(), path.end(),
        std::make_pair(v, std::numeric_limits<int>::max()));
    require(it != path.begin(), "rightpath_split_inverse: bad vertex tag");
    int p = std::prev(it)->second;
    int node = t.new_node(v);
    t.nodes[node].parent = p;
    if (it != path.end()) {
      int s = it->second;
      require(!t.nodes[p].kids.empty() && t.nodes[p].kids.back() == s,
              "rightpath_split_inverse: base path out of order");
      t.nodes[p].kids.back() = node;
      t.nodes[node].kids.push_back(s);
      t.nodes[s].parent = node;
    } else {
      t.nodes[p].kids.push_back(node);
    }
    path.insert(it, {v, node});
  }

  auto result = t.to_tree();
  require(validate(result).ok, "rightpath_split_inverse: produced invalid tree");
  return result;
}

IncreasingOrderedTree rightpath_to_rootchildren(
    const IncreasingOrderedTree& tree, int k) {
  require(validate(tree).ok, "rightpath_to_rootchildren: invalid tree");
  int n = tree.size();
  MutTree t = MutTree::from(tree);
  std::vector<int> base;
  int cur = t.root;
  for (int i = 0; i < k; ++i) {
    require(!t.nodes[cur].kids.empty(),
            "rightpath_to_rootchildren: rightmost path shorter than k");
    cur = t.nodes[cur].kids.back();
    base.push_back(cur);
  }
  // detach the base edges
  for (int b : base) t.nodes[t.nodes[b].parent].kids.pop_back();

  IncreasingOrderedTree out;
  out.children.assign(n + 2, {});
  std::function<void(int, int)> copy = [&](int id, int new_label) {
    for (int c : t.nodes[id].kids) {
      out.children[new_label].push_back(t.nodes[c].label + 1);
      copy(c, t.nodes[c].label + 1);
    }
  };
  out.children[0].push_back(1);
  copy(t.root, 1);
  for (int b : base) {
    out.children[0].push_back(t.nodes[b].label + 1);
    copy(b, t.nodes[b].label + 1);
  }
  require(validate(out).ok, "rightpath_to_rootchildren: produced invalid tree");
  return out;
}

std::pair<IncreasingOrderedTree, int> rootchildren_to_rightpath(
    const IncreasingOrderedTree& tree) {
  require(validate(tree).ok, "rootchildren_to_rightpath: invalid tree");
  const auto& roots = tree.children[0];
  require(!roots.empty(), "rootchildren_to_rightpath: empty tree");
  require(std::is_sorted(roots.begin(), roots.end()),
          "rootchildren_to_rightpath: root children not increasing");
  int k = static_cast<int>(roots.size()) - 1;
  int n = tree.size() - 1;
  IncreasingOrderedTree out;
  out.children.assign(n + 1, {});
  std::function<void(int)> copy = [&](int v) {
    for (int c : tree.children[v]) {
      out.children[v - 1].push_back(c - 1);
      copy(c);
    }
  };
  for (int c : roots) copy(c);
  // re-hang the components along the rightmost path
  int attach = 0;
  for (size_t i = 1; i < roots.size(); ++i) {
    out.children[attach].push_back(roots[i] - 1);
    attach = roots[i] - 1;
  }
  require(validate(out).ok, "rootchildren_to_rightpath: produced invalid tree");
  return {out, k};
}

// ---------------------------------------------------------------------------
// first-ascent tree

namespace {

// a(i) = upsteps immediately preceding the i-th downstep,
// b(i) = label on the upstep matching the i-th downstep.
std::pair<std::vector<int>, std::vector<int>> ascent_sequences(
    const HeightLabeledDyckPath& path) {
  int n = static_cast<int>(path.labels.size());
  std::vector<int> a(n, 0), b(n, 0);
  std::vector<int> stack;  // open upstep indices
  int run = 0, up = 0, down = 0;
  for (char s : path.steps) {
    if (s == 'U') {
      stack.push_back(up++);
      ++run;
    } else {
      a[down] = run;
      run = 0;
      b[down] = path.labels[stack.back()];
      stack.pop_back();
      ++down;
    }
  }
  return {a, b};
}

}  // namespace

IncreasingOrderedTree firstascent_tree(const HeightLabeledDyckPath& path) {
  require(validate(path).ok, "firstascent_tree: invalid path");
  int n = static_cast<int>(path.labels.size());
  auto [a, b] = ascent_sequences(path);

  // grown tree over node ids; label -1 = unlabeled leaf
  std::vector<int> label{0};
  std::vector<std::vector<int>> kids{{}};
  std::vector<int> by_label(n + 1, -1);
  by_label[0] = 0;
  for (int i = 1; i <= n; ++i) {
    int host = by_label[i - 1];
    for (int j = 0; j < a[i - 1]; ++j) {
      label.push_back(-1);
      kids.emplace_back();
      kids[host].push_back(static_cast<int>(label.size()) - 1);
    }
    int want = b[i - 1];
    int seen = 0;
    std::function<bool(int)> walk = [&](int v) {
      if (label[v] < 0 && ++seen == want) {
        label[v] = i;
        by_label[i] = v;
        return true;
      }
      for (int c : kids[v])
        if (walk(c)) return true;
      return false;
    };
    bool found = walk(0);
    require(found, "firstascent_tree: ran out of unlabeled leaves");
  }

  IncreasingOrderedTree out;
  out.children.assign(n + 1, {});
  for (size_t v = 0; v < kids.size(); ++v)
    for (int c : kids[v]) out.children[label[v]].push_back(label[c]);
  require(validate(out).ok, "firstascent_tree: produced invalid tree");
  return out;
}

HeightLabeledDyckPath firstascent_tree_inverse(
    const IncreasingOrderedTree& tree) {
  require(validate(tree).ok, "firstascent_tree_inverse: invalid tree");
  int n = tree.size();
  std::vector<int> parent(n + 1, -1);
  for (int v = 0; v <= n; ++v)
    for (int c : tree.children[v]) parent[c] = v;
  std::vector<int> preorder;
  std::function<void(int)> walk = [&](int v) {
    if (v != 0) preorder.push_back(v);
    for (int c : tree.children[v]) walk(c);
  };
  walk(0);

  std::vector<int> a(n + 1, 0), b(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    a[i] = static_cast<int>(tree.children[i - 1].size());
    int seen = 0;
    for (int v : preorder) {
      if (parent[v] <= i - 1 && v >= i) {
        ++seen;
        if (v == i) break;
      }
    }
    b[i] = seen;
  }

  HeightLabeledDyckPath p;
  for (int i = 1; i <= n; ++i) {
    p.steps.append(a[i], 'U');
    p.steps.push_back('D');
  }
  p.labels.assign(n, 0);
  std::vector<int> stack;
  int up = 0, down = 0;
  for (char s : p.steps) {
    if (s == 'U') {
      stack.push_back(up++);
    } else {
      ++down;
      p.labels[stack.back()] = b[down];
      stack.pop_back();
    }
  }
  require(validate(p).ok, "firstascent_tree_inverse: produced invalid path");
  return p;
}

// ---------------------------------------------------------------------------
// phi

namespace {
std::vector<int> phi_rec(const std::vector<int>& w) {
  if (w.empty()) return {};
  int m = *std::min_element(w.begin(), w.end());
  size_t p1 = std::find(w.begin(), w.end(), m) - w.begin();
  size_t p2 = std::find(w.begin() + p1 + 1, w.end(), m) - w.begin();
  std::vector<int> a(w.begin(), w.begin() + p1);
  std::vector<int> b(w.begin() + p1 + 1, w.begin() + p2);
  std::vector<int> c(w.begin() + p2 + 1, w.end());
  std::vector<int> out = phi_rec(a);
  out.push_back(m);
  for (int x : phi_rec(c)) out.push_back(x);
  out.push_back(m);
  for (int x : phi_rec(b)) out.push_back(x);
  return out;
}
}  // namespace

StirlingPermutation phi(const StirlingPermutation& perm) {
  require(validate(perm).ok, "phi: invalid permutation");
  return {phi_rec(perm.entries)};
}

// ---------------------------------------------------------------------------
// plateau-insertion history

TrapezoidalWord stirling_to_trapezoidal(const StirlingPermutation& perm) {
  require(validate(perm).ok && is_standard(perm),
          "stirling_to_trapezoidal: not a standard Stirling permutation");
  int n = static_cast<int>(perm.entries.size()) / 2;
  TrapezoidalWord w;
  if (n == 0) return w;
  w.entries.push_back(1);
  std::set<int> present{1};
  for (int k = 2; k <= n; ++k) {
    std::vector<int> prev;  // restriction to values < k
    for (int e : perm.entries)
      if (e < k) prev.push_back(e);
    int gap = 0;  // position of kk among the gaps of prev
    for (int e : perm.entries) {
      if (e == k) break;
      if (e < k) ++gap;
    }
    // classify the gaps of prev
    std::vector<int> plateau_gaps;
    for (size_t j = 1; j < prev.size(); ++j)
      if (prev[j - 1] == prev[j]) plateau_gaps.push_back(static_cast<int>(j));
    auto it = std::find(plateau_gaps.begin(), plateau_gaps.end(), gap);
    int value;
    if (it != plateau_gaps.end()) {
      int rank = static_cast<int>(it - plateau_gaps.begin()) + 1;
      auto pit = present.begin();
      std::advance(pit, rank - 1);
      value = *pit;  // rank-th smallest value already used
    } else {
      int rank = gap + 1;
      for (int pg : plateau_gaps)
        if (pg < gap) --rank;  // rank among non-plateau gaps
      value = 0;
      int remaining = rank;
      while (remaining > 0) {
        ++value;
        if (!present.count(value)) --remaining;
      }
    }
    w.entries.push_back(value);
    present.insert(value);
  }
  require(validate(w).ok, "stirling_to_trapezoidal: produced invalid word");
  return w;
}

StirlingPermutation stirling_from_trapezoidal(const TrapezoidalWord& word) {
  require(validate(word).ok, "stirling_from_trapezoidal: invalid word");
  int n = static_cast<int>(word.entries.size());
  StirlingPermutation p;
  if (n == 0) return p;
  p.entries = {1, 1};
  std::set<int> present{1};
  for (int k = 2; k <= n; ++k) {
    int v = word.entries[k - 1];
    std::vector<int> plateau_gaps;
    for (size_t j = 1; j < p.entries.size(); ++j)
      if (p.entries[j - 1] == p.entries[j])
        plateau_gaps.push_back(static_cast<int>(j));
    int gap;
    if (present.count(v)) {
      int rank = static_cast<int>(
          std::distance(present.begin(), present.find(v))) + 1;
      gap = plateau_gaps[rank - 1];
    } else {
      int rank = v;
      for (int u : present)
        if (u < v) --rank;  // rank among unused values
      gap = -1;
      int remaining = rank;
      for (int j = 0; j <= static_cast<int>(p.entries.size()); ++j) {
        if (std::find(plateau_gaps.begin(), plateau_gaps.end(), j) !=
            plateau_gaps.end())
          continue;
        if (--remaining == 0) {
          gap = j;
          break;
        }
      }
      require(gap >= 0, "stirling_from_trapezoidal: gap rank out of range");
    }
    p.entries.insert(p.entries.begin() + gap, 2, k);
    present.insert(v);
  }
  return p;
}

// ---------------------------------------------------------------------------
// coding words

ValidationReport validate(const CodingWord& w) {
  int n_before = 0;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    auto [value, is_y] = w.letters[i];
    int pos = static_cast<int>(i) + 1;
    if (pos == 1 && !(value == 1 && is_y))
      return {false, "first letter must be 1 with subscript Y"};
    if (value < 1) return {false, "letter value must be positive"};
    if (is_y) {
      if (value > 1 + n_before)
        return {false, "Y value exceeds 1 + #N before it"};
    } else {
      if (value > 2 * pos - 2 - n_before)
        return {false, "N value exceeds 2i-2 - #N before it"};
      ++n_before;
    }
  }
  return {};
}

std::vector<CodingWord> enumerate_coding_words(int n) {
  std::vector<CodingWord> out;
  CodingWord w;
  std::function<void(int, int)> rec = [&](int i, int n_before) {
    if (i > n) {
      out.push_back(w);
      return;
    }
    for (int v = 1; v <= 1 + n_before; ++v) {
      w.letters.emplace_back(v, true);
      rec(i + 1, n_before);
      w.letters.pop_back();
    }
    for (int v = 1; v <= 2 * i - 2 - n_before; ++v) {
      w.letters.emplace_back(v, false);
      rec(i + 1, n_before + 1);
      w.letters.pop_back();
    }
  };
  rec(1, 0);
  return out;
}

std::string coding_word_text(const CodingWord& w) {
  if (w.letters.empty()) return "()";
  bool compact = std::all_of(w.letters.begin(), w.letters.end(),
                             [](auto& l) { return l.first <= 9; });
  std::ostringstream out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (!compact && i) out << ',';
    out << w.letters[i].first << (w.letters[i].second ? 'Y' : 'N');
  }
  return out.str();
}

std::optional<CodingWord> parse_coding_word(const std::string& text) {
  CodingWord w;
  if (text == "()") return w;
  std::string token;
  auto flush = [&]() -> bool {
    if (token.size() < 2) return false;
    char sub = token.back();
    if (sub != 'Y' && sub != 'N') return false;
    try {
      w.letters.emplace_back(std::stoi(token.substr(0, token.size() - 1)),
                             sub == 'Y');
    } catch (...) {
      return false;
    }
    return true;
  };
  for (char c : text) {
    if (c == ',') {
      if (!flush()) return std::nullopt;
      token.clear();
    } else {
      token.push_back(c);
      if (c == 'Y' || c == 'N') {
        if (!flush()) return std::nullopt;
        token.clear();
      }
    }
  }
  if (!token.empty()) return std::nullopt;
  return w;
}

CodingWord hldyck_to_coding(const HeightLabeledDyckPath& path) {
  require(validate(path).ok, "hldyck_to_coding: invalid path");
  int n = static_cast<int>(path.labels.size());
  CodingWord w;
  w.letters.assign(n, {0, false});
  HeightLabeledDyckPath p = path;
  for (int i = n; i >= 1; --i) {
    // last upstep labeled 1
    int u = -1;
    for (int j = static_cast<int>(p.labels.size()) - 1; j >= 0; --j)
      if (p.labels[j] == 1) {
        u = j;
        break;
      }
    require(u >= 0, "hldyck_to_coding: no upstep labeled 1");
    auto pos_list = upstep_positions(p.steps);
    int pos = pos_list[u] - 1;  // 0-based step index; also the vertex index
    p.steps.erase(p.steps.begin() + pos);
    require(!p.steps.empty() || i == 1, "hldyck_to_coding: malformed path");
    if (!p.steps.empty()) {
      require(p.steps.back() == 'D', "hldyck_to_coding: no trailing downstep");
      p.steps.pop_back();
    }
    p.labels.erase(p.labels.begin() + u);
    for (size_t j = u; j < p.labels.size(); ++j) --p.labels[j];

    // classify vertex `pos` in the shrunken path
    int m = static_cast<int>(p.steps.size());
    auto upstep_free = [&](int v) {
      bool incident = (v > 0 && p.steps[v - 1] == 'U') ||
                      (v < m && p.steps[v] == 'U');
      return !incident;
    };
    bool is_y = upstep_free(pos);
    int rank = 0;
    for (int v = 0; v <= pos; ++v)
      if (upstep_free(v) == is_y) ++rank;
    w.letters[i - 1] = {rank, is_y};
  }
  require(validate(w).ok, "hldyck_to_coding: produced invalid word");
  return w;
}

HeightLabeledDyckPath hldyck_from_coding(const CodingWord& word) {
  require(validate(word).ok, "hldyck_from_coding: invalid coding word");
  HeightLabeledDyckPath p;
  for (size_t i = 0; i < word.letters.size(); ++i) {
    auto [value, is_y] = word.letters[i];
    int m = static_cast<int>(p.steps.size());
    auto upstep_free = [&](int v) {
      bool incident = (v > 0 && p.steps[v - 1] == 'U') ||
                      (v < m && p.steps[v] == 'U');
      return !incident;
    };
    int pos = -1, rank = 0;
    for (int v = 0; v <= m; ++v) {
      if (upstep_free(v) == is_y && ++rank == value) {
        pos = v;
        break;
      }
    }
    require(pos >= 0, "hldyck_from_coding: vertex rank out of range");
    int ups_before = 0;
    for (int j = 0; j < pos; ++j)
      if (p.steps[j] == 'U') ++ups_before;
    p.steps.insert(p.steps.begin() + pos, 'U');
    p.steps.push_back('D');
    for (size_t j = ups_before; j < p.labels.size(); ++j) ++p.labels[j];
    p.labels.insert(p.labels.begin() + ups_before, 1);
  }
  require(validate(p).ok, "hldyck_from_coding: produced invalid path");
  return p;
}

namespace {

// Gap j of a permutation (0 = front, len = back) is a descent gap when the
// entries around it descend; the final gap always counts as a descent.
bool is_descent_gap(const std::vector<int>& e, int j) {
  int len = static_cast<int>(e.size());
  if (j == len) return true;
  if (j == 0) return false;
  return e[j - 1] > e[j];
}

}  // namespace

CodingWord stirling_to_coding(const StirlingPermutation& perm) {
  require(validate(perm).ok && is_standard(perm),
          "stirling_to_coding: not a standard Stirling permutation");
  int n = static_cast<int>(perm.entries.size()) / 2;
  CodingWord w;
  w.letters.assign(n, {0, false});
  std::vector<int> e = perm.entries;
  for (int i = n; i >= 1; --i) {
    size_t at = std::find(e.begin(), e.end(), i) - e.begin();
    require(at + 1 < e.size() && e[at + 1] == i,
            "stirling_to_coding: largest pair not adjacent");
    e.erase(e.begin() + at, e.begin() + at + 2);
    int gap = static_cast<int>(at);
    bool is_y = is_descent_gap(e, gap);
    int rank = 0;
    for (int j = 0; j <= gap; ++j)
      if (is_descent_gap(e, j) == is_y) ++rank;
    w.letters[i - 1] = {rank, is_y};
  }
  require(validate(w).ok, "stirling_to_coding: produced invalid word");
  return w;
}

StirlingPermutation stirling_from_coding(const CodingWord& word) {
  require(validate(word).ok, "stirling_from_coding: invalid coding word");
  std::vector<int> e;
  for (size_t i = 0; i < word.letters.size(); ++i) {
    auto [value, is_y] = word.letters[i];
    int len = static_cast<int>(e.size());
    int gap = -1, rank = 0;
    for (int j = 0; j <= len; ++j) {
      if (is_descent_gap(e, j) == is_y && ++rank == value) {
        gap = j;
        break;
      }
    }
    require(gap >= 0, "stirling_from_coding: gap rank out of range");
    e.insert(e.begin() + gap, 2, static_cast<int>(i) + 1);
  }
  StirlingPermutation p{e};
  require(validate(p).ok, "stirling_from_coding: produced invalid permutation");
  return p;
}

SymmetricTrapezoidalWord coding_to_symtrapezoidal(const CodingWord& word) {
  require(validate(word).ok, "coding_to_symtrapezoidal: invalid coding word");
  SymmetricTrapezoidalWord out;
  if (word.letters.empty()) return out;
  out.entries.push_back(0);
  int y = 0;
  for (size_t i = 1; i < word.letters.size(); ++i) {
    auto [value, is_y] = word.letters[i];
    int b = value - 1;
    if (is_y) {
      --y;
      out.entries.push_back(y - b);
    } else {
      out.entries.push_back(y + b);
    }
  }
  require(validate(out).ok, "coding_to_symtrapezoidal: produced invalid word");
  return out;
}

CodingWord coding_from_symtrapezoidal(const SymmetricTrapezoidalWord& word) {
  require(validate(word).ok, "coding_from_symtrapezoidal: invalid word");
  CodingWord w;
  if (word.entries.empty()) return w;
  w.letters.emplace_back(1, true);
  int y = 0;
  for (size_t i = 1; i < word.entries.size(); ++i) {
    int o = word.entries[i];
    if (o >= y) {
      w.letters.emplace_back(o - y + 1, false);
    } else {
      w.letters.emplace_back(y - 1 - o + 1, true);
      --y;
    }
  }
  require(validate(w).ok, "coding_from_symtrapezoidal: produced invalid coding");
  return w;
}

// ---------------------------------------------------------------------------
// LR-minima split

namespace {

struct BlockCode {
  std::vector<int> support;       // sorted; support[0] is the block minimum
  std::vector<int> flags;         // per non-minimal value, in support order
  std::vector<int> codes;         // c_r in [1, r-1], r = 2..t
};

BlockCode block_encode(const std::vector<int>& block) {
  BlockCode out;
  std::set<int> values(block.begin(), block.end());
  out.support.assign(values.begin(), values.end());
  std::map<int, int> first_pos, second_pos;
  for (size_t i = 0; i < block.size(); ++i) {
    if (!first_pos.count(block[i]))
      first_pos[block[i]] = static_cast<int>(i);
    else
      second_pos[block[i]] = static_cast<int>(i);
  }
  for (size_t r = 1; r < out.support.size(); ++r) {
    int j = out.support[r];
    int fp = first_pos[j];
    int ij = -1;
    for (int i = 0; i < fp; ++i)
      if (block[i] < j) ij = block[i];
    int rank = static_cast<int>(
        std::lower_bound(out.support.begin(), out.support.end(), ij) -
        out.support.begin()) + 1;
    out.codes.push_back(rank);
    out.flags.push_back(second_pos[ij] < fp ? 1 : 0);
  }
  return out;
}

std::vector<int> block_rebuild(const BlockCode& code) {
  const auto& s = code.support;
  std::vector<int> e{s[0], s[0]};
  for (size_t r = 1; r < s.size(); ++r) {
    int ival = s[code.codes[r - 1] - 1];
    int wanted = code.flags[r - 1] ? 2 : 1;
    int seen = 0;
    size_t pos = 0;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == ival && ++seen == wanted) {
        pos = i + 1;
        break;
      }
    }
    e.insert(e.begin() + pos, 2, s[r]);
  }
  return e;
}

// Insertion code <-> permutation over the non-minimal support values:
// value s_r is inserted so that code[r]-1 earlier values precede it.
std::vector<int> perm_from_codes(const std::vector<int>& values,
                                 const std::vector<int>& codes) {
  std::vector<int> perm;
  for (size_t r = 0; r < values.size(); ++r)
    perm.insert(perm.begin() + (codes[r] - 1), values[r]);
  return perm;
}

std::vector<int> codes_from_perm(const std::vector<int>& values,
                                 const std::vector<int>& perm) {
  std::vector<int> codes;
  for (size_t r = 0; r < values.size(); ++r) {
    std::set<int> earlier(values.begin(), values.begin() + r);
    int before = 0;
    for (int x : perm) {
      if (x == values[r]) break;
      if (earlier.count(x)) ++before;
    }
    codes.push_back(before + 1);
  }
  return codes;
}

}  // namespace

LRSplit lr_minima_split(const StirlingPermutation& perm) {
  require(validate(perm).ok && is_standard(perm),
          "lr_minima_split: not a standard Stirling permutation");
  int n = static_cast<int>(perm.entries.size()) / 2;

  // split just before each LR minimum
  std::vector<std::vector<int>> blocks;
  int running = 0;
  for (int e : perm.entries) {
    if (blocks.empty() || e < running) {
      blocks.push_back({});
      running = e;
    }
    blocks.back().push_back(e);
  }

  std::set<int> minima;
  for (const auto& b : blocks) minima.insert(b.front());
  std::vector<int> nonmin;
  for (int v = 1; v <= n; ++v)
    if (!minima.count(v)) nonmin.push_back(v);

  LRSplit out;
  for (const auto& b : blocks) {
    BlockCode code = block_encode(b);
    std::vector<int> rest(code.support.begin() + 1, code.support.end());
    auto pi = perm_from_codes(rest, code.codes);
    out.tau.push_back(code.support[0]);
    out.tau.insert(out.tau.end(), pi.begin(), pi.end());
    for (size_t r = 0; r < rest.size(); ++r)
      if (code.flags[r]) {
        int rank = static_cast<int>(
            std::lower_bound(nonmin.begin(), nonmin.end(), rest[r]) -
            nonmin.begin()) + 1;
        out.subset.push_back(rank);
      }
  }
  std::sort(out.subset.begin(), out.subset.end());
  return out;
}

StirlingPermutation lr_minima_join(const LRSplit& split) {
  int n = static_cast<int>(split.tau.size());
  // blocks of tau, split before each LR minimum
  std::vector<std::vector<int>> blocks;
  int running = 0;
  for (int e : split.tau) {
    if (blocks.empty() || e < running) {
      blocks.push_back({});
      running = e;
    }
    blocks.back().push_back(e);
  }
  std::set<int> minima;
  for (const auto& b : blocks) minima.insert(b.front());
  std::vector<int> nonmin;
  for (int v = 1; v <= n; ++v)
    if (!minima.count(v)) nonmin.push_back(v);
  std::set<int> flagged;  // values, unranked from the subset
  for (int rank : split.subset) {
    require(rank >= 1 && rank <= static_cast<int>(nonmin.size()),
            "lr_minima_join: subset rank out of range");
    flagged.insert(nonmin[rank - 1]);
  }

  StirlingPermutation out;
  for (const auto& b : blocks) {
    BlockCode code;
    code.support = b;
    std::sort(code.support.begin(), code.support.end());
    std::vector<int> rest(code.support.begin() + 1, code.support.end());
    std::vector<int> pi(b.begin() + 1, b.end());
    code.codes = codes_from_perm(rest, pi);
    for (int v : rest) code.flags.push_back(flagged.count(v) ? 1 : 0);
    auto e = block_rebuild(code);
    out.entries.insert(out.entries.end(), e.begin(), e.end());
  }
  require(validate(out).ok, "lr_minima_join: produced invalid permutation");
  return out;
}

// ---------------------------------------------------------------------------
// fertility tree

IncreasingOrderedTree fertility_tree(const HeightLabeledDyckPath& path) {
  require(validate(path).ok, "fertility_tree: invalid path");
  int n = static_cast<int>(path.labels.size());
  // downsteps before each upstep
  std::vector<int> before(n, 0);
  {
    int downs = 0, up = 0;
    for (char s : path.steps) {
      if (s == 'U')
        before[up++] = downs;
      else
        ++downs;
    }
  }
  std::vector<std::pair<int, int>> edges(n + 1);  // edges[i] for upstep i
  std::vector<char> has_parent(n + 1, 0);
  for (int i = n; i >= 1; --i) {
    int parent = before[i - 1];
    int want = path.labels[i - 1];
    int child = -1, seen = 0;
    for (int c = parent + 1; c <= n; ++c) {
      if (has_parent[c]) continue;
      if (++seen == want) {
        child = c;
        break;
      }
    }
    require(child >= 0, "fertility_tree: candidate rank out of range");
    has_parent[child] = 1;
    edges[i] = {parent, child};
  }
  IncreasingOrderedTree out;
  out.children.assign(n + 1, {});
  for (int i = 1; i <= n; ++i)
    out.children[edges[i].first].push_back(edges[i].second);
  require(validate(out).ok, "fertility_tree: produced invalid tree");
  return out;
}

HeightLabeledDyckPath fertility_tree_inverse(const IncreasingOrderedTree& tree) {
  require(validate(tree).ok, "fertility_tree_inverse: invalid tree");
  int n = tree.size();
  auto edges = standard_edge_list(tree);

  HeightLabeledDyckPath p;
  p.labels.assign(n, 0);
  for (int i = 1; i <= n; ++i) {
    p.steps.push_back('U');
    int next_parent = i < n ? edges[i].first : n;
    int here = edges[i - 1].first;
    require(next_parent >= here, "fertility_tree_inverse: parents not sorted");
    p.steps.append(next_parent - here, 'D');
  }
  // leading downsteps are impossible: the first standard edge has parent 0
  std::vector<char> has_parent(n + 1, 0);
  for (int i = n; i >= 1; --i) {
    auto [parent, child] = edges[i - 1];
    int seen = 0;
    for (int c = parent + 1; c <= n; ++c) {
      if (has_parent[c]) continue;
      ++seen;
      if (c == child) break;
    }
    has_parent[child] = 1;
    p.labels[i - 1] = seen;
  }
  require(validate(p).ok, "fertility_tree_inverse: produced invalid path");
  return p;
}

// ---------------------------------------------------------------------------
// max-before-first-one lifting

StirlingPermutation maxrec_step(const StirlingPermutation& perm, int slot) {
  require(validate(perm).ok && is_standard(perm),
          "maxrec_step: not a standard Stirling permutation");
  int n = static_cast<int>(perm.entries.size()) / 2 + 1;
  require(slot >= 1 && slot <= 2 * n - 1, "maxrec_step: slot out of range");

  // current max-before-first-one must be k-1 with 3 <= k <= n
  {
    int m = 0;
    for (int e : perm.entries) {
      if (e == 1) break;
      m = std::max(m, e);
    }
    int mm = m == 0 ? n : m;  // n-1 size permutation starting with 1 -> (n-1)+1
    require(mm >= 2 && mm <= n - 1, "maxrec_step: max-before-first-one out of range");
  }

  std::vector<int> e;
  for (int x : perm.entries) e.push_back(x >= 2 ? x + 1 : x);
  e.insert(e.begin() + (slot - 1), 2, 2);

  int cur = 2;
  for (int iter = 0; iter <= n; ++iter) {
    require(iter < n, "maxrec_step: interchange cascade exceeded its bound");
    size_t end = std::find(e.begin(), e.end(), cur) - e.begin();
    std::map<int, int> count;
    for (size_t i = 0; i <= end; ++i) ++count[e[i]];
    int next = 0;
    for (auto [v, c] : count)
      if (v > cur && c == 1) {
        next = v;
        break;
      }
    if (next == 0) break;
    for (int& x : e)
      x = x == cur ? next : (x == next ? cur : x);
    cur = next;
  }
  StirlingPermutation out{e};
  require(validate(out).ok, "maxrec_step: cascade did not restore the property");
  return out;
}

// ---------------------------------------------------------------------------
// sign-reversing involution

std::optional<PerfectMatching> pfaffian_involution(const PerfectMatching& m) {
  require(validate(m).ok, "pfaffian_involution: invalid matching");
  for (size_t i = 0; i + 1 < m.pairs.size(); ++i) {
    if (m.pairs[i].second != m.pairs[i].first + 1) {
      PerfectMatching out = m;
      std::swap(out.pairs[i].second, out.pairs[i + 1].second);
      require(validate(out).ok, "pfaffian_involution: produced invalid matching");
      return out;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// CLI registry

namespace {

using nlohmann::json;

template <typename T>
T parse_as(Family fam, const std::string& text, const char* what) {
  auto obj = parse_object({fam, 0}, text);
  if (!obj || !std::holds_alternative<T>(*obj))
    throw std::invalid_argument(std::string("cannot parse ") + what);
  return std::get<T>(*obj);
}

json split_pair_json(const SplitPair& sp) {
  json j;
  json x = json::array();
  for (const auto& tag : sp.x)
    x.push_back(std::to_string(tag.value) + (tag.is_vertex ? "V" : "E"));
  j["X"] = x;
  json edges = json::array();
  for (auto [p, c] : standard_edge_list(sp.t0))
    edges.push_back(json::array({p, c}));
  j["edges"] = edges;
  return j;
}

SplitPair split_pair_from_json(const std::string& text) {
  json j = json::parse(text);
  SplitPair sp;
  for (const auto& tag : j.at("X")) {
    std::string s = tag.get<std::string>();
    SplitTag t;
    t.is_vertex = s.back() == 'V';
    t.value = std::stoi(s.substr(0, s.size() - 1));
    sp.x.push_back(t);
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  sp.t0 = tree_from_edge_list(edges);
  return sp;
}

std::string tree_text(const IncreasingOrderedTree& t) {
  return canonical_text(CombObject(t));
}

}  // namespace

const std::vector<BijectionInfo>& bijection_cli_registry() {
  static const std::vector<BijectionInfo> reg = [] {
    std::vector<BijectionInfo> r;
    auto tree_in = [](const std::string& s) {
      return parse_as<IncreasingOrderedTree>(Family::kIncreasingOrderedTree, s,
                                             "increasing ordered tree");
    };
    auto stirling_in = [](const std::string& s) {
      return parse_as<StirlingPermutation>(Family::kStirlingPermutation, s,
                                           "stirling permutation");
    };
    auto hld_in = [](const std::string& s) {
      return parse_as<HeightLabeledDyckPath>(Family::kHeightLabeledDyckPath, s,
                                             "height-labeled path");
    };
    auto coding_in = [](const std::string& s) {
      auto w = parse_coding_word(s);
      if (!w) throw std::invalid_argument("cannot parse coding word");
      return *w;
    };

    r.push_back({"janson", "increasing-ordered-tree", "stirling-permutation",
                 [=](const std::string& s) {
                   return canonical_text(CombObject(janson(tree_in(s))));
                 },
                 [=](const std::string& s) {
                   return tree_text(janson_inverse(stirling_in(s)));
                 }});
    r.push_back(
        {"accordion", "hl-ordered-tree", "hl-dyck-path",
         [](const std::string& s) {
           auto o = parse_object({Family::kHeightLabeledOrderedTree, 0}, s);
           if (!o) throw std::invalid_argument("cannot parse hl-ordered-tree");
           return canonical_text(
               CombObject(accordion(std::get<HeightLabeledOrderedTree>(*o))));
         },
         [=](const std::string& s) {
           return canonical_text(CombObject(accordion_inverse(hld_in(s))));
         }});
    r.push_back({"overhang-to-trapezoidal", "overhang-path", "trapezoidal",
                 [](const std::string& s) {
                   auto p = parse_as<OverhangPath>(Family::kOverhangPath, s,
                                                   "overhang path");
                   return canonical_text(CombObject(overhang_to_trapezoidal(p)));
                 },
                 [](const std::string& s) {
                   auto w = parse_as<TrapezoidalWord>(Family::kTrapezoidal, s,
                                                      "trapezoidal word");
                   return canonical_text(CombObject(overhang_from_trapezoidal(w)));
                 }});
    r.push_back({"hldyck-to-matching", "hl-dyck-path", "perfect-matching",
                 [=](const std::string& s) {
                   return canonical_text(CombObject(hldyck_to_matching(hld_in(s))));
                 },
                 [](const std::string& s) {
                   auto m = parse_as<PerfectMatching>(Family::kPerfectMatching,
                                                      s, "perfect matching");
                   return canonical_text(CombObject(hldyck_from_matching(m)));
                 }});
    r.push_back({"rightpath-split", "increasing-ordered-tree + k",
                 "(X, standard tree)",
                 [=](const std::string& s) {
                   json j = json::parse(s);
                   std::vector<std::pair<int, int>> edges;
                   for (const auto& e : j.at("edges"))
                     edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
                   auto sp = rightpath_split(tree_from_edge_list(edges),
                                             j.at("k").get<int>());
                   return split_pair_json(sp).dump();
                 },
                 [](const std::string& s) {
                   return tree_text(
                       rightpath_split_inverse(split_pair_from_json(s)));
                 }});
    r.push_back({"rightpath-to-rootchildren", "increasing-ordered-tree + k",
                 "increasing-ordered-tree",
                 [=](const std::string& s) {
                   json j = json::parse(s);
                   std::vector<std::pair<int, int>> edges;
                   for (const auto& e : j.at("edges"))
                     edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
                   return tree_text(rightpath_to_rootchildren(
                       tree_from_edge_list(edges), j.at("k").get<int>()));
                 },
                 [=](const std::string& s) {
                   auto [t, k] = rootchildren_to_rightpath(tree_in(s));
                   json j;
                   json edges = json::array();
                   for (auto [p, c] : standard_edge_list(t))
                     edges.push_back(json::array({p, c}));
                   j["edges"] = edges;
                   j["k"] = k;
                   return j.dump();
                 }});
    r.push_back({"firstascent-tree", "hl-dyck-path", "increasing-ordered-tree",
                 [=](const std::string& s) {
                   return tree_text(firstascent_tree(hld_in(s)));
                 },
                 [=](const std::string& s) {
                   return canonical_text(
                       CombObject(firstascent_tree_inverse(tree_in(s))));
                 }});
    r.push_back({"phi", "stirling-permutation", "stirling-permutation",
                 [=](const std::string& s) {
                   return canonical_text(CombObject(phi(stirling_in(s))));
                 },
                 [=](const std::string& s) {
                   return canonical_text(CombObject(phi(stirling_in(s))));
                 }});
    r.push_back({"stirling-to-trapezoidal", "stirling-permutation",
                 "trapezoidal",
                 [=](const std::string& s) {
                   return canonical_text(
                       CombObject(stirling_to_trapezoidal(stirling_in(s))));
                 },
                 [](const std::string& s) {
                   auto w = parse_as<TrapezoidalWord>(Family::kTrapezoidal, s,
                                                      "trapezoidal word");
                   return canonical_text(CombObject(stirling_from_trapezoidal(w)));
                 }});
    r.push_back({"hldyck-to-coding", "hl-dyck-path", "coding-word",
                 [=](const std::string& s) {
                   return coding_word_text(hldyck_to_coding(hld_in(s)));
                 },
                 [=](const std::string& s) {
                   return canonical_text(CombObject(hldyck_from_coding(coding_in(s))));
                 }});
    r.push_back({"stirling-to-coding", "stirling-permutation", "coding-word",
                 [=](const std::string& s) {
                   return coding_word_text(stirling_to_coding(stirling_in(s)));
                 },
                 [=](const std::string& s) {
                   return canonical_text(
                       CombObject(stirling_from_coding(coding_in(s))));
                 }});
    r.push_back({"coding-to-symtrapezoidal", "coding-word",
                 "symmetric-trapezoidal",
                 [=](const std::string& s) {
                   return canonical_text(
                       CombObject(coding_to_symtrapezoidal(coding_in(s))));
                 },
                 [](const std::string& s) {
                   auto w = parse_as<SymmetricTrapezoidalWord>(
                       Family::kSymmetricTrapezoidal, s, "symmetric word");
                   return coding_word_text(coding_from_symtrapezoidal(w));
                 }});
    r.push_back({"lr-minima-split", "stirling-permutation", "(A, tau)",
                 [=](const std::string& s) {
                   auto sp = lr_minima_split(stirling_in(s));
                   json j;
                   j["A"] = sp.subset;
                   j["tau"] = sp.tau;
                   return j.dump();
                 },
                 [](const std::string& s) {
                   json j = json::parse(s);
                   LRSplit sp;
                   sp.subset = j.at("A").get<std::vector<int>>();
                   sp.tau = j.at("tau").get<std::vector<int>>();
                   return canonical_text(CombObject(lr_minima_join(sp)));
                 }});
    r.push_back({"fertility-tree", "hl-dyck-path", "increasing-ordered-tree",
                 [=](const std::string& s) {
                   return tree_text(fertility_tree(hld_in(s)));
                 },
                 [=](const std::string& s) {
                   return canonical_text(
                       CombObject(fertility_tree_inverse(tree_in(s))));
                 }});
    r.push_back({"maxrec-step", "stirling-permutation + slot",
                 "stirling-permutation",
                 [](const std::string& s) {
                   json j = json::parse(s);
                   StirlingPermutation p{j.at("perm").get<std::vector<int>>()};
                   return canonical_text(
                       CombObject(maxrec_step(p, j.at("slot").get<int>())));
                 },
                 {}});
    r.push_back({"pfaffian-involution", "perfect-matching", "perfect-matching",
                 [](const std::string& s) {
                   auto m = parse_as<PerfectMatching>(Family::kPerfectMatching,
                                                      s, "perfect matching");
                   auto res = pfaffian_involution(m);
                   return res ? canonical_text(CombObject(*res))
                              : std::string("fixed-point");
                 },
                 [](const std::string& s) {
                   auto m = parse_as<PerfectMatching>(Family::kPerfectMatching,
                                                      s, "perfect matching");
                   auto res = pfaffian_involution(m);
                   return res ? canonical_text(CombObject(*res))
                              : std::string("fixed-point");
                 }});
    return r;
  }();
  return reg;
}

}  // namespace ddf
