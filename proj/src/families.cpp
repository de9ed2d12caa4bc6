#include "ddf/families.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace ddf {

namespace {

template <typename T>
void sort_canonical(std::vector<T>& objects) {
  std::sort(objects.begin(), objects.end(), [](const T& a, const T& b) {
    return canonical_key(CombObject(a)) < canonical_key(CombObject(b));
  });
}

}  // namespace

std::vector<TrapezoidalWord> enumerate_trapezoidal(int n) {
  std::vector<TrapezoidalWord> out;
  TrapezoidalWord w;
  w.entries.assign(n, 1);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(w);
      return;
    }
    for (int v = 1; v <= 2 * i + 1; ++v) {
      w.entries[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<SymmetricTrapezoidalWord> enumerate_symmetric_trapezoidal(int n) {
  std::vector<SymmetricTrapezoidalWord> out;
  SymmetricTrapezoidalWord w;
  w.entries.assign(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(w);
      return;
    }
    for (int v = -i; v <= i; ++v) {
      w.entries[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<PerfectMatching> enumerate_matchings(int n) {
  std::vector<PerfectMatching> out;
  std::vector<char> used(2 * n + 1, 0);
  PerfectMatching m;
  std::function<void()> rec = [&]() {
    int a = 0;
    for (int v = 1; v <= 2 * n; ++v)
      if (!used[v]) {
        a = v;
        break;
      }
    if (a == 0) {
      out.push_back(m);
      return;
    }
    used[a] = 1;
    for (int b = a + 1; b <= 2 * n; ++b) {
      if (used[b]) continue;
      used[b] = 1;
      m.pairs.emplace_back(a, b);
      rec();
      m.pairs.pop_back();
      used[b] = 0;
    }
    used[a] = 0;
  };
  rec();
  sort_canonical(out);
  return out;
}

std::vector<StirlingPermutation> enumerate_stirling(int n) {
  // Plateau insertion: kk goes into one of the 2k-1 gaps of the previous
  // permutation, for k = 2..n.
  std::vector<StirlingPermutation> level;
  if (n == 0) {
    level.push_back({});
  } else {
    level.push_back({{1, 1}});
    for (int k = 2; k <= n; ++k) {
      std::vector<StirlingPermutation> next;
      for (const auto& p : level) {
        for (size_t gap = 0; gap <= p.entries.size(); ++gap) {
          StirlingPermutation q = p;
          q.entries.insert(q.entries.begin() + gap, 2, k);
          next.push_back(std::move(q));
        }
      }
      level = std::move(next);
    }
  }
  sort_canonical(level);
  return level;
}

std::vector<StirlingPermutation> enumerate_stirling_bruteforce(int n) {
  std::vector<int> word;
  for (int i = 1; i <= n; ++i) {
    word.push_back(i);
    word.push_back(i);
  }
  std::vector<StirlingPermutation> out;
  do {
    StirlingPermutation p{word};
    if (validate(p).ok) out.push_back(std::move(p));
  } while (std::next_permutation(word.begin(), word.end()));
  sort_canonical(out);
  return out;
}

std::vector<IncreasingOrderedTree> enumerate_increasing_trees(int n) {
  // Leaf insertion: i enters either as the leftmost child of one of the i
  // vertices or as the immediate right neighbor of one of the i-1 edges.
  std::vector<IncreasingOrderedTree> level;
  level.push_back(IncreasingOrderedTree{{{}}});
  for (int i = 1; i <= n; ++i) {
    std::vector<IncreasingOrderedTree> next;
    for (const auto& t : level) {
      for (int v = 0; v < i; ++v) {
        IncreasingOrderedTree u = t;
        u.children.resize(i + 1);
        u.children[v].insert(u.children[v].begin(), i);
        next.push_back(std::move(u));
      }
      for (int p = 0; p < i; ++p) {
        for (size_t ci = 0; ci < t.children[p].size(); ++ci) {
          IncreasingOrderedTree u = t;
          u.children.resize(i + 1);
          u.children[p].insert(u.children[p].begin() + ci + 1, i);
          next.push_back(std::move(u));
        }
      }
    }
    level = std::move(next);
  }
  sort_canonical(level);
  return level;
}

namespace {

// Ordered tree shapes with m edges, as children tables over preorder ids.
struct Shape {
  std::vector<std::vector<int>> kids;  // indexed by preorder id; root = 0
};

void shapes_rec(int m, std::vector<Shape>& out);

// Forests with m edges total; each forest is a list of shapes.
void forests_rec(int m, std::vector<std::vector<Shape>>& out) {
  out.clear();
  if (m == 0) {
    out.push_back({});
    return;
  }
  for (int j = 0; j + 1 <= m; ++j) {
    std::vector<Shape> firsts;
    shapes_rec(j, firsts);
    std::vector<std::vector<Shape>> rests;
    forests_rec(m - 1 - j, rests);
    for (const auto& f : firsts)
      for (const auto& r : rests) {
        std::vector<Shape> forest;
        forest.push_back(f);
        forest.insert(forest.end(), r.begin(), r.end());
        out.push_back(std::move(forest));
      }
  }
}

// Appends a shape under `parent`, renumbering into `kids`.
int graft(const Shape& s, int node, std::vector<std::vector<int>>& kids) {
  int id = static_cast<int>(kids.size());
  kids.emplace_back();
  for (int c : s.kids[node]) {
    int cid = graft(s, c, kids);
    kids[id].push_back(cid);
  }
  return id;
}

void shapes_rec(int m, std::vector<Shape>& out) {
  out.clear();
  std::vector<std::vector<Shape>> forests;
  forests_rec(m, forests);
  for (const auto& f : forests) {
    Shape s;
    s.kids.emplace_back();
    for (const auto& sub : f) {
      int cid = graft(sub, 0, s.kids);
      s.kids[0].push_back(cid);
    }
    out.push_back(std::move(s));
  }
}

}  // namespace

std::vector<IncreasingOrderedTree> enumerate_increasing_trees_bruteforce(
    int n) {
  std::vector<Shape> shapes;
  shapes_rec(n, shapes);
  std::vector<IncreasingOrderedTree> out;
  std::vector<int> lab(n + 1);
  std::vector<int> perm(n);
  for (const auto& s : shapes) {
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    do {
      lab[0] = 0;
      for (int i = 0; i < n; ++i) lab[i + 1] = perm[i];  // preorder id -> label
      bool ok = true;
      for (int v = 0; v <= n && ok; ++v)
        for (int c : s.kids[v])
          if (lab[c] <= lab[v]) {
            ok = false;
            break;
          }
      if (!ok) continue;
      IncreasingOrderedTree t;
      t.children.assign(n + 1, {});
      for (int v = 0; v <= n; ++v)
        for (int c : s.kids[v]) t.children[lab[v]].push_back(lab[c]);
      out.push_back(std::move(t));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  sort_canonical(out);
  return out;
}

std::vector<LeafLabeled02Tree> enumerate_02_trees(int n) {
  // Leaf m+1 either subdivides an existing edge or tops a new root.
  std::vector<LeafLabeled02Tree> level;
  LeafLabeled02Tree seed;
  seed.nodes.push_back({1, -1, -1});
  seed.root = 0;
  level.push_back(seed);
  for (int m = 1; m <= n; ++m) {
    std::vector<LeafLabeled02Tree> next;
    for (const auto& t : level) {
      // new root over everything
      {
        LeafLabeled02Tree u = t;
        u.nodes.push_back({m + 1, -1, -1});
        int leaf = static_cast<int>(u.nodes.size()) - 1;
        u.nodes.push_back({0, u.root, leaf});
        u.root = static_cast<int>(u.nodes.size()) - 1;
        canonicalize_02_tree(u);
        next.push_back(std::move(u));
      }
      // subdivide each edge (parent -> child slot)
      for (size_t p = 0; p < t.nodes.size(); ++p) {
        if (t.nodes[p].left < 0) continue;
        for (int side = 0; side < 2; ++side) {
          LeafLabeled02Tree u = t;
          int child = side == 0 ? u.nodes[p].left : u.nodes[p].right;
          u.nodes.push_back({m + 1, -1, -1});
          int leaf = static_cast<int>(u.nodes.size()) - 1;
          u.nodes.push_back({0, child, leaf});
          int mid = static_cast<int>(u.nodes.size()) - 1;
          if (side == 0)
            u.nodes[p].left = mid;
          else
            u.nodes[p].right = mid;
          canonicalize_02_tree(u);
          next.push_back(std::move(u));
        }
      }
    }
    level = std::move(next);
  }
  sort_canonical(level);
  return level;
}

std::vector<std::string> enumerate_dyck_words(int n) {
  std::vector<std::string> out;
  std::string w;
  std::function<void(int, int)> rec = [&](int ups, int h) {
    if (static_cast<int>(w.size()) == 2 * n) {
      out.push_back(w);
      return;
    }
    if (ups < n) {
      w.push_back('U');
      rec(ups + 1, h + 1);
      w.pop_back();
    }
    if (h > 0) {
      w.push_back('D');
      rec(ups, h - 1);
      w.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<HeightLabeledDyckPath> enumerate_hl_dyck_bruteforce(int n) {
  std::vector<HeightLabeledDyckPath> out;
  for (const auto& w : enumerate_dyck_words(n)) {
    auto tops = upstep_top_heights(w);
    std::vector<int> labels(n, 1);
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        out.push_back({w, labels});
        return;
      }
      for (int v = 1; v <= tops[i]; ++v) {
        labels[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
  }
  sort_canonical(out);
  return out;
}

std::vector<HeightLabeledDyckPath> enumerate_hl_dyck(int n) {
  // One-vertex split insertion: split at a chosen vertex, insert an upstep
  // labeled 1, raise the labels after it, append a downstep.
  std::vector<HeightLabeledDyckPath> level;
  level.push_back({});
  for (int m = 1; m <= n; ++m) {
    std::vector<HeightLabeledDyckPath> next;
    for (const auto& p : level) {
      int vertices = 2 * (m - 1) + 1;
      for (int v = 0; v < vertices; ++v) {
        HeightLabeledDyckPath q;
        q.steps = p.steps.substr(0, v) + 'U' + p.steps.substr(v) + 'D';
        int ups_before = 0;
        for (int i = 0; i < v; ++i)
          if (p.steps[i] == 'U') ++ups_before;
        q.labels.assign(p.labels.begin(), p.labels.begin() + ups_before);
        q.labels.push_back(1);
        for (size_t i = ups_before; i < p.labels.size(); ++i)
          q.labels.push_back(p.labels[i] + 1);
        next.push_back(std::move(q));
      }
    }
    level = std::move(next);
  }
  sort_canonical(level);
  return level;
}

std::vector<HeightLabeledOrderedTree> enumerate_hl_ordered_trees(int n) {
  std::vector<Shape> shapes;
  shapes_rec(n, shapes);
  std::vector<HeightLabeledOrderedTree> out;
  for (const auto& s : shapes) {
    HeightLabeledOrderedTree skeleton;
    skeleton.v.resize(s.kids.size());
    for (size_t v = 0; v < s.kids.size(); ++v) skeleton.v[v].kids = s.kids[v];
    auto heights = vertex_heights(skeleton);
    std::function<void(size_t, HeightLabeledOrderedTree&)> rec =
        [&](size_t v, HeightLabeledOrderedTree& t) {
          if (v == t.v.size()) {
            out.push_back(t);
            return;
          }
          for (int h = 1; h <= heights[v]; ++h) {
            t.v[v].hlabel = h;
            rec(v + 1, t);
          }
        };
    if (skeleton.v.size() == 1)
      out.push_back(skeleton);
    else
      rec(1, skeleton);
  }
  sort_canonical(out);
  return out;
}

std::vector<OverhangPath> enumerate_overhang(int n) {
  std::vector<OverhangPath> out;
  std::string steps;
  std::set<std::pair<int, int>> visited{{0, 0}};
  std::function<void(int, int, int)> rec = [&](int x, int y, int ups) {
    if (x == 2 * n && y == 0) {
      out.push_back({steps});
      return;  // any continuation either revisits or never returns here
    }
    struct Move {
      char c;
      int dx, dy, du;
    };
    static constexpr Move moves[] = {
        {'U', 1, 1, 1}, {'D', 1, -1, 0}, {'B', -1, 1, 0}};
    for (const auto& mv : moves) {
      int nx = x + mv.dx, ny = y + mv.dy, nu = ups + mv.du;
      if (nx < 0 || ny < 0 || nu > n || nx + ny > 2 * n) continue;
      if (visited.count({nx, ny})) continue;
      visited.insert({nx, ny});
      steps.push_back(mv.c);
      rec(nx, ny, nu);
      steps.pop_back();
      visited.erase({nx, ny});
    }
  };
  rec(0, 0, 0);
  sort_canonical(out);
  return out;
}

std::vector<BicoloredUDFPath> enumerate_udf(int n, int end_height) {
  std::vector<BicoloredUDFPath> out;
  std::string steps;
  std::function<void(int)> rec = [&](int h) {
    int remaining = n - static_cast<int>(steps.size());
    if (remaining == 0) {
      if (h == end_height) out.push_back({steps});
      return;
    }
    if (std::abs(end_height - h) > remaining) return;
    for (char c : {'U', 'D', 'r', 'b'}) {
      steps.push_back(c);
      rec(h + (c == 'U' ? 1 : c == 'D' ? -1 : 0));
      steps.pop_back();
    }
  };
  rec(0);
  sort_canonical(out);
  return out;
}

std::vector<UDWalk> enumerate_ud_walks(int n) {
  std::vector<UDWalk> out;
  std::string steps;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(steps.size()) == 2 * n) {
      out.push_back({steps});
      return;
    }
    for (char c : {'U', 'D'}) {
      steps.push_back(c);
      rec();
      steps.pop_back();
    }
  };
  rec();
  sort_canonical(out);
  return out;
}

std::vector<CombObject> enumerate(const FamilySpec& spec, int n, int bound) {
  if (n < 0) throw std::domain_error("enumerate: negative size");
  if (n > bound) throw std::length_error("enumerate: size exceeds bound");
  auto lift = [](auto&& v) {
    std::vector<CombObject> out;
    out.reserve(v.size());
    for (auto& x : v) out.emplace_back(std::move(x));
    return out;
  };
  switch (spec.family) {
    case Family::kTrapezoidal:
      return lift(enumerate_trapezoidal(n));
    case Family::kSymmetricTrapezoidal:
      return lift(enumerate_symmetric_trapezoidal(n));
    case Family::kPerfectMatching:
      return lift(enumerate_matchings(n));
    case Family::kStirlingPermutation:
      return lift(enumerate_stirling(n));
    case Family::kIncreasingOrderedTree:
      return lift(enumerate_increasing_trees(n));
    case Family::kLeafLabeled02Tree:
      return lift(enumerate_02_trees(n));
    case Family::kHeightLabeledDyckPath:
      return lift(enumerate_hl_dyck(n));
    case Family::kHeightLabeledOrderedTree:
      return lift(enumerate_hl_ordered_trees(n));
    case Family::kOverhangPath:
      return lift(enumerate_overhang(n));
    case Family::kBicoloredUDF:
      return lift(enumerate_udf(n, spec.param));
    case Family::kUDWalk:
      return lift(enumerate_ud_walks(n));
  }
  throw std::domain_error("enumerate: unknown family");
}

ExactInt count_by_enumeration(const FamilySpec& spec, int n, int bound) {
  return ExactInt(static_cast<long>(enumerate(spec, n, bound).size()));
}

}  // namespace ddf
