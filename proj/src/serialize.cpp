#include "ddf/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace ddf {

using nlohmann::json;

std::optional<FamilySpec> parse_family(const std::string& id) {
  std::string base = id;
  int param = 0;
  auto colon = id.find(':');
  if (colon != std::string::npos) {
    base = id.substr(0, colon);
    try {
      param = std::stoi(id.substr(colon + 1));
    } catch (...) {
      return std::nullopt;
    }
    if (param < 0) return std::nullopt;
  }
  auto mk = [param](Family f) { return FamilySpec{f, param}; };
  if (base == "trapezoidal") return mk(Family::kTrapezoidal);
  if (base == "symmetric-trapezoidal") return mk(Family::kSymmetricTrapezoidal);
  if (base == "perfect-matching" || base == "matching")
    return mk(Family::kPerfectMatching);
  if (base == "stirling-permutation" || base == "stirling")
    return mk(Family::kStirlingPermutation);
  if (base == "increasing-ordered-tree" || base == "tree")
    return mk(Family::kIncreasingOrderedTree);
  if (base == "leaf-labeled-02-tree" || base == "02-tree")
    return mk(Family::kLeafLabeled02Tree);
  if (base == "hl-dyck-path" || base == "hl-dyck")
    return mk(Family::kHeightLabeledDyckPath);
  if (base == "hl-ordered-tree") return mk(Family::kHeightLabeledOrderedTree);
  if (base == "overhang-path" || base == "overhang")
    return mk(Family::kOverhangPath);
  if (base == "udf-bicolored") return mk(Family::kBicoloredUDF);
  if (base == "ud-walk") return mk(Family::kUDWalk);
  return std::nullopt;
}

std::string family_id(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kTrapezoidal:
      return "trapezoidal";
    case Family::kSymmetricTrapezoidal:
      return "symmetric-trapezoidal";
    case Family::kPerfectMatching:
      return "perfect-matching";
    case Family::kStirlingPermutation:
      return "stirling-permutation";
    case Family::kIncreasingOrderedTree:
      return "increasing-ordered-tree";
    case Family::kLeafLabeled02Tree:
      return "leaf-labeled-02-tree";
    case Family::kHeightLabeledDyckPath:
      return "hl-dyck-path";
    case Family::kHeightLabeledOrderedTree:
      return "hl-ordered-tree";
    case Family::kOverhangPath:
      return "overhang-path";
    case Family::kBicoloredUDF:
      return "udf-bicolored:" + std::to_string(spec.param);
    case Family::kUDWalk:
      return "ud-walk";
  }
  return "";
}

Family family_of(const CombObject& o) {
  struct V {
    Family operator()(const TrapezoidalWord&) { return Family::kTrapezoidal; }
    Family operator()(const SymmetricTrapezoidalWord&) {
      return Family::kSymmetricTrapezoidal;
    }
    Family operator()(const PerfectMatching&) {
      return Family::kPerfectMatching;
    }
    Family operator()(const StirlingPermutation&) {
      return Family::kStirlingPermutation;
    }
    Family operator()(const IncreasingOrderedTree&) {
      return Family::kIncreasingOrderedTree;
    }
    Family operator()(const LeafLabeled02Tree&) {
      return Family::kLeafLabeled02Tree;
    }
    Family operator()(const HeightLabeledDyckPath&) {
      return Family::kHeightLabeledDyckPath;
    }
    Family operator()(const HeightLabeledOrderedTree&) {
      return Family::kHeightLabeledOrderedTree;
    }
    Family operator()(const OverhangPath&) { return Family::kOverhangPath; }
    Family operator()(const BicoloredUDFPath&) { return Family::kBicoloredUDF; }
    Family operator()(const UDWalk&) { return Family::kUDWalk; }
  };
  return std::visit(V{}, o);
}

std::vector<FamilySpec> core_families() {
  return {
      {Family::kTrapezoidal},        {Family::kSymmetricTrapezoidal},
      {Family::kPerfectMatching},    {Family::kStirlingPermutation},
      {Family::kIncreasingOrderedTree}, {Family::kLeafLabeled02Tree},
      {Family::kHeightLabeledDyckPath}, {Family::kHeightLabeledOrderedTree},
      {Family::kOverhangPath},
  };
}

namespace {

std::vector<std::int64_t> key_of_steps(const std::string& steps,
                                       const std::string& alphabet) {
  std::vector<std::int64_t> key;
  for (char s : steps) key.push_back(alphabet.find(s));
  return key;
}

void key_02(const LeafLabeled02Tree& t, int node, std::vector<std::int64_t>& k) {
  const auto& nd = t.nodes[node];
  if (nd.left < 0) {
    k.push_back(nd.label);
  } else {
    k.push_back(0);
    key_02(t, nd.left, k);
    key_02(t, nd.right, k);
  }
}

void key_hlt(const HeightLabeledOrderedTree& t, int v,
             std::vector<std::int64_t>& shape, std::vector<std::int64_t>& lab) {
  for (int k : t.v[v].kids) {
    shape.push_back(0);
    lab.push_back(t.v[k].hlabel);
    key_hlt(t, k, shape, lab);
    shape.push_back(1);
  }
}

std::string word_text(const std::vector<int>& entries) {
  if (entries.empty()) return "()";
  bool compact = std::all_of(entries.begin(), entries.end(),
                             [](int e) { return e >= 0 && e <= 9; });
  std::ostringstream out;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (!compact && i) out << ',';
    out << entries[i];
  }
  return out.str();
}

std::optional<std::vector<int>> parse_word_text(const std::string& s) {
  if (s == "()") return std::vector<int>{};
  std::vector<int> entries;
  if (s.find(',') == std::string::npos &&
      std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); })) {
    for (char c : s) entries.push_back(c - '0');
    return entries;
  }
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      entries.push_back(std::stoi(tok));
    } catch (...) {
      return std::nullopt;
    }
  }
  return entries;
}

json json_02(const LeafLabeled02Tree& t, int node) {
  const auto& nd = t.nodes[node];
  if (nd.left < 0) return nd.label;
  return json::array({json_02(t, nd.left), json_02(t, nd.right)});
}

int build_02(const json& j, LeafLabeled02Tree& t) {
  if (j.is_number_integer()) {
    t.nodes.push_back({j.get<int>(), -1, -1});
    return static_cast<int>(t.nodes.size()) - 1;
  }
  int l = build_02(j.at(0), t);
  int r = build_02(j.at(1), t);
  t.nodes.push_back({0, l, r});
  return static_cast<int>(t.nodes.size()) - 1;
}

json json_hlt(const HeightLabeledOrderedTree& t, int v, bool root) {
  json node = json::object();
  if (!root) node["h"] = t.v[v].hlabel;
  json kids = json::array();
  for (int k : t.v[v].kids) kids.push_back(json_hlt(t, k, false));
  node["kids"] = kids;
  return node;
}

int build_hlt(const json& j, HeightLabeledOrderedTree& t, bool root) {
  t.v.push_back({});
  int idx = static_cast<int>(t.v.size()) - 1;
  if (!root) t.v[idx].hlabel = j.at("h").get<int>();
  for (const auto& kid : j.at("kids")) {
    int c = build_hlt(kid, t, false);
    t.v[idx].kids.push_back(c);
  }
  return idx;
}

std::string text_02(const LeafLabeled02Tree& t, int node) {
  const auto& nd = t.nodes[node];
  if (nd.left < 0) return std::to_string(nd.label);
  return "(" + text_02(t, nd.left) + " " + text_02(t, nd.right) + ")";
}

std::string text_hlt(const HeightLabeledOrderedTree& t, int v) {
  std::string s;
  for (size_t i = 0; i < t.v[v].kids.size(); ++i) {
    if (i) s += ' ';
    int k = t.v[v].kids[i];
    s += std::to_string(t.v[k].hlabel);
    if (!t.v[k].kids.empty()) s += "(" + text_hlt(t, k) + ")";
  }
  return s;
}

}  // namespace

std::vector<std::int64_t> canonical_key(const CombObject& o) {
  struct V {
    std::vector<std::int64_t> operator()(const TrapezoidalWord& w) {
      return {w.entries.begin(), w.entries.end()};
    }
    std::vector<std::int64_t> operator()(const SymmetricTrapezoidalWord& w) {
      return {w.entries.begin(), w.entries.end()};
    }
    std::vector<std::int64_t> operator()(const PerfectMatching& m) {
      std::vector<std::int64_t> k;
      for (auto [a, b] : m.pairs) {
        k.push_back(a);
        k.push_back(b);
      }
      return k;
    }
    std::vector<std::int64_t> operator()(const StirlingPermutation& p) {
      return {p.entries.begin(), p.entries.end()};
    }
    std::vector<std::int64_t> operator()(const IncreasingOrderedTree& t) {
      std::vector<std::int64_t> k;
      for (auto [p, c] : standard_edge_list(t)) {
        k.push_back(p);
        k.push_back(c);
      }
      return k;
    }
    std::vector<std::int64_t> operator()(const LeafLabeled02Tree& t) {
      std::vector<std::int64_t> k;
      if (t.root >= 0) key_02(t, t.root, k);
      return k;
    }
    std::vector<std::int64_t> operator()(const HeightLabeledDyckPath& p) {
      auto k = key_of_steps(p.steps, "UD");
      k.insert(k.end(), p.labels.begin(), p.labels.end());
      return k;
    }
    std::vector<std::int64_t> operator()(const HeightLabeledOrderedTree& t) {
      std::vector<std::int64_t> shape, lab;
      if (!t.v.empty()) key_hlt(t, 0, shape, lab);
      shape.insert(shape.end(), lab.begin(), lab.end());
      return shape;
    }
    std::vector<std::int64_t> operator()(const OverhangPath& p) {
      return key_of_steps(p.steps, "UDB");
    }
    std::vector<std::int64_t> operator()(const BicoloredUDFPath& p) {
      return key_of_steps(p.steps, "UDrb");
    }
    std::vector<std::int64_t> operator()(const UDWalk& w) {
      return key_of_steps(w.steps, "UD");
    }
  };
  return std::visit(V{}, o);
}

std::string canonical_text(const CombObject& o) {
  struct V {
    std::string operator()(const TrapezoidalWord& w) {
      return word_text(w.entries);
    }
    std::string operator()(const SymmetricTrapezoidalWord& w) {
      return word_text(w.entries);
    }
    std::string operator()(const PerfectMatching& m) {
      if (m.pairs.empty()) return "()";
      bool compact = 2 * m.pairs.size() <= 9;
      std::ostringstream out;
      for (size_t i = 0; i < m.pairs.size(); ++i) {
        if (i) out << '/';
        if (compact)
          out << m.pairs[i].first << m.pairs[i].second;
        else
          out << m.pairs[i].first << ' ' << m.pairs[i].second;
      }
      return out.str();
    }
    std::string operator()(const StirlingPermutation& p) {
      return word_text(p.entries);
    }
    std::string operator()(const IncreasingOrderedTree& t) {
      auto edges = standard_edge_list(t);
      if (edges.empty()) return "()";
      std::ostringstream out;
      for (auto [p, c] : edges) out << '(' << p << ' ' << c << ')';
      return out.str();
    }
    std::string operator()(const LeafLabeled02Tree& t) {
      return t.root < 0 ? "()" : text_02(t, t.root);
    }
    std::string operator()(const HeightLabeledDyckPath& p) {
      if (p.steps.empty()) return "()";
      std::ostringstream out;
      out << p.steps << ':';
      for (size_t i = 0; i < p.labels.size(); ++i) {
        if (i) out << ',';
        out << p.labels[i];
      }
      return out.str();
    }
    std::string operator()(const HeightLabeledOrderedTree& t) {
      return "(" + text_hlt(t, 0) + ")";
    }
    std::string operator()(const OverhangPath& p) {
      return p.steps.empty() ? "()" : p.steps;
    }
    std::string operator()(const BicoloredUDFPath& p) {
      return p.steps.empty() ? "()" : p.steps;
    }
    std::string operator()(const UDWalk& w) {
      return w.steps.empty() ? "()" : w.steps;
    }
  };
  return std::visit(V{}, o);
}

std::string to_json(const CombObject& o) {
  json j;
  j["schema"] = 1;
  FamilySpec spec{family_of(o), 0};
  struct V {
    json& j;
    void operator()(const TrapezoidalWord& w) { j["entries"] = w.entries; }
    void operator()(const SymmetricTrapezoidalWord& w) {
      j["entries"] = w.entries;
    }
    void operator()(const PerfectMatching& m) {
      json pairs = json::array();
      for (auto [a, b] : m.pairs) pairs.push_back(json::array({a, b}));
      j["pairs"] = pairs;
    }
    void operator()(const StirlingPermutation& p) { j["entries"] = p.entries; }
    void operator()(const IncreasingOrderedTree& t) {
      json edges = json::array();
      for (auto [p, c] : standard_edge_list(t))
        edges.push_back(json::array({p, c}));
      j["edges"] = edges;
    }
    void operator()(const LeafLabeled02Tree& t) {
      j["tree"] = t.root < 0 ? json() : json_02(t, t.root);
    }
    void operator()(const HeightLabeledDyckPath& p) {
      j["steps"] = p.steps;
      j["labels"] = p.labels;
    }
    void operator()(const HeightLabeledOrderedTree& t) {
      j["tree"] = json_hlt(t, 0, true);
    }
    void operator()(const OverhangPath& p) { j["steps"] = p.steps; }
    void operator()(const BicoloredUDFPath& p) { j["steps"] = p.steps; }
    void operator()(const UDWalk& w) { j["steps"] = w.steps; }
  };
  std::visit(V{j}, o);
  if (spec.family == Family::kBicoloredUDF) {
    const auto& p = std::get<BicoloredUDFPath>(o);
    int r = 0;
    for (char s : p.steps) r += s == 'U' ? 1 : (s == 'D' ? -1 : 0);
    spec.param = r;
    j["family"] = "udf-bicolored";
    j["end_height"] = r;
  } else {
    j["family"] = family_id(spec);
  }
  return j.dump();
}

std::optional<CombObject> from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (...) {
    return std::nullopt;
  }
  try {
    std::string fam = j.at("family").get<std::string>();
    if (fam == "trapezoidal")
      return CombObject(TrapezoidalWord{j.at("entries").get<std::vector<int>>()});
    if (fam == "symmetric-trapezoidal")
      return CombObject(
          SymmetricTrapezoidalWord{j.at("entries").get<std::vector<int>>()});
    if (fam == "perfect-matching") {
      PerfectMatching m;
      for (const auto& p : j.at("pairs"))
        m.pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
      return CombObject(m);
    }
    if (fam == "stirling-permutation")
      return CombObject(
          StirlingPermutation{j.at("entries").get<std::vector<int>>()});
    if (fam == "increasing-ordered-tree") {
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      return CombObject(tree_from_edge_list(edges));
    }
    if (fam == "leaf-labeled-02-tree") {
      LeafLabeled02Tree t;
      if (!j.at("tree").is_null()) {
        t.root = build_02(j.at("tree"), t);
        canonicalize_02_tree(t);
      }
      return CombObject(t);
    }
    if (fam == "hl-dyck-path")
      return CombObject(HeightLabeledDyckPath{
          j.at("steps").get<std::string>(),
          j.at("labels").get<std::vector<int>>()});
    if (fam == "hl-ordered-tree") {
      HeightLabeledOrderedTree t;
      build_hlt(j.at("tree"), t, true);
      return CombObject(t);
    }
    if (fam == "overhang-path")
      return CombObject(OverhangPath{j.at("steps").get<std::string>()});
    if (fam == "udf-bicolored")
      return CombObject(BicoloredUDFPath{j.at("steps").get<std::string>()});
    if (fam == "ud-walk")
      return CombObject(UDWalk{j.at("steps").get<std::string>()});
  } catch (...) {
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<CombObject> parse_object(const FamilySpec& spec,
                                       const std::string& text) {
  if (!text.empty() && text[0] == '{') {
    auto o = from_json(text);
    if (o && family_of(*o) == spec.family) return o;
    return std::nullopt;
  }
  switch (spec.family) {
    case Family::kTrapezoidal: {
      auto e = parse_word_text(text);
      if (!e) return std::nullopt;
      return CombObject(TrapezoidalWord{*e});
    }
    case Family::kSymmetricTrapezoidal: {
      auto e = parse_word_text(text);
      if (!e) return std::nullopt;
      return CombObject(SymmetricTrapezoidalWord{*e});
    }
    case Family::kStirlingPermutation: {
      auto e = parse_word_text(text);
      if (!e) return std::nullopt;
      return CombObject(StirlingPermutation{*e});
    }
    case Family::kPerfectMatching: {
      PerfectMatching m;
      if (text == "()") return CombObject(m);
      std::istringstream in(text);
      std::string tok;
      while (std::getline(in, tok, '/')) {
        if (tok.size() == 2 && std::isdigit(tok[0]) && std::isdigit(tok[1])) {
          m.pairs.emplace_back(tok[0] - '0', tok[1] - '0');
        } else {
          std::istringstream pin(tok);
          int a, b;
          if (!(pin >> a >> b)) return std::nullopt;
          m.pairs.emplace_back(a, b);
        }
      }
      return CombObject(m);
    }
    case Family::kIncreasingOrderedTree: {
      if (text == "()")
        return CombObject(IncreasingOrderedTree{{{}}});
      std::vector<std::pair<int, int>> edges;
      std::istringstream in(text);
      char ch;
      while (in >> ch) {
        if (ch != '(') return std::nullopt;
        int p, c;
        if (!(in >> p >> c >> ch) || ch != ')') return std::nullopt;
        edges.emplace_back(p, c);
      }
      return CombObject(tree_from_edge_list(edges));
    }
    case Family::kHeightLabeledDyckPath: {
      if (text == "()") return CombObject(HeightLabeledDyckPath{});
      auto colon = text.find(':');
      HeightLabeledDyckPath p;
      p.steps = text.substr(0, colon);
      if (colon != std::string::npos) {
        auto labels = parse_word_text(text.substr(colon + 1));
        if (!labels) return std::nullopt;
        p.labels = *labels;
      }
      return CombObject(p);
    }
    case Family::kOverhangPath:
      return CombObject(OverhangPath{text == "()" ? "" : text});
    case Family::kBicoloredUDF:
      return CombObject(BicoloredUDFPath{text == "()" ? "" : text});
    case Family::kUDWalk:
      return CombObject(UDWalk{text == "()" ? "" : text});
    default:
      return std::nullopt;  // tree variants with heavy structure use JSON
  }
}

}  // namespace ddf
