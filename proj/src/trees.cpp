#include "combalg/trees.hpp"

#include <algorithm>
#include <stdexcept>

namespace combalg {

int Tree::leaves() const {
  if (is_leaf()) return 1;
  int n = 0;
  for (auto& k : kids) n += k.leaves();
  return n;
}

bool operator<(const Tree& a, const Tree& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return to_string(a) < to_string(b);
}

Tree graft(const Tree& t, int i, const Tree& w) {
  if (i < 0 || i > w.degree()) throw std::invalid_argument("graft: leaf index out of range");
  if (w.is_leaf()) return t;
  Tree r = w;
  int offset = 0;
  for (auto& kid : r.kids) {
    int span = kid.leaves();
    if (i < offset + span) {
      kid = graft(t, i - offset, kid);
      return r;
    }
    offset += span;
  }
  throw std::logic_error("graft: unreachable");
}

Tree multi_graft(const std::vector<Tree>& ts, const Tree& w) {
  if (static_cast<int>(ts.size()) != w.degree() + 1)
    throw std::invalid_argument("multi_graft: arity mismatch");
  Tree r = w;
  for (int i = w.degree(); i >= 0; --i) r = graft(ts[static_cast<std::size_t>(i)], i, r);
  return r;
}

Tree corolla(const std::string& color, int degree) {
  if (degree < 1) throw std::invalid_argument("corolla: degree must be positive");
  return Tree(color, std::vector<Tree>(static_cast<std::size_t>(degree + 1)));
}

Tree vee(const std::string& color, int color_degree, const std::vector<Tree>& ts) {
  if (static_cast<int>(ts.size()) != color_degree + 1)
    throw std::invalid_argument("vee: arity mismatch");
  return Tree(color, ts);
}

TreeDecomposition canonical_decompose(const Tree& t) {
  if (t.is_leaf()) throw std::invalid_argument("canonical_decompose: leaf input");
  return {t.color, t.kids};
}

bool tree_valid(const Tree& t, const ThetaTable& table) {
  if (t.is_leaf()) return true;
  if (!table.has_color(t.color)) return false;
  if (table.color_degree(t.color) != static_cast<int>(t.kids.size()) - 1) return false;
  return std::all_of(t.kids.begin(), t.kids.end(),
                     [&](const Tree& k) { return tree_valid(k, table); });
}

std::vector<Tree> enum_binary_trees(int degree, const std::vector<std::string>& colors) {
  if (degree > 10)
    throw std::invalid_argument("enum_binary_trees: degree exceeds the enumeration cap of 10");
  if (degree == 0) return {Tree::leaf()};
  std::vector<Tree> out;
  for (int l = 0; l < degree; ++l)
    for (auto& left : enum_binary_trees(l, colors))
      for (auto& right : enum_binary_trees(degree - 1 - l, colors))
        for (auto& c : colors) out.push_back(Tree(c, {left, right}));
  return out;
}

std::vector<Tree> enum_trees(int degree, const ThetaTable& table) {
  if (degree > 8) throw std::invalid_argument("enum_trees: degree exceeds the enumeration cap of 8");
  if (degree == 0) return {Tree::leaf()};
  std::vector<Tree> out;
  for (auto& c : table.colors()) {
    int r = c.degree;
    if (r > degree) continue;
    // r+1 children whose degrees sum to degree - r.
    for (auto& comp : compositions_len(degree - r, r + 1, true)) {
      std::vector<std::vector<Tree>> choices;
      for (int d : comp) choices.push_back(enum_trees(d, table));
      std::vector<std::size_t> idx(choices.size(), 0);
      while (true) {
        std::vector<Tree> kids;
        for (std::size_t k = 0; k < choices.size(); ++k) kids.push_back(choices[k][idx[k]]);
        out.push_back(Tree(c.name, std::move(kids)));
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
        if (k == idx.size()) break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt catalan(int m) {
  return factorial(2 * m) / (factorial(m) * factorial(m + 1));
}

BigInt super_catalan(int m) {
  // C_m = C_{m-1} + 2 sum_{i=1}^{m-1} C_i C_{m-1-i}, C_0 = 1; cross-checked
  // against direct enumeration in the tests.
  std::vector<BigInt> c(static_cast<std::size_t>(std::max(m + 1, 2)));
  c[0] = 1;
  c[1] = 1;
  for (int k = 2; k <= m; ++k) {
    BigInt v = c[static_cast<std::size_t>(k - 1)];
    for (int i = 1; i <= k - 1; ++i) v += 2 * c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - 1 - i)];
    c[static_cast<std::size_t>(k)] = v;
  }
  return c[static_cast<std::size_t>(m)];
}

std::string to_string(const Tree& t) {
  if (t.is_leaf()) return "|";
  std::string s = t.color + "[";
  for (std::size_t i = 0; i < t.kids.size(); ++i) {
    if (i) s += ',';
    s += to_string(t.kids[i]);
  }
  return s + "]";
}

namespace {

Tree parse_tree_at(const std::string& s, std::size_t& pos) {
  if (pos >= s.size()) throw std::invalid_argument("parse_tree: unexpected end");
  if (s[pos] == '|') {
    ++pos;
    return Tree::leaf();
  }
  std::size_t start = pos;
  while (pos < s.size() && s[pos] != '[') ++pos;
  if (pos >= s.size()) throw std::invalid_argument("parse_tree: missing '['");
  std::string color = s.substr(start, pos - start);
  if (color.empty()) throw std::invalid_argument("parse_tree: empty color name");
  ++pos;  // '['
  std::vector<Tree> kids;
  while (true) {
    kids.push_back(parse_tree_at(s, pos));
    if (pos >= s.size()) throw std::invalid_argument("parse_tree: missing ']'");
    if (s[pos] == ',') {
      ++pos;
      continue;
    }
    if (s[pos] == ']') {
      ++pos;
      break;
    }
    throw std::invalid_argument("parse_tree: expected ',' or ']'");
  }
  if (kids.size() < 2) throw std::invalid_argument("parse_tree: vertex needs >= 2 inputs");
  return Tree(color, std::move(kids));
}

}  // namespace

Tree parse_tree(const std::string& s) {
  std::size_t pos = 0;
  Tree t = parse_tree_at(s, pos);
  if (pos != s.size()) throw std::invalid_argument("parse_tree: trailing input");
  return t;
}

int LTree::leaves() const {
  if (is_leaf()) return 1;
  int n = 0;
  for (auto& k : kids) n += k.leaves();
  return n;
}

bool operator<(const LTree& a, const LTree& b) {
  int da = a.leaves(), db = b.leaves();
  if (da != db) return da < db;
  return to_string(a) < to_string(b);
}

std::vector<LTree> enum_ltrees(int leaves, const std::vector<std::string>& colors) {
  std::vector<LTree> out;
  if (leaves == 1) {
    for (auto& c : colors) out.push_back(LTree::leaf(c));
    return out;
  }
  for (int arity = 2; arity <= leaves; ++arity)
    for (auto& comp : compositions_len(leaves, arity, false)) {
      std::vector<std::vector<LTree>> choices;
      for (int d : comp) choices.push_back(enum_ltrees(d, colors));
      std::vector<std::size_t> idx(choices.size(), 0);
      while (true) {
        std::vector<LTree> kids;
        for (std::size_t k = 0; k < choices.size(); ++k) kids.push_back(choices[k][idx[k]]);
        out.push_back(LTree::node(std::move(kids)));
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
        if (k == idx.size()) break;
      }
    }
  return out;
}

std::vector<TWord> enum_twords(int degree, const std::vector<std::string>& colors) {
  std::vector<TWord> out;
  for (auto& comp : compositions(degree)) {
    std::vector<std::vector<LTree>> choices;
    for (int d : comp) choices.push_back(enum_ltrees(d, colors));
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
      TWord w;
      for (std::size_t k = 0; k < choices.size(); ++k) w.push_back(choices[k][idx[k]]);
      out.push_back(std::move(w));
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const LTree& t) {
  if (t.is_leaf()) return t.leaf_color;
  std::string s = "*[";
  for (std::size_t i = 0; i < t.kids.size(); ++i) {
    if (i) s += ',';
    s += to_string(t.kids[i]);
  }
  return s + "]";
}

std::string to_string(const TWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '#';
    s += to_string(w[i]);
  }
  return s;
}

namespace {

LTree parse_ltree_at(const std::string& s, std::size_t& pos) {
  if (pos >= s.size()) throw std::invalid_argument("parse_tword: unexpected end");
  if (s[pos] == '*') {
    ++pos;
    if (pos >= s.size() || s[pos] != '[') throw std::invalid_argument("parse_tword: missing '['");
    ++pos;
    std::vector<LTree> kids;
    while (true) {
      kids.push_back(parse_ltree_at(s, pos));
      if (pos >= s.size()) throw std::invalid_argument("parse_tword: missing ']'");
      if (s[pos] == ',') {
        ++pos;
        continue;
      }
      if (s[pos] == ']') {
        ++pos;
        break;
      }
      throw std::invalid_argument("parse_tword: expected ',' or ']'");
    }
    if (kids.size() < 2) throw std::invalid_argument("parse_tword: vertex needs >= 2 inputs");
    return LTree::node(std::move(kids));
  }
  std::size_t start = pos;
  while (pos < s.size() && s[pos] != ',' && s[pos] != ']' && s[pos] != '#') ++pos;
  std::string name = s.substr(start, pos - start);
  if (name.empty()) throw std::invalid_argument("parse_tword: empty leaf color");
  return LTree::leaf(name);
}

}  // namespace

TWord parse_tword(const std::string& s) {
  TWord w;
  std::size_t pos = 0;
  while (true) {
    w.push_back(parse_ltree_at(s, pos));
    if (pos == s.size()) break;
    if (s[pos] != '#') throw std::invalid_argument("parse_tword: expected '#'");
    ++pos;
  }
  return w;
}

}  // namespace combalg
