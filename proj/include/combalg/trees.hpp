#pragma once

#include <string>
#include <vector>

#include "combalg/theta.hpp"

namespace combalg {

// A planar rooted tree whose internal vertices carry colors: a vertex with
// k+1 inputs is colored by a color of degree k.  A leaf has no children.
// Degree is the number of leaves minus one; leaves are numbered 0..degree
// left to right.
struct Tree {
  std::string color;        // empty on leaves
  std::vector<Tree> kids;   // empty on leaves

  Tree() = default;
  Tree(std::string c, std::vector<Tree> children)
      : color(std::move(c)), kids(std::move(children)) {}

  bool is_leaf() const { return kids.empty(); }
  static Tree leaf() { return Tree(); }

  int leaves() const;
  int degree() const { return leaves() - 1; }

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.color == b.color && a.kids == b.kids;
  }
  friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }
};

bool operator<(const Tree& a, const Tree& b);
inline int degree_of(const Tree& t) { return t.degree(); }

// t attached by its root to the i-th leaf of w.
Tree graft(const Tree& t, int i, const Tree& w);
// (t0,...,t_{|w|}) grafted right to left onto the leaves of w.
Tree multi_graft(const std::vector<Tree>& ts, const Tree& w);
// The corolla of a color: one vertex, degree(x)+1 leaves.
Tree corolla(const std::string& color, int degree);
// multi_graft onto the corolla of x.
Tree vee(const std::string& color, int color_degree, const std::vector<Tree>& ts);

// Inverse of vee: the root color and the list of child subtrees.
struct TreeDecomposition {
  std::string color;
  std::vector<Tree> children;
};
TreeDecomposition canonical_decompose(const Tree& t);

// Validates arity-vs-color-degree against a table.
bool tree_valid(const Tree& t, const ThetaTable& table);

// All colored binary trees of the given degree; degree-1 colors only.
std::vector<Tree> enum_binary_trees(int degree, const std::vector<std::string>& colors);
// All colored planar trees of the given degree over the table's family.
std::vector<Tree> enum_trees(int degree, const ThetaTable& table);

BigInt catalan(int m);
// |T_m|: planar rooted trees with m+1 leaves, every vertex >= 2 inputs.
BigInt super_catalan(int m);

std::string to_string(const Tree& t);
Tree parse_tree(const std::string& s);

// A planar tree with colored leaves and uncolored internal vertices of
// arity >= 2; the basis pieces of the two-product tensor algebra.
struct LTree {
  std::string leaf_color;   // set iff leaf
  std::vector<LTree> kids;  // >= 2 on internal vertices

  LTree() = default;
  static LTree leaf(std::string color) {
    LTree t;
    t.leaf_color = std::move(color);
    return t;
  }
  static LTree node(std::vector<LTree> children) {
    LTree t;
    t.kids = std::move(children);
    return t;
  }

  bool is_leaf() const { return kids.empty(); }
  int leaves() const;

  friend bool operator==(const LTree& a, const LTree& b) {
    return a.leaf_color == b.leaf_color && a.kids == b.kids;
  }
};

bool operator<(const LTree& a, const LTree& b);
inline int degree_of(const LTree& t) { return t.leaves(); }

// Nonempty tensor words of leaf-colored trees; degree adds leaf counts.
using TWord = std::vector<LTree>;

std::vector<LTree> enum_ltrees(int leaves, const std::vector<std::string>& colors);
std::vector<TWord> enum_twords(int degree, const std::vector<std::string>& colors);

std::string to_string(const LTree& t);
std::string to_string(const TWord& w);
TWord parse_tword(const std::string& s);

}  // namespace combalg
