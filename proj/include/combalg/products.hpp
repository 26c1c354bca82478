#pragma once

#include <functional>

#include "combalg/coalgebra.hpp"
#include "combalg/lin.hpp"
#include "combalg/perm.hpp"
#include "combalg/theta.hpp"
#include "combalg/trees.hpp"
#include "combalg/words.hpp"

namespace combalg {

// ---- basis-level products -------------------------------------------------

// x ._gamma y = (x  x  y).gamma for gamma in Sh(|x|,|y|).
Perm mul_gamma(const Perm& x, const Perm& gamma, const Perm& y);
Word mul_gamma(const Word& x, const Perm& gamma, const Word& y);
CWord mul_gamma(const CWord& x, const Perm& gamma, const CWord& y);

// x ._i y = x ._{omega_i^{n,m}} y; the preshuffle insertions.
Perm mul_i(const Perm& x, int i, const Perm& y);
Word mul_i(const Word& x, int i, const Word& y);
CWord mul_i(const CWord& x, int i, const CWord& y);
Tree mul_i(const Tree& x, int i, const Tree& y);  // grafting x at leaf i of y

// Direct word forms of ._i kept as an independent route for tests.
Perm mul_i_direct(const Perm& x, int i, const Perm& y);
Word mul_i_direct(const Word& x, int i, const Word& y);

// The operad substitution product of As[1]: sigma in S_{n+1} replaces the
// letter i+1 of tau in S_{m+1}, larger letters shift by n.
Perm as1_mul(const Perm& sigma, int i, const Perm& tau);
// Reassembly route through the block decomposition, used as a cross-check.
Perm as1_mul_blocks(const Perm& sigma, int i, const Perm& tau);

// Two-associative products on tensor words of leaf-colored trees:
// dot packs both factors' forests under a new root, circ concatenates.
TWord twoass_dot(const TWord& x, const TWord& y);
TWord twoass_circ(const TWord& x, const TWord& y);

// ---- linear-level operations ----------------------------------------------

// A shuffle/preshuffle algebra presented through its operations on linear
// combinations; members may be empty when the theory lacks the operation.
template <class B>
struct AlgebraOps {
  std::function<Lin<B>(const Lin<B>&, const Perm&, const Lin<B>&)> gamma;
  std::function<Lin<B>(const Lin<B>&, int, const Lin<B>&)> insert;  // ._i
  std::function<Lin<B>(const Lin<B>&, const Lin<B>&)> bottom;       // ._0
  std::function<Lin<B>(const Lin<B>&, const Lin<B>&)> top;          // ._top
};

AlgebraOps<Perm> mr_ops();
AlgebraOps<Word> word_ops();
AlgebraOps<CWord> cword_ops();
AlgebraOps<Tree> tree_ops();

// Degree of a homogeneous linear combination (throws on mixed degrees).
template <class B>
int homogeneous_degree(const Lin<B>& u) {
  int d = -1;
  for (auto& [b, c] : u.terms) {
    int db = degree_of(b);
    if (d == -1) d = db;
    if (d != db) throw std::invalid_argument("expected a homogeneous element");
  }
  return d;
}

// {x,y} = x ._top y - x ._0 y.
template <class B>
Lin<B> brace(const AlgebraOps<B>& ops, const Lin<B>& x, const Lin<B>& y) {
  return ops.top(x, y) - ops.bottom(x, y);
}

// Sum over all (n,m)-shuffles.
Lin<Perm> star(const Lin<Perm>& x, const Lin<Perm>& y);
Lin<Word> star(const Lin<Word>& x, const Lin<Word>& y);

// Half-shuffle (dendriform) products carved out of the shuffle sum by the
// last letter: succ keeps gamma(n+m) = n+m, prec keeps gamma(n+m) = n.
Lin<Perm> dendriform_succ(const Lin<Perm>& x, const Lin<Perm>& y);
Lin<Perm> dendriform_prec(const Lin<Perm>& x, const Lin<Perm>& y);

// Duplicial products on trees: x/y = x ._0 y and x\y = x ._top y.
Lin<Tree> duplicial_over(const Lin<Tree>& x, const Lin<Tree>& y);
Lin<Tree> duplicial_under(const Lin<Tree>& x, const Lin<Tree>& y);

// Side conditions of the brace-type operation B_q^gamma with respect to the
// argument degrees (n; m_1..m_q): x starts before y_1 ends and y_q starts
// before x ends, on the inverse (position) side.
bool brace_admissible(const Perm& gamma, int n, const std::vector<int>& ms);

// B_q^gamma(x; y_1..y_q) = x ._gamma (y_1 ._0 ... ._0 y_q).
template <class B>
Lin<B> brace_B(const AlgebraOps<B>& ops, const Perm& gamma, const Lin<B>& x,
               const std::vector<Lin<B>>& ys) {
  if (ys.empty()) throw std::invalid_argument("brace_B: needs at least one right argument");
  std::vector<int> ms;
  for (auto& y : ys) ms.push_back(homogeneous_degree(y));
  if (!brace_admissible(gamma, homogeneous_degree(x), ms))
    throw std::invalid_argument("brace_B: side conditions violated");
  Lin<B> chain = ys.back();
  for (int k = static_cast<int>(ys.size()) - 2; k >= 0; --k)
    chain = ops.bottom(ys[static_cast<std::size_t>(k)], chain);
  return ops.gamma(x, gamma, chain);
}

// L_q^p of the preshuffle theory.
//   q = 0, 0 < p < |y| : z ._p y
//   q = 0, p = |y|     : {y, z}
//   q >= 1             : z ._{p+n}(x_1 ._0 .. ._0 x_q ._0 y)
//                        - x_1 ._0 (z ._{p+n>=2}(x_2 ._0 .. ._0 y)).
template <class B>
Lin<B> op_L(const AlgebraOps<B>& ops, int p, const std::vector<Lin<B>>& xs, const Lin<B>& y,
            const Lin<B>& z) {
  const int ydeg = homogeneous_degree(y);
  if (p < 1 || p > ydeg) throw std::invalid_argument("op_L: index out of range");
  if (xs.empty()) {
    if (p == ydeg) return brace(ops, y, z);
    return ops.insert(z, p, y);
  }
  int n = 0;
  for (auto& x : xs) n += homogeneous_degree(x);
  Lin<B> chain = y;
  for (int k = static_cast<int>(xs.size()) - 1; k >= 1; --k)
    chain = ops.bottom(xs[static_cast<std::size_t>(k)], chain);
  Lin<B> full = ops.bottom(xs[0], chain);
  int n_tail = n - homogeneous_degree(xs[0]);
  return ops.insert(z, p + n, full) - ops.bottom(xs[0], ops.insert(z, p + n_tail, chain));
}

// mu_n of the two-associative theory.
Lin<TWord> op_mu(const std::vector<Lin<TWord>>& xs);

// The shuffle products a grafting bialgebra supports: for gamma with graft
// blocks (n_1..n_r | m_1..m_{r+1}),
//   x ._gamma y = sum x^{n_1} ._{m_1}( ... (x^{n_r} ._{m_1+..+m_r} y) ... )
// summing over Delta_{n_1..n_r}(x).
template <class B>
Lin<B> shuffle_from_grafting(const AlgebraOps<B>& ops, const DeltaFn<B>& delta, const Lin<B>& x,
                             const Perm& gamma, const Lin<B>& y) {
  const int n = homogeneous_degree(x);
  const int m = homogeneous_degree(y);
  if (gamma.size() != n + m || !is_shuffle(gamma, Composition({n, m}, true)))
    throw std::invalid_argument("shuffle_from_grafting: gamma is not an (n,m)-shuffle");
  GraftBlocks b = blocks_graft(gamma, n, m);
  const int r = static_cast<int>(b.n_parts.size());
  Tensor<B> pieces = delta_graded(delta, x, b.n_parts);
  Lin<B> out;
  for (auto& [tup, c] : pieces.terms) {
    Lin<B> acc = y;
    int offset = 0;
    for (int k = 0; k < r; ++k) offset += b.m_parts[static_cast<std::size_t>(k)];
    for (int k = r - 1; k >= 0; --k) {
      acc = ops.insert(Lin<B>(tup[static_cast<std::size_t>(k)]), offset, acc);
      offset -= b.m_parts[static_cast<std::size_t>(k)];
    }
    out += c * acc;
  }
  return out;
}

// The same construction on a nonunital infinitesimal bialgebra, through the
// small-letters-first block decomposition: pieces of x and y interleave
// under the associative product.
template <class B>
Lin<B> shuffle_from_nui(const std::function<Lin<B>(const Lin<B>&, const Lin<B>&)>& mul,
                        const DeltaFn<B>& delta, const Lin<B>& x, const Perm& gamma,
                        const Lin<B>& y) {
  const int n = homogeneous_degree(x);
  const int m = homogeneous_degree(y);
  if (gamma.size() != n + m || !is_shuffle(gamma, Composition({n, m}, true)))
    throw std::invalid_argument("shuffle_from_nui: gamma is not an (n,m)-shuffle");
  UtilBlocks b = blocks_util(gamma, n, m);
  std::vector<int> xparts, yparts;
  for (int v : b.n_parts)
    if (v > 0) xparts.push_back(v);
  for (int v : b.m_parts)
    if (v > 0) yparts.push_back(v);
  Tensor<B> xs = xparts.empty() ? Tensor<B>() : delta_graded(delta, x, xparts);
  Tensor<B> ys = yparts.empty() ? Tensor<B>() : delta_graded(delta, y, yparts);
  // Interleave per the block pattern (x-run, y-run, x-run, ...).
  Lin<B> out;
  auto chain = [&](const std::vector<B>& xt, const std::vector<B>& yt) {
    Lin<B> acc;
    std::size_t xi = 0, yi = 0;
    bool first = true;
    for (std::size_t k = 0; k < b.n_parts.size() || k < b.m_parts.size(); ++k) {
      if (k < b.n_parts.size() && b.n_parts[k] > 0) {
        Lin<B> piece(xt[xi++]);
        acc = first ? piece : mul(acc, piece);
        first = false;
      }
      if (k < b.m_parts.size() && b.m_parts[k] > 0) {
        Lin<B> piece(yt[yi++]);
        acc = first ? piece : mul(acc, piece);
        first = false;
      }
    }
    return acc;
  };
  for (auto& [xt, cx] : xs.terms)
    for (auto& [yt, cy] : ys.terms) out += (cx * cy) * chain(xt, yt);
  return out;
}

}  // namespace combalg
