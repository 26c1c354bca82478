#pragma once

#include <functional>
#include <string>
#include <vector>

#include "combalg/coalgebra.hpp"
#include "combalg/linalg.hpp"
#include "combalg/products.hpp"
#include "combalg/theta.hpp"

namespace combalg {

// A connected infinitesimal-bialgebra view: the associative ._0 product and
// the reduced coproduct, plus a basis enumerator per degree.
template <class B>
struct BialgebraView {
  std::function<Lin<B>(const Lin<B>&, const Lin<B>&)> mul0;
  DeltaFn<B> delta;
  std::function<std::vector<B>(int)> basis;
};

BialgebraView<Perm> mr_view();
BialgebraView<Word> psym_view(const ThetaTable& t);       // surjections, Delta_theta
BialgebraView<Word> kword_view(const ThetaTable& t);      // K-words, Delta_theta
BialgebraView<Word> pqsym_view();                         // parking functions
BialgebraView<Tree> dup_view(const std::vector<std::string>& colors);  // binary trees
BialgebraView<Tree> tree_view(const ThetaTable& t);       // all colored trees
BialgebraView<TWord> twoass_view(const std::vector<std::string>& colors);

// e(x) = sum_{r>=1} (-1)^{r+1} mul0^r Delta^r(x); finite by grading.
template <class B>
Lin<B> euler_e(const BialgebraView<B>& view, const Lin<B>& u) {
  const int n = homogeneous_degree(u);
  if (n <= 0) throw std::invalid_argument("euler_e: needs positive degree");
  Lin<B> out;
  for (int k = 1; k <= n; ++k) {
    Tensor<B> pieces = delta_power_factors(view.delta, u, k);
    Lin<B> folded;
    for (auto& [tup, c] : pieces.terms) {
      Lin<B> prod(tup.front());
      for (std::size_t j = 1; j < tup.size(); ++j) prod = view.mul0(prod, Lin<B>(tup[j]));
      folded += c * prod;
    }
    if (k % 2 == 1)
      out += folded;
    else
      out -= folded;
  }
  return out;
}

// A homogeneous primitive basis with the provenance of each element.
template <class B>
struct PrimBasis {
  int degree = 0;
  std::vector<Lin<B>> elements;
  std::vector<std::string> provenance;
};

// Column-space basis of the Euler idempotent on the degree-n component.
template <class B>
PrimBasis<B> prim_basis(const BialgebraView<B>& view, int n) {
  std::vector<B> basis = view.basis(n);
  std::map<B, int> row_of;
  for (auto& b : basis) row_of.emplace(b, static_cast<int>(row_of.size()));
  PrimBasis<B> out;
  out.degree = n;
  Eliminator elim;
  for (auto& b : basis) {
    Lin<B> image = euler_e(view, Lin<B>(b));
    SparseVec col;
    for (auto& [k, c] : image.terms) col.emplace(row_of.at(k), c);
    if (elim.add_column(std::move(col))) {
      out.elements.push_back(std::move(image));
      out.provenance.push_back("e-image");
    }
  }
  return out;
}

template <class B>
BigInt prim_dimension(const BialgebraView<B>& view, int n) {
  std::vector<B> basis = view.basis(n);
  std::map<B, int> row_of;
  for (auto& b : basis) row_of.emplace(b, static_cast<int>(row_of.size()));
  Eliminator elim;
  for (auto& b : basis) {
    Lin<B> image = euler_e(view, Lin<B>(b));
    SparseVec col;
    for (auto& [k, c] : image.terms) col.emplace(row_of.at(k), c);
    elim.add_column(std::move(col));
  }
  return elim.rank();
}

// x = e(x) + sum e(x_(1)).e(x_(2)) + ...; returned as the tensor of
// primitive pieces, each slot already under e.
template <class B>
Tensor<B> reconstruct(const BialgebraView<B>& view, const Lin<B>& u) {
  const int n = homogeneous_degree(u);
  if (n <= 0) throw std::invalid_argument("reconstruct: needs positive degree");
  Tensor<B> out;
  for (int k = 1; k <= n; ++k) {
    Tensor<B> pieces = delta_power_factors(view.delta, u, k);
    for (auto& [tup, c] : pieces.terms) {
      std::vector<Lin<B>> imgs;
      imgs.reserve(tup.size());
      for (auto& b : tup) imgs.push_back(euler_e(view, Lin<B>(b)));
      // expand the tensor of Lins into basis tuples
      std::vector<std::vector<B>> keys{{}};
      std::vector<Rational> coeffs{c};
      for (auto& img : imgs) {
        std::vector<std::vector<B>> nk;
        std::vector<Rational> nc;
        for (std::size_t t = 0; t < keys.size(); ++t)
          for (auto& [b, v] : img.terms) {
            auto key = keys[t];
            key.push_back(b);
            nk.push_back(std::move(key));
            nc.push_back(coeffs[t] * v);
          }
        keys = std::move(nk);
        coeffs = std::move(nc);
      }
      for (std::size_t t = 0; t < keys.size(); ++t) out.add(keys[t], coeffs[t]);
    }
  }
  return out;
}

// Multiply a reconstruct() output back with ._0; identity check helper.
template <class B>
Lin<B> fold_tensor(const BialgebraView<B>& view, const Tensor<B>& t) {
  Lin<B> out;
  for (auto& [tup, c] : t.terms) {
    Lin<B> prod(tup.front());
    for (std::size_t j = 1; j < tup.size(); ++j) prod = view.mul0(prod, Lin<B>(tup[j]));
    out += c * prod;
  }
  return out;
}

// ---- explicit primitive bases ----------------------------------------------

// E_sigma for irreducible permutations: the L-expression basis of the
// primitives of the permutation bialgebra.
Lin<Perm> E_sigma(const Perm& sigma);

// E_theta(f) for irreducible surjections under a single-per-degree table.
Lin<Word> E_theta(const Word& f, const ThetaTable& t);

// ---- normal forms -----------------------------------------------------------

// Expression trees over generators for the primitive operations.
struct PrimTerm {
  enum class Kind { Generator, Brace, BraceB, OpL, Mu };
  Kind kind = Kind::Generator;
  std::string generator;         // Generator
  Perm gamma;                    // BraceB
  int p = 0;                     // OpL
  std::vector<PrimTerm> args;    // Brace: 2; BraceB: head + ys; OpL: xs + y + z; Mu: n
  friend bool operator==(const PrimTerm& a, const PrimTerm& b);
  bool operator<(const PrimTerm& o) const;
};

std::string to_string(const PrimTerm& t);
int term_degree(const PrimTerm& t, const ThetaTable& table);

// The bijection between irreducible K-words and L-expression terms.
PrimTerm kword_to_term(const CWord& f, const ThetaTable& table);
CWord term_to_kword(const PrimTerm& t, const ThetaTable& table);

// The analogous map for the grafting theory: basis terms to planar trees
// whose root's first child is a leaf.
Tree term_to_tree(const PrimTerm& t, const ThetaTable& table);

// The analogous map for the shuffle theory on irreducible surjections.
PrimTerm pword_to_term(const CWord& f, const ThetaTable& table);

}  // namespace combalg
