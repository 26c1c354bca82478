#pragma once

#include <string>
#include <vector>

#include "combalg/lin.hpp"

namespace combalg {

// A permutation in one-line notation: the image (s(1),...,s(n)).
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> w);

  int size() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[static_cast<std::size_t>(i - 1)]; }

  static Perm identity(int n);
  Perm inverse() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) {
    if (a.img.size() != b.img.size()) return a.img.size() < b.img.size();
    return a.img < b.img;
  }
};

inline int degree_of(const Perm& p) { return p.size(); }

// A composition (n1,...,nr) of n; zero parts are permitted only where the
// constructions need them (extended = true).
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p, bool extended = false);

  int total() const;
  int length() const { return static_cast<int>(parts.size()); }
  // Same composition with zero parts removed.
  Composition reduced() const;

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts == b.parts;
  }
};

// (a.b)(i) = a(b(i)); matches the right action f.s with f a permutation.
Perm compose(const Perm& a, const Perm& b);

// Right action of a permutation on a word: (f.s)(i) = f(s(i)).
std::vector<int> act_right(const std::vector<int>& f, const Perm& s);

// Block-diagonal concatenation S_n x S_m -> S_{n+m}.
Perm concat(const Perm& a, const Perm& b);

// Standardization: ranks with ties broken left to right.  For a word with
// distinct letters this is the unique order-isomorphic permutation.
Perm standardize(const std::vector<int>& w);

// gamma is an n-shuffle iff gamma^{-1} is strictly increasing on every
// consecutive value block of the composition.
bool is_shuffle(const Perm& gamma, const Composition& c);

// All shuffles of a composition, in lexicographic order of the one-line word.
std::vector<Perm> enum_shuffles(const Composition& c);

// A shuffle certificate: the permutation together with its block type.
struct ShuffleId {
  Perm gamma;
  Composition blocks;
  Perm inv;

  ShuffleId() = default;
  ShuffleId(Perm g, Composition c);
};

// eps_{n,m} = (n+1,...,n+m,1,...,n), the top (n,m)-shuffle.
Perm epsilon(int n, int m);

// omega_i^{n,m} = eps_{n,i} x 1_{m-i}, the preshuffle insertion shuffle.
Perm omega(int i, int n, int m);

// Unique factorization s = (s1 x s2).gamma with s1 in S_i, s2 in S_{n-i}
// and gamma in Sh(i, n-i).
struct CosetDecomposition {
  Perm left;
  Perm right;
  Perm gamma;
};
CosetDecomposition coset_decompose(const Perm& s, int i);

// Unique factorization gamma = (1_{n1} x eps_{n-n1,m1} x 1_{m-m1}).(g1 x g2)
// of gamma in Sh(n,m), with g1 in Sh(n1,m1) of size r and g2 in
// Sh(n-n1,m-m1) of size n+m-r.
struct DiagonalDecomposition {
  int n1 = 0;
  int m1 = 0;
  Perm g1;
  Perm g2;
};
DiagonalDecomposition diagonal_decompose(const Perm& gamma, int n, int m, int r);

// Unique block data of gamma in Sh(n,m): gamma's word is m1 large letters,
// n1 small, m2 large, ..., nr small, m_{r+1} large, with m1, m_{r+1} >= 0 and
// all interior runs positive.
struct GraftBlocks {
  std::vector<int> n_parts;  // (n1,...,nr), all >= 1
  std::vector<int> m_parts;  // (m1,...,m_{r+1}), ends may be 0
};
GraftBlocks blocks_graft(const Perm& gamma, int n, int m);

// The small-letters-first variant: n1 small, m1 large, n2 small, ...,
// with n1 >= 0 and m_last >= 0.
struct UtilBlocks {
  std::vector<int> n_parts;  // (n1,...,nr), n1 may be 0
  std::vector<int> m_parts;  // (m1,...,mr), mr may be 0
};
UtilBlocks blocks_util(const Perm& gamma, int n, int m);

// Irreducibility under the concatenation product.
bool is_irreducible(const Perm& s);
// Unique maximal factorization into irreducibles under x.
std::vector<Perm> irr_factorize(const Perm& s);
// |Irr_{S_n}| by the recurrence a_n = n! - sum a_i (n-i)!.
BigInt irr_count(int n);

std::vector<Perm> all_perms(int n);
std::vector<Perm> irr_perms(int n);

// All compositions of n into parts >= 1 (k = 0 means any length).
std::vector<std::vector<int>> compositions(int n);
std::vector<std::vector<int>> compositions_len(int n, int k, bool allow_zero);

BigInt factorial(int n);
BigInt binomial(int n, int k);

std::string to_string(const Perm& p);

}  // namespace combalg
