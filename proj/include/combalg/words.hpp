#pragma once

#include <string>
#include <vector>

#include "combalg/perm.hpp"

namespace combalg {

// A function word f: {1..n} -> {1..cod}, stored as its image (f(1),...,f(n)).
struct Word {
  std::vector<int> w;
  int cod = 0;

  Word() = default;
  Word(std::vector<int> letters, int codomain);
  // Codomain defaults to the largest letter.
  static Word packed(std::vector<int> letters);

  int size() const { return static_cast<int>(w.size()); }
  int operator()(int i) const { return w[static_cast<std::size_t>(i - 1)]; }

  friend bool operator==(const Word& a, const Word& b) { return a.w == b.w && a.cod == b.cod; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b) {
    if (a.w.size() != b.w.size()) return a.w.size() < b.w.size();
    if (a.w != b.w) return a.w < b.w;
    return a.cod < b.cod;
  }
};

inline int degree_of(const Word& f) { return f.size(); }

bool is_surjection(const Word& f);
// Between two equal letters every letter is <= that value.
bool is_kword(const Word& f);
// The nondecreasing rearrangement satisfies f^(i) <= i.
bool is_parking(const Word& f);
bool is_prime_parking(const Word& f);

struct WordFlags {
  bool function = false;
  bool surjection = false;
  bool kword = false;
  bool parking = false;
  bool prime_parking = false;
};
WordFlags classify(const Word& f);

// The constant word xi_n = (1,...,1).
Word xi(int n);
// xi_{n1} x ... x xi_{nr} for a composition.
Word xi_word(const Composition& c);

// Fiber sizes (|f^-1(1)|,...,|f^-1(cod)|) of a surjection.
Composition fibers(const Word& f);

// Unique f = f_up . sigma with f_up nondecreasing and sigma in Sh(fibers).
struct MonotoneDecomposition {
  Word sorted;
  Perm sigma;
  Composition blocks;
};
MonotoneDecomposition monotone_decompose(const Word& f);

// xi_c . delta; the coset-to-surjection bijection.
Word surjection_from_coset(const Composition& c, const Perm& delta);

// Concatenation F_n^r x F_m^k -> F_{n+m}^{r+k}: g's letters shift by r.
Word word_concat(const Word& f, const Word& g);
// Right action by a permutation of positions.
Word word_act(const Word& f, const Perm& s);
// Relabel letters onto {1..r} preserving order.
Word pack(const Word& f);

// The canonical projection onto parking functions.
Word park(const Word& f);
// b in {0..n} with #{i : f(i) <= b} = b; always contains 0 and n.
std::vector<int> breakpoints(const Word& f);
// Unique f = (f1 x ... x f_{r+1}) . sigma with prime parking factors.
struct ParkingFactorization {
  std::vector<Word> factors;
  Perm sigma;
};
ParkingFactorization prime_factorize(const Word& f);

// Irreducibility under word concatenation.
bool word_irreducible(const Word& f);
std::vector<Word> word_irr_factorize(const Word& f);

std::vector<Word> enum_surjections(int n);
std::vector<Word> enum_kwords(int n);
std::vector<Word> enum_parking(int n);
std::vector<Word> enum_prime_parking(int n);
// All of F_n^n.
std::vector<Word> enum_functions(int n);
std::vector<Word> irr_surjections(int n);
BigInt irr_surjection_count(int n);

std::string to_string(const Word& f);

}  // namespace combalg
