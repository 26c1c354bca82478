#pragma once

#include <optional>
#include <string>
#include <vector>

#include "combalg/theta.hpp"

namespace combalg {

// The Theta-twisted boundary operator on the free shuffle algebra of
// surjection words (single color per degree).  The number of fibers (the
// weight) rises by one per application.
Lin<Word> boundary(const ThetaTable& t, const Lin<Word>& u);

// Independent route: peel the first fiber and apply the derived rule
// d(x .g y) = d(x) .g y + (-1)^{w(x)} x .g d(y) recursively.
Lin<Word> boundary_leibniz(const ThetaTable& t, const Lin<Word>& u);

// d(d(f)) = 0 for every basis element of degree n; returns a witness
// word on failure.
std::optional<Word> d_squared_witness(const ThetaTable& t, int n);
bool d_squared_check(const ThetaTable& t, int n);

// Weight-graded dimensions, exact boundary ranks, homology and the Euler
// characteristic of the degree-n complex.
struct ComplexReport {
  int n = 0;
  std::vector<int> dims;       // dims[r-1] = |P_n^r|
  std::vector<int> ranks;      // ranks[r-1] = rank of d: weight r -> r+1
  std::vector<int> homology;   // dim ker/im per weight
  BigInt euler;                // sum (-1)^{n-r} dims[r]
};
ComplexReport complex_report(const ThetaTable& t, int n);

std::string to_json(const ComplexReport& r);

}  // namespace combalg
