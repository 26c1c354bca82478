#pragma once

#include "combalg/coalgebra.hpp"
#include "combalg/perm.hpp"
#include "combalg/theta.hpp"
#include "combalg/trees.hpp"
#include "combalg/words.hpp"

namespace combalg {

// All coproducts are stored reduced: no unit tensor factors, components of
// positive degree unless noted (As[1] genuinely has degree-0 factors).

// Prefix/suffix standardization splits of a permutation.
Tensor<Perm> delta_mr(const Perm& s);

// The Theta-driven coproduct on surjection words over a single-color-per-
// degree family: deconcatenate, pack both sides, weight by the color
// coefficients.
Tensor<Word> delta_theta(const Word& f, const ThetaTable& t);

// The general colored form.
Tensor<CWord> delta_theta(const CWord& f, const ThetaTable& t);

// Park of the two halves of each cut.
Tensor<Word> delta_pqsym(const Word& f);

// The coproduct of planar binary trees (vertex-colored).
Tensor<Tree> delta_pr(const Tree& t);

// The Theta-driven coproduct on colored planar trees.
Tensor<Tree> delta_theta_tree(const Tree& t, const ThetaTable& table);

// The operad coproduct of As[1]: value subwords overlapping at the pivot
// letter; keeps genuine degree-0 factors (elements of S_1).
Tensor<Perm> delta_as1(const Perm& s);

// Literal deconcatenation of letter words (no packing).
Tensor<Word> delta_deconcat(const Word& f);
// The concatenation product matching it (no letter shift).
Word word_juxtapose(const Word& f, const Word& g);

// The coproduct of the free two-product algebra on tensor words.
Tensor<TWord> delta_twoass(const TWord& x);

}  // namespace combalg
