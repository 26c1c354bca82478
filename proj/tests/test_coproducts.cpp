#include <doctest.h>

#include "combalg/coproducts.hpp"
#include "combalg/io.hpp"
#include "combalg/products.hpp"

using namespace combalg;

TEST_CASE("permutation coproduct") {
  CHECK(delta_mr(Perm({1})).is_zero());
  Tensor<Perm> d = delta_mr(Perm({2, 1}));
  REQUIRE(d.size() == 1);
  CHECK(d.coeff({Perm({1}), Perm({1})}) == Rational(1));
  d = delta_mr(Perm({3, 1, 2}));
  CHECK(d.coeff({Perm({1}), Perm({1, 2})}) == Rational(1));
  CHECK(d.coeff({Perm({2, 1}), Perm({1})}) == Rational(1));
  CHECK(d.size() == 2);
  // the unique-decomposition search agrees: sigma = delta.(s1 x s2) with
  // delta^{-1} a shuffle
  for (int n = 2; n <= 4; ++n)
    for (auto& s : all_perms(n))
      for (int r = 1; r < n; ++r) {
        int hits = 0;
        Perm found_l = Perm::identity(r), found_r = Perm::identity(n - r);
        for (auto& a : all_perms(r))
          for (auto& b : all_perms(n - r))
            for (auto& g : all_perms(n)) {
              if (!is_shuffle(g.inverse(), Composition({r, n - r}))) continue;
              if (compose(g, concat(a, b)) == s) {
                ++hits;
                found_l = a;
                found_r = b;
              }
            }
        CHECK(hits == 1);
        CHECK(delta_mr(s).coeff({found_l, found_r}) == Rational(1));
      }
}

TEST_CASE("the worked theta coproduct") {
  ThetaTable t = ThetaTable::default_xi(8);
  Tensor<Word> d = delta_theta(Word::packed({2, 3, 3, 5, 4, 1, 4, 3}), t);
  REQUIRE(d.size() == 7);
  auto term = [&](std::vector<int> a, std::vector<int> b) {
    return d.coeff({Word::packed(std::move(a)), Word::packed(std::move(b))});
  };
  CHECK(term({1}, {2, 2, 4, 3, 1, 3, 2}) == Rational(1));
  CHECK(term({1, 2}, {2, 4, 3, 1, 3, 2}) == Rational(1));
  CHECK(term({1, 2, 2}, {4, 3, 1, 3, 2}) == Rational(1));
  CHECK(term({1, 2, 2, 3}, {3, 1, 3, 2}) == Rational(1));
  CHECK(term({1, 2, 2, 4, 3}, {1, 3, 2}) == Rational(1));
  CHECK(term({2, 3, 3, 5, 4, 1}, {2, 1}) == Rational(1));
  CHECK(term({2, 3, 3, 5, 4, 1, 4}, {1}) == Rational(1));
}

TEST_CASE("parking coproduct") {
  Tensor<Word> d = delta_pqsym(Word({2, 1}, 2));
  REQUIRE(d.size() == 1);
  CHECK(d.coeff({Word({1}, 1), Word({1}, 1)}) == Rational(1));
}

TEST_CASE("binary tree coproduct") {
  CHECK(delta_pr(parse_tree("a[|,|]")).is_zero());
  Tensor<Tree> d = delta_pr(parse_tree("a[a[|,|],|]"));
  REQUIRE(d.size() == 1);
  CHECK(d.coeff({parse_tree("a[|,|]"), parse_tree("a[|,|]")}) == Rational(1));
  // the theta coproduct on trees restricts to it on binary trees
  ThetaTable binary;
  binary.add_color("a", 1);
  for (int n = 1; n <= 5; ++n)
    for (auto& tr : enum_binary_trees(n, {"a"}))
      CHECK(delta_pr(tr) == delta_theta_tree(tr, binary));
  // corolla base case follows the table
  ThetaTable t = ThetaTable::default_xi(4);
  Tensor<Tree> dc = delta_theta_tree(corolla("xi3", 3), t);
  CHECK(dc.size() == 2);
  CHECK(dc.coeff({corolla("xi1", 1), corolla("xi2", 2)}) == Rational(1));
  CHECK(dc.coeff({corolla("xi2", 2), corolla("xi1", 1)}) == Rational(1));
}

TEST_CASE("operad coproduct keeps the degree-0 ends") {
  Tensor<Perm> d = delta_as1(Perm({1, 2}));
  CHECK(d.size() == 2);
  CHECK(d.coeff({Perm({1}), Perm({1, 2})}) == Rational(1));
  CHECK(d.coeff({Perm({1, 2}), Perm({1})}) == Rational(1));
}

TEST_CASE("iterates and graded pieces") {
  DeltaFn<Perm> d = [](const Perm& p) { return delta_mr(p); };
  Lin<Perm> u(Perm({3, 1, 2}));
  CHECK(delta_iter(d, u, 1) == delta_lin(d, u));
  // two more letters cannot split further
  Tensor<Perm> dd = delta_iter(d, u, 2);
  CHECK(dd.coeff({Perm({1}), Perm({1}), Perm({1})}).is_zero() == false);
  CHECK(delta_graded(d, u, {1, 2}).coeff({Perm({1}), Perm({1, 2})}) == Rational(1));
  CHECK(delta_graded(d, u, {2, 1}).coeff({Perm({2, 1}), Perm({1})}) == Rational(1));
}

TEST_CASE("counital closure") {
  DeltaFn<Perm> d = [](const Perm& p) { return delta_mr(p); };
  Lin<Perm> u(Perm({2, 1}));
  UnitalTensor<Perm> dp = delta_plus(d, u);
  CHECK(dp.coeff({std::nullopt, std::optional<Perm>(Perm({2, 1}))}) == Rational(1));
  CHECK(dp.coeff({std::optional<Perm>(Perm({2, 1})), std::nullopt}) == Rational(1));
  CHECK(dp.coeff({std::optional<Perm>(Perm({1})), std::optional<Perm>(Perm({1}))}) == Rational(1));
  // (eps (x) id) Delta_+ = id: collapsing the unit-left terms recovers u
  Lin<Perm> back;
  for (auto& [tup, c] : dp.terms)
    if (!tup[0] && tup[1]) back.add(*tup[1], c);
  CHECK(back == u);
}

TEST_CASE("two-associative coproduct base cases") {
  TWord e{LTree::leaf("e")};
  CHECK(delta_twoass(e).is_zero());
  TWord pair = twoass_circ(e, e);
  Tensor<TWord> d = delta_twoass(pair);
  REQUIRE(d.size() == 1);
  CHECK(d.coeff({e, e}) == Rational(1));
  TWord wedge = twoass_dot(e, e);
  Tensor<TWord> dw = delta_twoass(wedge);
  REQUIRE(dw.size() == 1);
  CHECK(dw.coeff({e, e}) == Rational(1));
}

TEST_CASE("deconcatenation as a plain tensor coalgebra") {
  Word w({1, 2, 1}, 2);
  Tensor<Word> d = delta_deconcat(w);
  CHECK(d.size() == 2);
  CHECK(d.coeff({Word({1}, 2), Word({2, 1}, 2)}) == Rational(1));
  CHECK(d.coeff({Word({1, 2}, 2), Word({1}, 2)}) == Rational(1));
}

TEST_CASE("K-words are closed under the theta coproduct") {
  ThetaTable t = ThetaTable::default_xi(6);
  for (int n = 1; n <= 5; ++n)
    for (auto& f : enum_kwords(n))
      for (auto& [pair, c] : delta_theta(f, t).terms) {
        CHECK(is_kword(pair[0]));
        CHECK(is_kword(pair[1]));
      }
}

TEST_CASE("the unital coproduct closure") {
  DeltaFn<Perm> d = [](const Perm& p) { return delta_mr(p); };
  UnitalTensor<Perm> u = delta_plus_unital(d, Rational(3), Lin<Perm>());
  REQUIRE(u.size() == 1);
  CHECK(u.coeff({std::nullopt, std::nullopt}) == Rational(3));
  UnitalTensor<Perm> v = delta_plus_unital(d, Rational(0), Lin<Perm>(Perm({1})));
  CHECK(v.size() == 2);
}
