#include <doctest.h>

#include <random>

#include "combalg/coproducts.hpp"
#include "combalg/products.hpp"

using namespace combalg;

TEST_CASE("shuffle products on permutations") {
  CHECK(mul_gamma(Perm({2, 1}), Perm({1, 3, 2}), Perm({1})) == Perm({2, 3, 1}));
  CHECK(mul_gamma(Perm({1}), Perm::identity(2), Perm({1})) == Perm({1, 2}));
  CHECK(mul_gamma(Perm({1}), Perm({2, 1}), Perm({1})) == Perm({2, 1}));
  CHECK_THROWS(mul_gamma(Perm({1}), Perm({1, 3, 2}), Perm({1, 2})));
}

TEST_CASE("derived products") {
  AlgebraOps<Perm> ops = mr_ops();
  Lin<Perm> one(Perm({1}));
  // {(1),(1)} = (2,1) - (1,2)
  Lin<Perm> br = brace(ops, one, one);
  CHECK(br.coeff(Perm({2, 1})) == Rational(1));
  CHECK(br.coeff(Perm({1, 2})) == Rational(-1));
  Lin<Perm> st = star(one, one);
  CHECK(st.coeff(Perm({1, 2})) == Rational(1));
  CHECK(st.coeff(Perm({2, 1})) == Rational(1));
  // ._0 and ._top are associative on basis triples
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int r = 1; a + b + r <= 5 && r <= 2; ++r)
        for (auto& x : all_perms(a))
          for (auto& y : all_perms(b))
            for (auto& z : all_perms(r)) {
              Lin<Perm> lx(x), ly(y), lz(z);
              CHECK(ops.bottom(ops.bottom(lx, ly), lz) == ops.bottom(lx, ops.bottom(ly, lz)));
              CHECK(ops.top(ops.top(lx, ly), lz) == ops.top(lx, ops.top(ly, lz)));
            }
}

TEST_CASE("dendriform split") {
  Lin<Perm> one(Perm({1}));
  CHECK(dendriform_succ(one, one) == Lin<Perm>(Perm({1, 2})));
  CHECK(dendriform_prec(one, one) == Lin<Perm>(Perm({2, 1})));
}

TEST_CASE("preshuffle insertions") {
  CHECK(mul_i(Perm({2, 1}), 1, Perm({1, 2})) == Perm({3, 2, 1, 4}));
  // the colored-word form with a single fiber on the left
  CHECK(mul_i(xi(2), 1, Word::packed({1, 2})).w == std::vector<int>({2, 1, 1, 3}));
  // agrees with the omega reduction everywhere small
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 3; ++m)
      for (auto& x : all_perms(n))
        for (auto& y : all_perms(m))
          for (int i = 0; i <= m; ++i) CHECK(mul_i(x, i, y) == mul_i_direct(x, i, y));
}

TEST_CASE("operad substitution") {
  CHECK(as1_mul(Perm({2, 4, 1, 3}), 1, Perm({1, 3, 2, 5, 4})) ==
        Perm({1, 6, 3, 5, 2, 4, 8, 7}));
  CHECK(as1_mul(Perm({1, 2}), 0, Perm({1, 2})) == Perm({1, 2, 3}));
  CHECK(as1_mul(Perm({2, 1}), 1, Perm({1, 2})) == Perm({1, 3, 2}));
  // the block-decomposition route agrees on random instances
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(rng() % 4);
    int m = static_cast<int>(rng() % 3 + 1);
    auto ss = all_perms(n + 1);
    auto ts = all_perms(m + 1);
    Perm s = ss[rng() % ss.size()];
    Perm t = ts[rng() % ts.size()];
    int i = static_cast<int>(rng() % static_cast<unsigned>(m + 1));
    CHECK(as1_mul(s, i, t) == as1_mul_blocks(s, i, t));
  }
}

TEST_CASE("duplicial products on trees") {
  Tree star_tree = parse_tree("a[|,|]");
  Lin<Tree> s(star_tree);
  CHECK(duplicial_over(s, s) == Lin<Tree>(parse_tree("a[a[|,|],|]")));
  CHECK(duplicial_under(s, s) == Lin<Tree>(parse_tree("a[|,a[|,|]]")));
}

TEST_CASE("two-associative products") {
  TWord e{LTree::leaf("e")};
  TWord dot = twoass_dot(e, e);
  REQUIRE(dot.size() == 1);
  CHECK(to_string(dot[0]) == "*[e,e]");
  TWord circ = twoass_circ(e, e);
  CHECK(circ.size() == 2);
  // degrees add
  CHECK(degree_of(dot[0]) == 2);
  // both products associative on basis triples of total degree <= 4
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; a + b <= 3; ++b)
      for (int r = 1; a + b + r <= 4; ++r)
        for (auto& x : enum_twords(a, {"e"}))
          for (auto& y : enum_twords(b, {"e"}))
            for (auto& z : enum_twords(r, {"e"})) {
              CHECK(twoass_dot(twoass_dot(x, y), z) == twoass_dot(x, twoass_dot(y, z)));
              CHECK(twoass_circ(twoass_circ(x, y), z) == twoass_circ(x, twoass_circ(y, z)));
            }
  // mu_2 and the rearrangement identity
  Lin<TWord> le(e);
  Lin<TWord> mu2 = op_mu({le, le});
  CHECK(mu2.coeff(dot) == Rational(1));
  CHECK(mu2.coeff(circ) == Rational(-1));
}

TEST_CASE("brace-type operation side conditions") {
  // gamma = (1,3,2) in Sh(2,1) admits B(head ; single arg)
  CHECK(brace_admissible(Perm({1, 3, 2}), 2, {1}));
  CHECK_FALSE(brace_admissible(Perm::identity(3), 2, {1}));
  CHECK_FALSE(brace_admissible(epsilon(2, 1), 2, {1}));
  AlgebraOps<Perm> ops = mr_ops();
  Lin<Perm> e21;
  e21.add(Perm({2, 1}), Rational(1));
  e21.add(Perm({1, 2}), Rational(-1));
  Lin<Perm> got = brace_B(ops, Perm({1, 3, 2}), e21, {Lin<Perm>(Perm({1}))});
  Lin<Perm> want;
  want.add(Perm({2, 3, 1}), Rational(1));
  want.add(Perm({1, 3, 2}), Rational(-1));
  CHECK(got == want);
  // primitive under the permutation coproduct
  DeltaFn<Perm> d = [](const Perm& p) { return delta_mr(p); };
  CHECK(delta_lin(d, got).is_zero());
  CHECK_THROWS(brace_B(ops, Perm::identity(3), e21, {Lin<Perm>(Perm({1}))}));
}

TEST_CASE("the L operations") {
  AlgebraOps<Perm> ops = mr_ops();
  Lin<Perm> one(Perm({1}));
  // L_1^1((1);(1);(1)) = (2,3,1) - (1,3,2)
  Lin<Perm> got = op_L(ops, 1, {one}, one, one);
  Lin<Perm> want;
  want.add(Perm({2, 3, 1}), Rational(1));
  want.add(Perm({1, 3, 2}), Rational(-1));
  CHECK(got == want);
  DeltaFn<Perm> d = [](const Perm& p) { return delta_mr(p); };
  CHECK(delta_lin(d, got).is_zero());
  // the top case is the brace
  Lin<Perm> e21;
  e21.add(Perm({2, 1}), Rational(1));
  e21.add(Perm({1, 2}), Rational(-1));
  CHECK(op_L(ops, 2, {}, e21, one) == brace(ops, e21, one));
  CHECK_THROWS(op_L(ops, 3, {}, e21, one));
}

TEST_CASE("shuffle products recovered from grafting") {
  AlgebraOps<Tree> ops = tree_ops();
  DeltaFn<Tree> dpr = [](const Tree& t) { return delta_pr(t); };
  Lin<Tree> s(parse_tree("a[|,|]"));
  // blocks of (2,1) give the single insertion at 1
  Lin<Tree> got = shuffle_from_grafting(ops, dpr, s, Perm({2, 1}), s);
  CHECK(got == Lin<Tree>(parse_tree("a[|,a[|,|]]")));
  CHECK(shuffle_from_grafting(ops, dpr, s, omega(1, 1, 1), s) == ops.insert(s, 1, s));
}
