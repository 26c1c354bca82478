#include <doctest.h>

#include <set>

#include "combalg/coproducts.hpp"
#include "combalg/io.hpp"
#include "combalg/primitives.hpp"

using namespace combalg;

namespace {

Lin<Perm> plin(const std::string& s) { return parse_perm_lin(s); }

}  // namespace

TEST_CASE("the idempotent on permutations") {
  BialgebraView<Perm> v = mr_view();
  CHECK(euler_e(v, Lin<Perm>(Perm({1}))) == Lin<Perm>(Perm({1})));
  CHECK(euler_e(v, Lin<Perm>(Perm({1, 2}))).is_zero());
  CHECK(euler_e(v, Lin<Perm>(Perm({2, 1}))) == plin("2,1 + -1*1,2"));
  CHECK_THROWS(euler_e(v, Lin<Perm>()));
  // e kills products and squares to itself
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; n + m <= 5 && m <= 3; ++m)
      for (auto& x : all_perms(n))
        for (auto& y : all_perms(m))
          CHECK(euler_e(v, v.mul0(Lin<Perm>(x), Lin<Perm>(y))).is_zero());
  for (int n = 1; n <= 4; ++n)
    for (auto& s : all_perms(n)) {
      Lin<Perm> e1 = euler_e(v, Lin<Perm>(s));
      if (!e1.is_zero()) CHECK(euler_e(v, e1) == e1);
    }
}

TEST_CASE("reconstruction from primitives") {
  BialgebraView<Perm> v = mr_view();
  // (1,2) = e((1)) ._0 e((1))
  Tensor<Perm> rec = reconstruct(v, Lin<Perm>(Perm({1, 2})));
  REQUIRE(rec.size() == 1);
  CHECK(rec.coeff({Perm({1}), Perm({1})}) == Rational(1));
  Lin<Perm> prim = plin("2,1 + -1*1,2");
  Tensor<Perm> recp = reconstruct(v, prim);
  CHECK(fold_tensor(v, recp) == prim);
  for (int n = 1; n <= 4; ++n)
    for (auto& s : all_perms(n))
      CHECK(fold_tensor(v, reconstruct(v, Lin<Perm>(s))) == Lin<Perm>(s));
}

TEST_CASE("primitive basis of the permutation bialgebra") {
  BialgebraView<Perm> v = mr_view();
  for (int n = 1; n <= 4; ++n) {
    PrimBasis<Perm> pb = prim_basis(v, n);
    CHECK(BigInt(static_cast<long long>(pb.elements.size())) == irr_count(n));
    DeltaFn<Perm> d = [](const Perm& p) { return delta_mr(p); };
    for (auto& el : pb.elements) {
      CHECK(homogeneous_degree(el) == n);
      CHECK(delta_lin(d, el).is_zero());
    }
  }
}

TEST_CASE("the explicit permutation primitives") {
  CHECK(E_sigma(Perm({1})) == Lin<Perm>(Perm({1})));
  CHECK(E_sigma(Perm({2, 1})) == plin("2,1 + -1*1,2"));
  CHECK(E_sigma(Perm({3, 1, 2})) == plin("3,1,2 + -1*2,1,3"));
  CHECK(E_sigma(Perm({3, 4, 2, 5, 7, 1, 6})) ==
        plin("3,4,2,5,7,1,6 + -1*2,3,1,5,7,4,6 + -1*3,4,2,5,6,1,7 + 2,3,1,5,6,4,7 + "
             "-1*2,4,3,5,7,1,6 + 1,3,2,5,7,4,6 + 2,4,3,5,6,1,7 + -1*1,3,2,5,6,4,7"));
  CHECK_THROWS(E_sigma(Perm({1, 2})));
  // a primitive, linearly independent family of the right size, n <= 5
  DeltaFn<Perm> d = [](const Perm& p) { return delta_mr(p); };
  for (int n = 1; n <= 5; ++n) {
    auto irr = irr_perms(n);
    std::map<Perm, int> row;
    for (auto& p : all_perms(n)) row.emplace(p, static_cast<int>(row.size()));
    Eliminator elim;
    for (auto& s : irr) {
      Lin<Perm> e = E_sigma(s);
      CHECK(delta_lin(d, e).is_zero());
      SparseVec col;
      for (auto& [b, c] : e.terms) col.emplace(row.at(b), c);
      CHECK(elim.add_column(std::move(col)));
    }
    CHECK(BigInt(elim.rank()) == irr_count(n));
  }
}

TEST_CASE("the explicit surjection primitives") {
  ThetaTable t = ThetaTable::default_xi(8);
  auto wlin = [](const std::string& s) { return parse_word_lin(s); };
  CHECK(E_theta(Word::packed({1, 1}), t) == wlin("1,1 + -1*1,2"));
  CHECK(E_theta(Word::packed({2, 1}), t) == wlin("2,1 + -1*1,2"));
  CHECK(E_theta(Word::packed({2, 1, 1}), t) ==
        wlin("2,1,1 + -1*3,1,2 + -1*1,2,2 + 1,2,3"));
  CHECK(E_theta(Word::packed({1, 3, 1, 2, 2}), t) ==
        wlin("1,3,1,2,2 + -1*1,4,1,2,3 + -1*1,2,1,3,3 + 1,2,1,3,4 + -1*1,4,2,3,3 + "
             "1,5,2,3,4 + 1,3,2,4,4 + -1*1,3,2,4,5"));
  // primitive, independent, and as many as the irreducibles, n <= 4
  DeltaFn<Word> d = [t](const Word& f) { return delta_theta(f, t); };
  for (int n = 1; n <= 4; ++n) {
    auto irr = irr_surjections(n);
    std::map<Word, int> row;
    for (auto& f : enum_surjections(n)) row.emplace(f, static_cast<int>(row.size()));
    Eliminator elim;
    for (auto& f : irr) {
      Lin<Word> e = E_theta(f, t);
      CHECK(delta_lin(d, e).is_zero());
      SparseVec col;
      for (auto& [b, c] : e.terms) col.emplace(row.at(b), c);
      CHECK(elim.add_column(std::move(col)));
    }
    CHECK(BigInt(elim.rank()) == irr_surjection_count(n));
  }
}

TEST_CASE("K-word normal forms round trip") {
  ThetaTable t = ThetaTable::default_xi(8);
  // the generator case
  CWord gen = color_word(xi(3), t);
  PrimTerm g = kword_to_term(gen, t);
  CHECK(g.kind == PrimTerm::Kind::Generator);
  CHECK(to_string(g) == "gen(xi3)");
  CHECK(term_to_kword(g, t) == gen);
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> seen;
    long long irr_count_k = 0;
    for (auto& f : enum_kwords(n)) {
      if (!word_irreducible(f)) continue;
      ++irr_count_k;
      CWord cw = color_word(f, t);
      PrimTerm term = kword_to_term(cw, t);
      CHECK(term_degree(term, t) == n);
      CHECK(seen.insert(to_string(term)).second);
      CHECK(term_to_kword(term, t) == cw);
    }
    CHECK(irr_count_k == static_cast<long long>(seen.size()));
  }
}

TEST_CASE("grafting normal forms fill the primitive basis") {
  ThetaTable t = ThetaTable::default_xi(6);
  // all basis terms of a degree: right-nested brace words and grafting
  // chains with weakly decreasing interior spots
  std::function<std::vector<PrimTerm>(int)> brace_words = [&](int n) {
    std::vector<PrimTerm> out;
    PrimTerm g;
    g.kind = PrimTerm::Kind::Generator;
    g.generator = "xi" + std::to_string(n);
    out.push_back(g);
    for (int k = 1; k < n; ++k) {
      PrimTerm head;
      head.kind = PrimTerm::Kind::Generator;
      head.generator = "xi" + std::to_string(k);
      for (auto& rest : brace_words(n - k)) {
        PrimTerm b;
        b.kind = PrimTerm::Kind::Brace;
        b.args = {head, rest};
        out.push_back(b);
      }
    }
    return out;
  };
  std::function<std::vector<PrimTerm>(int)> terms = [&](int n) {
    std::vector<PrimTerm> out = brace_words(n);
    for (int k = 1; k < n; ++k)
      for (auto& y : terms(n - k))
        for (int p = 1; p < n - k; ++p) {
          if (y.kind == PrimTerm::Kind::OpL && y.p > p) continue;  // spots weakly decrease
          PrimTerm z;
          z.kind = PrimTerm::Kind::Generator;
          z.generator = "xi" + std::to_string(k);
          PrimTerm l;
          l.kind = PrimTerm::Kind::OpL;
          l.p = p;
          l.args = {y, z};
          out.push_back(l);
        }
    return out;
  };
  BialgebraView<Tree> v = tree_view(t);
  for (int n = 1; n <= 4; ++n) {
    auto ts = terms(n);
    std::set<Tree> images;
    for (auto& term : ts) {
      Tree tr = term_to_tree(term, t);
      CHECK(tr.degree() == n);
      CHECK(tr.kids.front().is_leaf());
      CHECK(images.insert(tr).second);
    }
    CHECK(BigInt(static_cast<long long>(ts.size())) == prim_dimension(v, n));
  }
}

TEST_CASE("surjection normal forms are injective") {
  ThetaTable t = ThetaTable::default_xi(8);
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> seen;
    for (auto& f : irr_surjections(n)) {
      PrimTerm term = pword_to_term(color_word(f, t), t);
      CHECK(term_degree(term, t) == n);
      CHECK(seen.insert(to_string(term)).second);
    }
    CHECK(seen.size() == irr_surjections(n).size());
  }
}

TEST_CASE("the degree-9 surjection primitive splits through a brace") {
  ThetaTable t = ThetaTable::default_xi(10);
  Word f = Word::packed({3, 2, 4, 1, 6, 4, 1, 5, 5});
  AlgebraOps<Word> ops = word_ops();
  Lin<Word> head = brace(ops, E_theta(Word::packed({2, 1}), t), E_theta(xi(2), t));
  Lin<Word> want =
      ops.gamma(head, Perm({1, 2, 5, 3, 6, 7, 4, 8, 9}), E_theta(Word::packed({1, 3, 1, 2, 2}), t));
  CHECK(E_theta(f, t) == want);
  DeltaFn<Word> d = [t](const Word& g) { return delta_theta(g, t); };
  CHECK(delta_lin(d, E_theta(f, t)).is_zero());
}

TEST_CASE("the idempotent squares to itself on surjections") {
  ThetaTable t = ThetaTable::default_xi(6);
  BialgebraView<Word> v = psym_view(t);
  for (int n = 1; n <= 3; ++n)
    for (auto& f : enum_surjections(n)) {
      Lin<Word> e1 = euler_e(v, Lin<Word>(f));
      if (!e1.is_zero()) CHECK(euler_e(v, e1) == e1);
    }
}

TEST_CASE("degree-6 irreducible factorizations stay primitive") {
  DeltaFn<Perm> d = [](const Perm& p) { return delta_mr(p); };
  for (auto w : {std::vector<int>{5, 1, 4, 6, 3, 2}, std::vector<int>{3, 4, 2, 5, 1}}) {
    Perm s(w);
    REQUIRE(is_irreducible(s));
    Lin<Perm> e = E_sigma(s);
    CHECK(homogeneous_degree(e) == s.size());
    CHECK(delta_lin(d, e).is_zero());
  }
}
