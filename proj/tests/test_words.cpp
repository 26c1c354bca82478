#include <doctest.h>

#include <set>

#include "combalg/theta.hpp"
#include "combalg/words.hpp"

using namespace combalg;

TEST_CASE("classification flags") {
  Word f = Word::packed({2, 1, 1, 2, 3, 2});
  auto fl = classify(f);
  CHECK(fl.surjection);
  CHECK(f.cod == 3);
  CHECK_FALSE(is_kword(Word::packed({1, 2, 1})));
  CHECK(is_kword(Word::packed({2, 1, 1})));
  CHECK(is_parking(Word({1, 1, 3, 3}, 4)));
  CHECK_FALSE(is_parking(Word({2, 2}, 2)));
}

TEST_CASE("monotone decomposition") {
  auto d = monotone_decompose(Word::packed({2, 1, 1, 2, 3, 2}));
  CHECK(d.sorted.w == std::vector<int>({1, 1, 2, 2, 2, 3}));
  CHECK(d.sigma == Perm({3, 1, 2, 4, 6, 5}));
  CHECK(word_act(d.sorted, d.sigma).w == std::vector<int>({2, 1, 1, 2, 3, 2}));
  Word nd = Word::packed({1, 1, 2});
  CHECK(monotone_decompose(nd).sigma == Perm::identity(3));
  CHECK(monotone_decompose(Word::packed({2, 1})).sigma == Perm({2, 1}));
  CHECK(is_shuffle(d.sigma, d.blocks));
}

TEST_CASE("surjections from cosets") {
  CHECK(surjection_from_coset(Composition({2, 3, 1}), Perm({3, 1, 2, 4, 6, 5})).w ==
        std::vector<int>({2, 1, 1, 2, 3, 2}));
  CHECK(surjection_from_coset(Composition({3}), Perm::identity(3)) == xi(3));
  CHECK(surjection_from_coset(Composition({1, 1}), Perm({2, 1})).w == std::vector<int>({2, 1}));
  CHECK_THROWS(surjection_from_coset(Composition({1, 2}), Perm({1, 3, 2})));
  // bijection between Sh(nn)-cosets and surjections, n <= 5
  for (int n = 1; n <= 5; ++n) {
    std::set<Word> got;
    long long count = 0;
    for (auto& comp : compositions(n))
      for (auto& d : enum_shuffles(Composition(comp))) {
        got.insert(surjection_from_coset(Composition(comp), d));
        ++count;
      }
    auto all = enum_surjections(n);
    CHECK(count == static_cast<long long>(all.size()));
    CHECK(got == std::set<Word>(all.begin(), all.end()));
  }
}

TEST_CASE("park projects onto parking functions") {
  CHECK(park(Word({1, 1, 3, 5}, 5)).w == std::vector<int>({1, 1, 3, 4}));
  CHECK(park(Word({2, 2}, 2)).w == std::vector<int>({1, 1}));
  for (auto& f : enum_parking(4)) CHECK(park(f) == f);
}

TEST_CASE("breakpoints and prime factorization") {
  CHECK(breakpoints(Word({1, 1}, 2)) == std::vector<int>({0, 2}));
  CHECK(is_prime_parking(Word({1, 1}, 2)));
  CHECK(breakpoints(Word({1, 2}, 2)) == std::vector<int>({0, 1, 2}));
  CHECK_FALSE(is_prime_parking(Word({1, 2}, 2)));
  auto pf = prime_factorize(Word({1, 2}, 2));
  REQUIRE(pf.factors.size() == 2);
  CHECK(pf.factors[0].w == std::vector<int>({1}));
  CHECK(pf.factors[1].w == std::vector<int>({1}));
  CHECK(pf.sigma == Perm::identity(2));
  CHECK_THROWS(prime_factorize(Word({2, 2}, 2)));
}

TEST_CASE("family counts") {
  CHECK(enum_surjections(3).size() == 13);
  CHECK(enum_parking(3).size() == 16);  // (n+1)^(n-1)
  CHECK(enum_kwords(3).size() == 12);   // only (1,2,1) drops out
  CHECK(enum_surjections(4).size() == 75);
  CHECK(irr_surjections(2).size() == 2);
  CHECK(irr_surjection_count(3) == 8);
  // K is closed under concatenation
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; n + m <= 6 && m <= 3; ++m)
      for (auto& f : enum_kwords(n))
        for (auto& g : enum_kwords(m)) CHECK(is_kword(word_concat(f, g)));
}

TEST_CASE("theta tables") {
  ThetaTable t = ThetaTable::default_xi(6);
  CHECK(t.coassociative());
  CHECK(t.single_per_degree());
  CHECK(t.splits("xi3").size() == 2);
  ThetaTable bad;
  bad.add_color("xi1", 1);
  bad.add_color("xi2", 2);
  bad.add_color("xi3", 3);
  bad.add_split("xi2", "xi1", "xi1", Rational(1));
  bad.add_split("xi3", "xi1", "xi2", Rational(1));
  auto fail = bad.coassoc_failure();
  REQUIRE(fail.has_value());
  CHECK(*fail == "xi3");
  ThetaTable trivial;
  trivial.add_color("a", 1);
  CHECK(trivial.coassociative());
  CHECK_THROWS(trivial.add_color("zero", 0));
}

TEST_CASE("colored words") {
  ThetaTable t = ThetaTable::default_xi(4);
  Word f = Word::packed({2, 1, 1, 2, 3, 2});
  CWord cw = color_word(f, t);
  CHECK(cw.colors == std::vector<std::string>({"xi2", "xi3", "xi1"}));
  CHECK(to_string(cw) == "f=2,1,1,2,3,2; colors=xi2,xi3,xi1");
  CHECK_THROWS(CWord(f, {"xi1", "xi1", "xi1"}, t));
}
