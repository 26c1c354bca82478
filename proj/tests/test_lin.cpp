#include <doctest.h>

#include <random>

#include "combalg/lin.hpp"
#include "combalg/perm.hpp"

using namespace combalg;

TEST_CASE("rational arithmetic is exact") {
  Rational a = Rational::parse("2/4");
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  CHECK(a.str() == "1/2");
  CHECK((a * Rational::parse("2")).is_one());
  CHECK(Rational::parse("-3/6").str() == "-1/2");
  std::mt19937_64 rng(1);
  for (int k = 0; k < 200; ++k) {
    long long p = static_cast<long long>(rng() % 2000) - 1000;
    long long q = static_cast<long long>(rng() % 999) + 1;
    if (p == 0) continue;
    Rational r{BigInt(p), BigInt(q)};
    CHECK((r * (Rational(1) / r)).is_one());
  }
  CHECK_THROWS(Rational(BigInt(1), BigInt(0)));
}

TEST_CASE("lin_combine basics") {
  Perm a({2, 1}), b({1, 2});
  Lin<Perm> u(a);
  CHECK(lin_combine(Rational(1), u, Rational(-1), u).is_zero());
  Lin<Perm> v = lin_combine(Rational(1), Lin<Perm>(a), Rational(1), Lin<Perm>(b, Rational(-1)));
  CHECK(v.coeff(a) == Rational(1));
  CHECK(v.coeff(b) == Rational(-1));
  Lin<Perm> w = lin_combine(Rational(2), Lin<Perm>(a, Rational::parse("1/2")), Rational(0), u);
  CHECK(w == Lin<Perm>(a));
}

TEST_CASE("bilinear_extend distributes") {
  auto cat = [](const Perm& x, const Perm& y) { return Lin<Perm>(concat(x, y)); };
  std::mt19937_64 rng(7);
  auto rand_lin = [&]() {
    Lin<Perm> u;
    auto perms = all_perms(2);
    for (int k = 0; k < 2; ++k)
      u.add(perms[rng() % perms.size()], Rational(static_cast<long long>(rng() % 7) - 3));
    return u;
  };
  for (int k = 0; k < 120; ++k) {
    Lin<Perm> u = rand_lin(), v = rand_lin(), w = rand_lin();
    CHECK(bilinear_extend<Perm, Perm>(cat, u + v, w) ==
          bilinear_extend<Perm, Perm>(cat, u, w) + bilinear_extend<Perm, Perm>(cat, v, w));
    CHECK(bilinear_extend<Perm, Perm>(cat, u, v + w) ==
          bilinear_extend<Perm, Perm>(cat, u, v) + bilinear_extend<Perm, Perm>(cat, u, w));
  }
  CHECK(bilinear_extend<Perm, Perm>(cat, Lin<Perm>(), rand_lin()).is_zero());
  Perm a({2, 1}), b({1});
  CHECK(bilinear_extend<Perm, Perm>(cat, Lin<Perm>(a), Lin<Perm>(b)) == Lin<Perm>(Perm({2, 1, 3})));
}

TEST_CASE("graded components decompose") {
  Lin<Perm> u;
  u.add(Perm({1}), Rational(1));
  u.add(Perm({2, 1}), Rational(1));
  CHECK(graded_component(u, 2) == Lin<Perm>(Perm({2, 1})));
  CHECK(graded_component(u, 1) + graded_component(u, 2) == u);
  CHECK(graded_component(u, 3).is_zero());
}

TEST_CASE("expanding a difference against a basis element") {
  // ((2,1) - (1,2)) ._0 (1) = (2,1,3) - (1,2,3)
  Lin<Perm> u;
  u.add(Perm({2, 1}), Rational(1));
  u.add(Perm({1, 2}), Rational(-1));
  auto cat = [](const Perm& x, const Perm& y) { return Lin<Perm>(concat(x, y)); };
  Lin<Perm> got = bilinear_extend<Perm, Perm>(cat, u, Lin<Perm>(Perm({1})));
  Lin<Perm> want;
  want.add(Perm({2, 1, 3}), Rational(1));
  want.add(Perm({1, 2, 3}), Rational(-1));
  CHECK(got == want);
}
