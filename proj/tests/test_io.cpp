#include <doctest.h>

#include "combalg/io.hpp"
#include "combalg/theta.hpp"
#include "combalg/verify.hpp"
#include "combalg/words.hpp"

using namespace combalg;

TEST_CASE("parsing linear combinations") {
  Lin<Perm> u = parse_perm_lin("2,1 + -1*1,2");
  CHECK(u.coeff(Perm({2, 1})) == Rational(1));
  CHECK(u.coeff(Perm({1, 2})) == Rational(-1));
  CHECK(lin_to_string(u) == "-1*1,2 + 2,1");
  CHECK(parse_perm_lin(lin_to_string(u)) == u);
  CHECK(parse_word_lin("3/2*1,1").coeff(Word::packed({1, 1})) == Rational::parse("3/2"));
  // parking words carry the full codomain
  Lin<Word> p = parse_word_lin("1,1", true);
  CHECK(p.terms.begin()->first.cod == 2);
  CHECK_THROWS(parse_perm_lin(""));
  CHECK_THROWS(parse_perm("2,2"));
}

TEST_CASE("json forms") {
  Lin<Perm> u = parse_perm_lin("2,1 + -1*1,2");
  CHECK(lin_to_json(u) ==
        "{\"terms\":[{\"coeff\":\"-1\",\"word\":[1,2]},{\"coeff\":\"1\",\"word\":[2,1]}]}");
  Tensor<Perm> t;
  t.add({Perm({1}), Perm({1, 2})}, Rational(1));
  CHECK(tensor_to_json(t) == "{\"terms\":[{\"coeff\":\"1\",\"factors\":[[1],[1,2]]}]}");
  CHECK(json_of(parse_tree("x[|,|]")) ==
        "{\"color\":\"x\",\"children\":[{\"leaf\":true},{\"leaf\":true}]}");
}

TEST_CASE("theta tables from JSON") {
  std::string text = R"({"colors":[{"name":"xi1","degree":1},{"name":"xi2","degree":2}],
    "theta":[{"on":"xi2","terms":[{"l":"xi1","r":"xi1","c":"1"}]}]})";
  ThetaTable t = theta_from_json(text);
  CHECK(t.color_degree("xi2") == 2);
  CHECK(t.splits("xi2").size() == 1);
  CHECK(t.coassociative());
  // a non-coassociative table is rejected on load
  std::string bad = R"({"colors":[{"name":"a","degree":1},{"name":"b","degree":2},
    {"name":"c","degree":3}],"theta":[{"on":"b","terms":[{"l":"a","r":"a","c":"1"}]},
    {"on":"c","terms":[{"l":"a","r":"b","c":"1"}]}]})";
  CHECK_THROWS(theta_from_json(bad));
}

TEST_CASE("suite reports replay identically for a fixed seed") {
  SuiteReport a = run_suite("prim-closure", 4, 99);
  SuiteReport b = run_suite("prim-closure", 4, 99);
  CHECK(a.cases == b.cases);
  CHECK(a.passed() == b.passed());
  // wall time differs; everything else must be byte-identical
  std::string ja = a.to_json(), jb = b.to_json();
  auto strip = [](std::string s) {
    auto at = s.find("\"millis\":");
    auto end = s.find(',', at);
    return s.erase(at, end - at);
  };
  CHECK(strip(ja) == strip(jb));
  CHECK_THROWS(run_suite("no-such-suite", 3, 1));
}

TEST_CASE("enumeration caps reject runaway degrees") {
  CHECK_THROWS(enum_surjections(9));
  CHECK_THROWS(enum_functions(8));
}

TEST_CASE("colored words parse") {
  ThetaTable t = ThetaTable::default_xi(4);
  CWord cw = parse_cword("f=2,1,1,2,3,2; colors=xi2,xi3,xi1", t);
  CHECK(cw == color_word(Word::packed({2, 1, 1, 2, 3, 2}), t));
  CHECK_THROWS(parse_cword("2,1", t));
  CHECK_THROWS(parse_cword("f=2,1; colors=xi2", t));  // degree mismatch
}
