#include <doctest.h>

#include "combalg/boundary.hpp"
#include "combalg/io.hpp"

using namespace combalg;

TEST_CASE("boundary of the small generators") {
  ThetaTable t = ThetaTable::default_xi(6);
  CHECK(boundary(t, Lin<Word>(xi(1))).is_zero());
  Lin<Word> d2 = boundary(t, Lin<Word>(xi(2)));
  CHECK(d2 == parse_word_lin("2,1 + -1*1,2"));
  Lin<Word> d3 = boundary(t, Lin<Word>(xi(3)));
  CHECK_FALSE(d3.is_zero());
  for (auto& [w, c] : d3.terms) CHECK(w.cod == 2);
  CHECK(boundary(t, d3).is_zero());
}

TEST_CASE("weight moves one step per application") {
  ThetaTable t = ThetaTable::default_xi(6);
  for (int n = 2; n <= 4; ++n)
    for (auto& f : enum_surjections(n)) {
      Lin<Word> d = boundary(t, Lin<Word>(f));
      for (auto& [w, c] : d.terms) {
        CHECK(w.cod == f.cod + 1);
        CHECK(w.size() == n);
      }
    }
}

TEST_CASE("both evaluation routes agree") {
  ThetaTable t = ThetaTable::default_xi(6);
  for (int n = 1; n <= 4; ++n)
    for (auto& f : enum_surjections(n))
      CHECK(boundary(t, Lin<Word>(f)) == boundary_leibniz(t, Lin<Word>(f)));
}

TEST_CASE("the hexagon") {
  ThetaTable t = ThetaTable::default_xi(6);
  ComplexReport rep = complex_report(t, 3);
  CHECK(rep.dims == std::vector<int>({1, 6, 6}));
  CHECK(rep.euler == 1);
  CHECK(rep.ranks == std::vector<int>({1, 5, 0}));
  std::string js = to_json(rep);
  CHECK(js.find("\"n\":3") != std::string::npos);
  CHECK(js.find("\"euler\":\"1\"") != std::string::npos);
  ComplexReport point = complex_report(t, 1);
  CHECK(point.dims == std::vector<int>({1}));
  CHECK(point.ranks == std::vector<int>({0}));
}

TEST_CASE("a complex concentrated in one weight") {
  // single degree-1 color: no splits anywhere, the boundary vanishes
  ThetaTable t;
  t.add_color("a", 1);
  for (int n = 1; n <= 3; ++n) CHECK(d_squared_check(t, n));
  CHECK(boundary(t, Lin<Word>(xi(1))).is_zero());
}
