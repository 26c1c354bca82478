#include <doctest.h>

#include "combalg/trees.hpp"

using namespace combalg;

TEST_CASE("grafting the displayed picture") {
  // x[|,|] grafted at leaf 2 of y[|, z[|,|]] hangs x under z's right leaf
  Tree x = parse_tree("x[|,|]");
  Tree w = parse_tree("y[|,z[|,|]]");
  CHECK(graft(x, 2, w) == parse_tree("y[|,z[|,x[|,|]]]"));
  CHECK(graft(x, 0, Tree::leaf()) == x);
  CHECK(graft(parse_tree("x[|,|]"), 0, parse_tree("y[|,|]")) == parse_tree("y[x[|,|],|]"));
  CHECK_THROWS(graft(x, 3, w));
  // leaf counts add, minus the grafted leaf
  CHECK(graft(x, 1, w).leaves() == x.leaves() + w.leaves() - 1);
}

TEST_CASE("vee and the canonical decomposition") {
  Tree c1x = vee("x", 1, {Tree::leaf(), Tree::leaf()});
  CHECK(c1x == parse_tree("x[|,|]"));
  CHECK(multi_graft({Tree::leaf(), Tree::leaf(), Tree::leaf()}, corolla("c", 2)) ==
        corolla("c", 2));
  CHECK(vee("x", 1, {parse_tree("y[|,|]"), Tree::leaf()}) == parse_tree("x[y[|,|],|]"));
  auto d = canonical_decompose(parse_tree("y[|,z[|,x[|,|]]]"));
  CHECK(d.color == "y");
  REQUIRE(d.children.size() == 2);
  CHECK(d.children[1] == parse_tree("z[|,x[|,|]]"));
  CHECK_THROWS(canonical_decompose(Tree::leaf()));
  // round trip on everything small
  ThetaTable t = ThetaTable::default_xi(5);
  for (int m = 1; m <= 5; ++m)
    for (auto& tr : enum_trees(m, t)) {
      auto dd = canonical_decompose(tr);
      CHECK(vee(dd.color, static_cast<int>(dd.children.size()) - 1, dd.children) == tr);
    }
}

TEST_CASE("tree counts") {
  CHECK(catalan(3) == 5);
  CHECK(enum_binary_trees(3, {"a"}).size() == 5);
  ThetaTable t = ThetaTable::default_xi(4);
  std::vector<long long> expect{1, 3, 11, 45};
  for (int m = 1; m <= 4; ++m) {
    CHECK(BigInt(static_cast<long long>(enum_trees(m, t).size())) ==
          expect[static_cast<std::size_t>(m - 1)]);
    CHECK(super_catalan(m) == expect[static_cast<std::size_t>(m - 1)]);
  }
  CHECK(enum_binary_trees(2, {"a", "b"}).size() == 2 * 4);
  // leaf-colored trees and tensor words
  CHECK(enum_ltrees(3, {"e"}).size() == 3);
  CHECK(enum_ltrees(4, {"e"}).size() == 11);
  CHECK(enum_twords(3, {"e"}).size() == 6);
}

TEST_CASE("tree serialization round trips") {
  for (auto s : {"|", "x[|,|]", "y[|,z[|,x[|,|]]]", "c2[|,x[|,|],|]"}) {
    CHECK(to_string(parse_tree(s)) == s);
  }
  CHECK_THROWS(parse_tree("x[|]"));
  CHECK_THROWS(parse_tree("x[|,|"));
  for (auto s : {"e", "*[e,e]", "e#*[e,*[e,e,e]]"}) {
    CHECK(to_string(parse_tword(s)) == s);
  }
}
