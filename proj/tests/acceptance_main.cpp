// Acceptance suite: one line per criterion, exact checks only.
#include <chrono>
#include <iostream>
#include <vector>

#include "combalg/boundary.hpp"
#include "combalg/coproducts.hpp"
#include "combalg/io.hpp"
#include "combalg/primitives.hpp"
#include "combalg/verify.hpp"

using namespace combalg;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int num, const std::string& what, bool ok, double ms) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << num << ": " << what << " ("
            << ms << " ms)" << std::endl;
  if (!ok) ++failures;
}

template <class F>
void criterion(int num, const std::string& what, F&& body) {
  auto start = Clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::cout << "  exception: " << e.what() << std::endl;
  }
  report(num, what, ok, std::chrono::duration<double, std::milli>(Clock::now() - start).count());
}

bool suites_pass(const std::vector<std::pair<std::string, int>>& suites) {
  bool ok = true;
  for (auto& [name, cap] : suites) {
    SuiteReport rep = run_suite(name, cap, 20080514);
    if (!rep.passed()) {
      ok = false;
      std::cout << "  suite " << name << " failed with " << rep.violations.size()
                << " violations; first: " << rep.violations.front().case_id << std::endl;
    }
  }
  return ok;
}

}  // namespace

int main() {
  criterion(1, "golden coproduct of (2,3,3,5,4,1,4,3)", [] {
    ThetaTable t = ThetaTable::default_xi(8);
    Tensor<Word> d = delta_theta(Word::packed({2, 3, 3, 5, 4, 1, 4, 3}), t);
    Tensor<Word> want;
    auto add = [&](std::vector<int> a, std::vector<int> b) {
      want.add({Word::packed(std::move(a)), Word::packed(std::move(b))}, Rational(1));
    };
    add({1}, {2, 2, 4, 3, 1, 3, 2});
    add({1, 2}, {2, 4, 3, 1, 3, 2});
    add({1, 2, 2}, {4, 3, 1, 3, 2});
    add({1, 2, 2, 3}, {3, 1, 3, 2});
    add({1, 2, 2, 4, 3}, {1, 3, 2});
    add({2, 3, 3, 5, 4, 1}, {2, 1});
    add({2, 3, 3, 5, 4, 1, 4}, {1});
    return d == want;
  });

  criterion(2, "golden primitive bases (permutations and surjections)", [] {
    ThetaTable t = ThetaTable::default_xi(8);
    bool ok = E_sigma(Perm({2, 1})) == parse_perm_lin("2,1 + -1*1,2");
    ok = ok && E_sigma(Perm({3, 1, 2})) == parse_perm_lin("3,1,2 + -1*2,1,3");
    ok = ok && E_sigma(Perm({3, 4, 2, 5, 7, 1, 6})) ==
                   parse_perm_lin("3,4,2,5,7,1,6 + -1*2,3,1,5,7,4,6 + -1*3,4,2,5,6,1,7 + "
                                  "2,3,1,5,6,4,7 + -1*2,4,3,5,7,1,6 + 1,3,2,5,7,4,6 + "
                                  "2,4,3,5,6,1,7 + -1*1,3,2,5,6,4,7");
    ok = ok && E_theta(Word::packed({1, 1}), t) == parse_word_lin("1,1 + -1*1,2");
    ok = ok && E_theta(Word::packed({2, 1}), t) == parse_word_lin("2,1 + -1*1,2");
    ok = ok && E_theta(Word::packed({2, 1, 1}), t) ==
                   parse_word_lin("2,1,1 + -1*3,1,2 + -1*1,2,2 + 1,2,3");
    ok = ok && E_theta(Word::packed({1, 3, 1, 2, 2}), t) ==
                   parse_word_lin("1,3,1,2,2 + -1*1,4,1,2,3 + -1*1,2,1,3,3 + 1,2,1,3,4 + "
                                  "-1*1,4,2,3,3 + 1,5,2,3,4 + 1,3,2,4,4 + -1*1,3,2,4,5");
    return ok;
  });

  criterion(3, "golden operad product", [] {
    return as1_mul(Perm({2, 4, 1, 3}), 1, Perm({1, 3, 2, 5, 4})) ==
           Perm({1, 6, 3, 5, 2, 4, 8, 7});
  });

  criterion(4, "primitive dimensions of the permutation bialgebra, n <= 5", [] {
    BialgebraView<Perm> v = mr_view();
    std::vector<long long> want{1, 1, 3, 13, 71};
    for (int n = 1; n <= 5; ++n) {
      BigInt expect(want[static_cast<std::size_t>(n - 1)]);
      if (irr_count(n) != expect) return false;  // recurrence
      if (BigInt(static_cast<long long>(irr_perms(n).size())) != expect) return false;  // brute
      if (prim_dimension(v, n) != expect) return false;  // rank of the idempotent
    }
    return true;
  });

  criterion(5, "boundary squares to zero and counts the permutohedron faces", [] {
    ThetaTable t = ThetaTable::default_xi(8);
    for (int n = 1; n <= 5; ++n)
      if (!d_squared_check(t, n)) return false;
    for (int n = 1; n <= 5; ++n) {
      ComplexReport rep = complex_report(t, n);
      std::vector<int> counts(static_cast<std::size_t>(n), 0);
      for (auto& f : enum_surjections(n)) ++counts[static_cast<std::size_t>(f.cod - 1)];
      if (rep.dims != counts) return false;
      if (rep.euler != 1) return false;
    }
    ComplexReport hex = complex_report(t, 3);
    return hex.dims == std::vector<int>({1, 6, 6}) && hex.euler == 1;
  });

  criterion(6, "exhaustive axiom battery", [] {
    return suites_pass({{"shuffle-assoc", 6},
                        {"shuffle-bialgebra", 5},
                        {"nui", 5},
                        {"hopf", 4},
                        {"dendriform", 5},
                        {"preshuffle", 5},
                        {"grafting", 5},
                        {"duplicial", 4},
                        {"park", 4}});
  });

  criterion(7, "primitive-operation closure and relations", [] {
    long long cases = 0;
    for (auto& [name, cap] : std::vector<std::pair<std::string, int>>{
             {"prim-closure", 5}, {"prim-sh", 5}, {"prim-gr", 4}, {"prim-psh-a", 5}}) {
      SuiteReport rep = run_suite(name, cap, 20080514);
      if (!rep.passed()) {
        std::cout << "  suite " << name << " failed: " << rep.violations.front().case_id
                  << std::endl;
        return false;
      }
      cases += rep.cases;
    }
    if (cases < 500) {
      std::cout << "  only " << cases << " cases run" << std::endl;
      return false;
    }
    return true;
  });

  criterion(8, "cofreeness: reconstruction and the composition identity", [] {
    return suites_pass({{"cofree", 6}});
  });

  criterion(9, "tree counts and primitive dimension tables", [] {
    std::vector<long long> super{1, 3, 11, 45};
    ThetaTable t = ThetaTable::default_xi(5);
    for (int m = 1; m <= 4; ++m) {
      if (BigInt(static_cast<long long>(enum_binary_trees(m, {"a"}).size())) != catalan(m))
        return false;
      if (BigInt(static_cast<long long>(enum_trees(m, t).size())) !=
          super[static_cast<std::size_t>(m - 1)])
        return false;
      if (super_catalan(m) != super[static_cast<std::size_t>(m - 1)]) return false;
    }
    for (int e = 1; e <= 2; ++e) {
      std::vector<std::string> colors;
      for (int k = 0; k < e; ++k) colors.push_back("e" + std::to_string(k + 1));
      BialgebraView<Tree> dup = dup_view(colors);
      for (int n = 1; n <= 5; ++n) {
        BigInt expect = catalan(n - 1);
        for (int k = 0; k < n; ++k) expect *= e;
        if (prim_dimension(dup, n) != expect) return false;
      }
    }
    BialgebraView<TWord> ta = twoass_view({"e"});
    for (int n = 1; n <= 4; ++n)
      if (prim_dimension(ta, n) != super_catalan(n - 1)) return false;
    return true;
  });

  criterion(10, "the derived shuffle structure on binary trees", [] {
    return suites_pass({{"derived-shuffle", 4}});
  });

  if (failures == 0)
    std::cout << "all acceptance criteria passed" << std::endl;
  else
    std::cout << failures << " acceptance criteria failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
