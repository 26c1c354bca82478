#include "combalg/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "combalg/boundary.hpp"
#include "combalg/coproducts.hpp"
#include "combalg/io.hpp"
#include "combalg/primitives.hpp"
#include "combalg/products.hpp"

namespace combalg {

namespace {

using Clock = std::chrono::steady_clock;

struct SuiteCtx {
  SuiteReport* rep;
  void hit(long long k = 1) { rep->cases += k; }
  template <class L, class R>
  void check(const std::string& id, const L& lhs, const R& rhs) {
    ++rep->cases;
    if (!(lhs == rhs))
      rep->violations.push_back(
          {id, "lhs = " + lin_to_string(lhs) + " ; rhs = " + lin_to_string(rhs)});
  }
  template <class T>
  void check_tensor(const std::string& id, const T& lhs, const T& rhs) {
    ++rep->cases;
    if (!(lhs == rhs)) rep->violations.push_back({id, "tensor sides differ"});
  }
  void expect(const std::string& id, bool ok, const std::string& detail = "") {
    ++rep->cases;
    if (!ok) rep->violations.push_back({id, detail});
  }
};

// ---- shuffle bookkeeping ----------------------------------------------------

// alpha in Sh(n,m,r) -> (sigma, lambda) with alpha = (sigma x 1_r).lambda,
// sigma in Sh(n,m), lambda in Sh(n+m,r).
std::pair<Perm, Perm> split_right(const Perm& alpha, int nm, int r) {
  std::vector<int> lambda_word(static_cast<std::size_t>(nm + r));
  int next_small = 0, next_large = nm;
  for (int j = 1; j <= nm + r; ++j)
    lambda_word[static_cast<std::size_t>(j - 1)] = alpha(j) <= nm ? ++next_small : ++next_large;
  Perm lambda;
  lambda.img = std::move(lambda_word);
  Perm pi = compose(alpha, lambda.inverse());
  for (int j = nm + 1; j <= nm + r; ++j)
    if (pi(j) != j) throw std::logic_error("split_right: not block diagonal");
  Perm sigma;
  sigma.img.assign(pi.img.begin(), pi.img.begin() + nm);
  return {Perm(sigma.img), lambda};
}

// alpha in Sh(n,m,r) -> (sigma, tau) with alpha = (1_n x sigma).tau,
// sigma in Sh(m,r), tau in Sh(n, m+r).
std::pair<Perm, Perm> split_left(const Perm& alpha, int n, int mr) {
  std::vector<int> tau_word(static_cast<std::size_t>(n + mr));
  int next_small = 0, next_large = n;
  for (int j = 1; j <= n + mr; ++j)
    tau_word[static_cast<std::size_t>(j - 1)] = alpha(j) <= n ? ++next_small : ++next_large;
  Perm tau;
  tau.img = std::move(tau_word);
  Perm pi = compose(alpha, tau.inverse());
  for (int j = 1; j <= n; ++j)
    if (pi(j) != j) throw std::logic_error("split_left: not block diagonal");
  std::vector<int> sig(pi.img.begin() + n, pi.img.end());
  for (int& v : sig) v -= n;
  return {Perm(std::move(sig)), tau};
}

struct Quad {
  Perm gamma, delta, sigma, lambda;
};

std::vector<Quad> matched_quadruples(int n, int m, int r) {
  std::vector<Quad> out;
  for (auto& gamma : enum_shuffles(Composition({n, m + r}, true)))
    for (auto& delta : enum_shuffles(Composition({m, r}, true))) {
      Perm alpha = compose(concat(Perm::identity(n), delta), gamma);
      auto [sigma, lambda] = split_right(alpha, n + m, r);
      out.push_back({gamma, delta, sigma, lambda});
    }
  return out;
}

// ---- random sampling ---------------------------------------------------------

template <class B>
Lin<B> random_primitive(const BialgebraView<B>& view, int deg, std::mt19937_64& rng) {
  std::vector<B> basis = view.basis(deg);
  for (int attempt = 0; attempt < 24; ++attempt) {
    const B& b = basis[rng() % basis.size()];
    Lin<B> e = euler_e(view, Lin<B>(b));
    if (!e.is_zero()) return e;
  }
  throw std::logic_error("random_primitive: no nonzero image found");
}

int rand_between(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// ---- individual suites -------------------------------------------------------

void suite_shuffle_assoc(SuiteCtx& c, int cap, std::mt19937_64&) {
  AlgebraOps<Perm> ops = mr_ops();
  // |S_a||S_b||S_c| triples times the matched quadruples collapse to d! per
  // degree triple (a,b,c) of total d; asserted at the end.
  BigInt advertised = 0;
  for (int d = 3; d <= cap; ++d)
    advertised += BigInt(static_cast<long long>(compositions_len(d, 3, false).size())) *
                  factorial(d);
  for (int n = 1; n <= cap - 2; ++n)
    for (int m = 1; n + m <= cap - 1; ++m)
      for (int r = 1; n + m + r <= cap; ++r) {
        auto quads = matched_quadruples(n, m, r);
        for (auto& x : all_perms(n))
          for (auto& y : all_perms(m))
            for (auto& z : all_perms(r))
              for (auto& q : quads) {
                Lin<Perm> lhs = ops.gamma(Lin<Perm>(x), q.gamma, ops.gamma(Lin<Perm>(y), q.delta, Lin<Perm>(z)));
                Lin<Perm> rhs = ops.gamma(ops.gamma(Lin<Perm>(x), q.sigma, Lin<Perm>(y)), q.lambda, Lin<Perm>(z));
                c.check("mr[" + to_string(x) + ";" + to_string(y) + ";" + to_string(z) +
                            "] gamma=" + to_string(q.gamma) + " delta=" + to_string(q.delta),
                        lhs, rhs);
              }
      }
  long long run = c.rep->cases;
  c.expect("shuffle-assoc.case-count", BigInt(run) == advertised,
           std::to_string(run) + " vs " + advertised.str());
}

// Def 3.1 right-hand side for one (x, y, gamma).
template <class B>
Tensor<B> bialgebra_rhs(const AlgebraOps<B>& ops, const DeltaFn<B>& delta, const B& x, const B& y,
                        const Perm& gamma) {
  const int n = degree_of(x), m = degree_of(y);
  Tensor<B> rhs;
  Tensor<B> dx = delta(x), dy = delta(y);
  for (int r = 1; r <= n + m - 1; ++r) {
    DiagonalDecomposition dd = diagonal_decompose(gamma, n, m, r);
    // pieces with the degenerate whole/empty conventions
    std::vector<std::pair<std::pair<const B*, const B*>, Rational>> xparts, yparts;
    if (dd.n1 == 0)
      xparts.push_back({{nullptr, &x}, Rational(1)});
    else if (dd.n1 == n)
      xparts.push_back({{&x, nullptr}, Rational(1)});
    else
      for (auto& [t, cv] : dx.terms)
        if (degree_of(t[0]) == dd.n1) xparts.push_back({{&t[0], &t[1]}, cv});
    if (dd.m1 == 0)
      yparts.push_back({{nullptr, &y}, Rational(1)});
    else if (dd.m1 == m)
      yparts.push_back({{&y, nullptr}, Rational(1)});
    else
      for (auto& [t, cv] : dy.terms)
        if (degree_of(t[0]) == dd.m1) yparts.push_back({{&t[0], &t[1]}, cv});
    for (auto& [xp, cx] : xparts)
      for (auto& [yp, cy] : yparts) {
        Lin<B> first = xp.first == nullptr   ? Lin<B>(*yp.first)
                       : yp.first == nullptr ? Lin<B>(*xp.first)
                                             : ops.gamma(Lin<B>(*xp.first), dd.g1, Lin<B>(*yp.first));
        Lin<B> second = xp.second == nullptr   ? Lin<B>(*yp.second)
                        : yp.second == nullptr ? Lin<B>(*xp.second)
                                               : ops.gamma(Lin<B>(*xp.second), dd.g2, Lin<B>(*yp.second));
        for (auto& [b1, c1] : first.terms)
          for (auto& [b2, c2] : second.terms) rhs.add({b1, b2}, cx * cy * c1 * c2);
      }
  }
  return rhs;
}

template <class B>
void bialgebra_battery(SuiteCtx& c, const std::string& tag, const AlgebraOps<B>& ops,
                       const DeltaFn<B>& delta, const std::function<std::vector<B>(int)>& basis,
                       int cap) {
  for (int n = 1; n < cap; ++n)
    for (int m = 1; n + m <= cap; ++m) {
      auto shuffles = enum_shuffles(Composition({n, m}, true));
      for (auto& x : basis(n))
        for (auto& y : basis(m))
          for (auto& g : shuffles) {
            Lin<B> prod = ops.gamma(Lin<B>(x), g, Lin<B>(y));
            Tensor<B> lhs = delta_lin(delta, prod);
            Tensor<B> rhs = bialgebra_rhs(ops, delta, x, y, g);
            c.check_tensor(tag + "[" + to_string(x) + "," + to_string(y) + ";" + to_string(g) + "]",
                           lhs, rhs);
          }
    }
}

void suite_shuffle_bialgebra(SuiteCtx& c, int cap, std::mt19937_64&) {
  ThetaTable t = ThetaTable::default_xi(std::max(cap, 2));
  bialgebra_battery<Perm>(c, "mr", mr_ops(), [](const Perm& p) { return delta_mr(p); },
                          [](int n) { return all_perms(n); }, cap);
  bialgebra_battery<Word>(c, "psym", word_ops(),
                          [t](const Word& f) { return delta_theta(f, t); },
                          [](int n) { return enum_surjections(n); }, cap);
  bialgebra_battery<Word>(c, "pqsym", word_ops(), [](const Word& f) { return delta_pqsym(f); },
                          [](int n) { return enum_parking(n); }, std::min(cap, 4));
}

// Delta(x.y) = sum (x.y1) (x) y2 + sum x1 (x) (x2.y) + x (x) y.
template <class B>
void nui_battery(SuiteCtx& c, const std::string& tag,
                 const std::function<Lin<B>(const Lin<B>&, const Lin<B>&)>& mul,
                 const DeltaFn<B>& delta, const std::function<std::vector<B>(int)>& basis,
                 int cap) {
  for (int n = 1; n < cap; ++n)
    for (int m = 1; n + m <= cap; ++m)
      for (auto& x : basis(n))
        for (auto& y : basis(m)) {
          Tensor<B> lhs = delta_lin(delta, mul(Lin<B>(x), Lin<B>(y)));
          Tensor<B> rhs;
          for (auto& [t, cv] : delta(y).terms)
            for (auto& [b, c2] : mul(Lin<B>(x), Lin<B>(t[0])).terms) rhs.add({b, t[1]}, cv * c2);
          for (auto& [t, cv] : delta(x).terms)
            for (auto& [b, c2] : mul(Lin<B>(t[1]), Lin<B>(y)).terms) rhs.add({t[0], b}, cv * c2);
          rhs.add({x, y}, Rational(1));
          c.check_tensor(tag + "[" + to_string(x) + "," + to_string(y) + "]", lhs, rhs);
        }
}

void suite_nui(SuiteCtx& c, int cap, std::mt19937_64&) {
  ThetaTable t = ThetaTable::default_xi(std::max(cap, 2));
  nui_battery<Perm>(c, "mr.0", mr_ops().bottom, [](const Perm& p) { return delta_mr(p); },
                    [](int n) { return all_perms(n); }, cap);
  nui_battery<Perm>(c, "mr.top", mr_ops().top, [](const Perm& p) { return delta_mr(p); },
                    [](int n) { return all_perms(n); }, cap);
  nui_battery<Word>(c, "psym.0", word_ops().bottom,
                    [t](const Word& f) { return delta_theta(f, t); },
                    [](int n) { return enum_surjections(n); }, cap);
  nui_battery<Word>(c, "psym.top", word_ops().top,
                    [t](const Word& f) { return delta_theta(f, t); },
                    [](int n) { return enum_surjections(n); }, cap);
  nui_battery<Word>(c, "pqsym.0", word_ops().bottom, [](const Word& f) { return delta_pqsym(f); },
                    [](int n) { return enum_parking(n); }, cap);
  nui_battery<Tree>(c, "ytree.0", tree_ops().bottom, [](const Tree& s) { return delta_pr(s); },
                    [](int n) { return enum_binary_trees(n, {"a"}); }, cap);
  nui_battery<Word>(c, "tv.0", [](const Lin<Word>& a, const Lin<Word>& b) {
                      return bilinear_extend<Word, Word>(
                          [](const Word& f, const Word& g) { return Lin<Word>(word_juxtapose(f, g)); }, a, b);
                    },
                    [](const Word& f) { return delta_deconcat(f); },
                    [](int n) {
                      // words over a two-letter alphabet as a small T(V)
                      std::vector<Word> out;
                      for (int mask = 0; mask < (1 << n); ++mask) {
                        std::vector<int> w;
                        for (int i = 0; i < n; ++i) w.push_back(((mask >> i) & 1) + 1);
                        out.push_back(Word(w, 2));
                      }
                      return out;
                    },
                    std::min(cap, 4));
}

void suite_hopf(SuiteCtx& c, int cap, std::mt19937_64&) {
  auto delta = [](const Perm& p) { return delta_mr(p); };
  using Slot = std::optional<Perm>;
  auto slot_mul = [](const Slot& a, const Slot& b) -> Lin<Perm> {
    if (!a && !b) return Lin<Perm>();
    if (!a) return Lin<Perm>(*b);
    if (!b) return Lin<Perm>(*a);
    return star(Lin<Perm>(*a), Lin<Perm>(*b));
  };
  for (int n = 1; n < cap; ++n)
    for (int m = 1; n + m <= cap; ++m)
      for (auto& x : all_perms(n))
        for (auto& y : all_perms(m)) {
          UnitalTensor<Perm> lhs = delta_plus<Perm>(delta, star(Lin<Perm>(x), Lin<Perm>(y)));
          UnitalTensor<Perm> rhs;
          UnitalTensor<Perm> dx = delta_plus<Perm>(delta, Lin<Perm>(x));
          UnitalTensor<Perm> dy = delta_plus<Perm>(delta, Lin<Perm>(y));
          for (auto& [tx, cx] : dx.terms)
            for (auto& [ty, cy] : dy.terms) {
              bool unit1 = !tx[0] && !ty[0];
              bool unit2 = !tx[1] && !ty[1];
              Lin<Perm> first = slot_mul(tx[0], ty[0]);
              Lin<Perm> second = slot_mul(tx[1], ty[1]);
              if (unit1 && unit2) continue;  // never happens for positive degrees
              if (unit1) {
                for (auto& [b2, c2] : second.terms) rhs.add({std::nullopt, Slot(b2)}, cx * cy * c2);
              } else if (unit2) {
                for (auto& [b1, c1] : first.terms) rhs.add({Slot(b1), std::nullopt}, cx * cy * c1);
              } else {
                for (auto& [b1, c1] : first.terms)
                  for (auto& [b2, c2] : second.terms) rhs.add({Slot(b1), Slot(b2)}, cx * cy * c1 * c2);
              }
            }
          c.check_tensor("hopf[" + to_string(x) + "," + to_string(y) + "]", lhs, rhs);
        }
}

void suite_dendriform(SuiteCtx& c, int cap, std::mt19937_64&) {
  for (int n = 1; n <= cap - 1; ++n)
    for (int m = 1; n + m <= cap; ++m) {
      // x*y = x>y + x<y and the half-shuffle partition, pairwise
      for (auto& x : all_perms(n))
        for (auto& y : all_perms(m)) {
          Lin<Perm> lx(x), ly(y);
          c.check("dend.split[" + to_string(x) + "," + to_string(y) + "]",
                  dendriform_succ(lx, ly) + dendriform_prec(lx, ly), star(lx, ly));
        }
    }
  for (int n = 1; n <= cap - 2; ++n)
    for (int m = 1; n + m <= cap - 1; ++m)
      for (int r = 1; n + m + r <= cap; ++r)
        for (auto& x : all_perms(n))
          for (auto& y : all_perms(m))
            for (auto& z : all_perms(r)) {
              Lin<Perm> lx(x), ly(y), lz(z);
              std::string id = "dend[" + to_string(x) + "," + to_string(y) + "," + to_string(z) + "]";
              c.check(id + ".1", dendriform_succ(lx, dendriform_succ(ly, lz)),
                      dendriform_succ(star(lx, ly), lz));
              c.check(id + ".2", dendriform_succ(lx, dendriform_prec(ly, lz)),
                      dendriform_prec(dendriform_succ(lx, ly), lz));
              c.check(id + ".3", dendriform_prec(lx, star(ly, lz)),
                      dendriform_prec(dendriform_prec(lx, ly), lz));
            }
}

void suite_preshuffle(SuiteCtx& c, int cap, std::mt19937_64&) {
  AlgebraOps<Word> ops = word_ops();
  for (int n = 1; n <= cap - 2; ++n)
    for (int m = 1; n + m <= cap - 1; ++m)
      for (int r = 1; n + m + r <= cap; ++r)
        for (auto& x : enum_kwords(n))
          for (auto& y : enum_kwords(m))
            for (auto& z : enum_kwords(r))
              for (int i = 0; i <= m; ++i)
                for (int j = 0; j <= r; ++j) {
                  Lin<Word> lhs = ops.insert(ops.insert(Lin<Word>(x), i, Lin<Word>(y)), j, Lin<Word>(z));
                  Lin<Word> rhs = ops.insert(Lin<Word>(x), i + j, ops.insert(Lin<Word>(y), j, Lin<Word>(z)));
                  c.check("presh[" + to_string(x) + "," + to_string(y) + "," + to_string(z) + ";" +
                              std::to_string(i) + "," + std::to_string(j) + "]",
                          lhs, rhs);
                }
  // K-words close under ._i and the insertion matches its direct form.
  for (int n = 1; n < cap; ++n)
    for (int m = 1; n + m <= cap; ++m)
      for (auto& x : enum_kwords(n))
        for (auto& y : enum_kwords(m))
          for (int i = 0; i <= m; ++i) {
            Word w = mul_i(x, i, y);
            c.expect("presh.closed[" + to_string(x) + "," + to_string(y) + "]", is_kword(w),
                     to_string(w));
            c.expect("presh.direct", w == mul_i_direct(x, i, y), to_string(w));
          }
  // ._0 and ._top stay associative on surjection words
  for (int a = 1; a <= cap - 2; ++a)
    for (int b = 1; a + b <= cap - 1; ++b)
      for (int r = 1; a + b + r <= cap; ++r)
        for (auto& x : enum_surjections(a))
          for (auto& y : enum_surjections(b))
            for (auto& z : enum_surjections(r)) {
              Lin<Word> lx(x), ly(y), lz(z);
              c.check("word.bottom-assoc", ops.bottom(ops.bottom(lx, ly), lz),
                      ops.bottom(lx, ops.bottom(ly, lz)));
              c.check("word.top-assoc", ops.top(ops.top(lx, ly), lz),
                      ops.top(lx, ops.top(ly, lz)));
            }
}

void suite_grafting(SuiteCtx& c, int cap, std::mt19937_64& rng) {
  ThetaTable table = ThetaTable::default_xi(std::max(cap, 2));
  auto trees = [&](int n) { return enum_trees(n, table); };
  for (int a = 1; a <= cap - 2; ++a)
    for (int b = 1; a + b <= cap - 1; ++b)
      for (int r = 1; a + b + r <= cap; ++r)
        for (auto& x : trees(a))
          for (auto& y : trees(b))
            for (auto& z : trees(r)) {
              for (int i = 0; i <= b; ++i)
                for (int j = 0; j <= r; ++j)
                  c.expect("graft.assoc", graft(graft(x, i, y), j, z) == graft(x, i + j, graft(y, j, z)),
                           to_string(x) + "," + to_string(y) + "," + to_string(z));
              for (int j = 1; j <= r; ++j)
                for (int i = 0; i < j; ++i)
                  c.expect("graft.comm",
                           graft(x, i, graft(y, j, z)) == graft(y, j + degree_of(x), graft(x, i, z)),
                           to_string(x) + "," + to_string(y) + "," + to_string(z));
            }
  // the reassociation identity for chains of interior graftings
  for (int trial = 0; trial < 200; ++trial) {
    int rz = rand_between(rng, 2, std::max(2, cap - 2));
    auto zs = trees(rz);
    Tree z = zs[rng() % zs.size()];
    int q = rand_between(rng, 0, 1);
    std::vector<Tree> xs;
    std::vector<int> is;
    for (int l = 0; l <= q; ++l) {
      auto pool = trees(1);
      xs.push_back(pool[rng() % pool.size()]);
      is.push_back(l);  // strictly increasing spots i_0 < ... < i_q <= deg(z)
    }
    auto ys = trees(1);
    Tree y = ys[rng() % ys.size()];
    int j = rand_between(rng, 0, degree_of(xs.back()));
    // lhs: x_0 ._{i_0}( ... ((y ._{j} x_q) ._{i_q} z))
    Tree inner = graft(graft(y, j, xs.back()), is.back(), z);
    for (int l = q - 1; l >= 0; --l)
      inner = graft(xs[static_cast<std::size_t>(l)], is[static_cast<std::size_t>(l)], inner);
    // rhs: y ._{i}(x_0 ._{i_0}( ... (x_q ._{i_q} z))) with the accumulated spot
    Tree chain = z;
    for (int l = q; l >= 0; --l)
      chain = graft(xs[static_cast<std::size_t>(l)], is[static_cast<std::size_t>(l)], chain);
    int isum = j + is.back();
    for (int l = 0; l < q; ++l) isum += degree_of(xs[static_cast<std::size_t>(l)]);
    c.expect("graft.lemma", graft(y, isum, chain) == inner,
             to_string(y) + " at " + std::to_string(isum));
  }
}

void suite_duplicial(SuiteCtx& c, int cap, std::mt19937_64&) {
  auto trees = [](int n) { return enum_binary_trees(n, {"a"}); };
  AlgebraOps<Tree> ops = tree_ops();
  for (int a = 1; a <= cap - 2; ++a)
    for (int b = 1; a + b <= cap - 1; ++b)
      for (int r = 1; a + b + r <= cap; ++r)
        for (auto& x : trees(a))
          for (auto& y : trees(b))
            for (auto& z : trees(r)) {
              Lin<Tree> lx(x), ly(y), lz(z);
              std::string id = "dup[" + to_string(x) + "," + to_string(y) + "," + to_string(z) + "]";
              c.check(id + ".1", duplicial_over(duplicial_over(lx, ly), lz),
                      duplicial_over(lx, duplicial_over(ly, lz)));
              c.check(id + ".2", duplicial_under(duplicial_over(lx, ly), lz),
                      duplicial_over(lx, duplicial_under(ly, lz)));
              c.check(id + ".3", duplicial_under(duplicial_under(lx, ly), lz),
                      duplicial_under(lx, duplicial_under(ly, lz)));
            }
  for (int a = 1; a < cap; ++a)
    for (int b = 1; a + b <= cap; ++b)
      for (auto& x : trees(a))
        for (auto& y : trees(b)) {
          Lin<Tree> lx(x), ly(y);
          c.check("dup.brace[" + to_string(x) + "," + to_string(y) + "]", brace(ops, lx, ly),
                  duplicial_under(lx, ly) - duplicial_over(lx, ly));
        }
}

void suite_prim_sh(SuiteCtx& c, int cap, std::mt19937_64& rng) {
  ThetaTable t = ThetaTable::default_xi(std::max(cap, 2));
  BialgebraView<Word> view = psym_view(t);
  AlgebraOps<Word> ops = word_ops();
  auto B1 = [&](const Perm& g, const Lin<Word>& a, const Lin<Word>& b) {
    return ops.gamma(a, g, b);
  };
  const int trials = 160;
  for (int trial = 0; trial < trials; ++trial) {
    int n = rand_between(rng, 1, std::max(1, cap - 2));
    int m = rand_between(rng, 1, std::max(1, cap - 1 - n));
    int s = rand_between(rng, 1, std::max(1, cap - n - m));
    if (n + m + s > cap) continue;
    Lin<Word> x = random_primitive(view, n, rng);
    Lin<Word> y = random_primitive(view, m, rng);
    Lin<Word> w = random_primitive(view, s, rng);
    // relation (1)
    {
      Perm g1 = concat(Perm::identity(n), epsilon(s, m));
      Perm g2 = concat(epsilon(m, n), Perm::identity(s));
      Lin<Word> lhs = brace(ops, x, brace(ops, y, w));
      Lin<Word> rhs = brace(ops, brace(ops, x, y), w) + B1(g1, brace(ops, x, w), y) -
                      B1(g2, y, brace(ops, x, w));
      c.check("prim-sh.1#" + std::to_string(trial), lhs, rhs);
    }
    // relations (2) and (3) need a middle shuffle
    auto shuffles_ms = enum_shuffles(Composition({m, s}, true));
    for (auto& g : shuffles_ms) {
      if (g == Perm::identity(m + s) || g == epsilon(m, s)) continue;
      Perm gtilde = concat(Perm::identity(n), g);
      Perm gbar = compose(concat(epsilon(m, n), Perm::identity(s)), gtilde);
      Lin<Word> lhs = brace(ops, x, B1(g, y, w));
      Lin<Word> rhs = B1(gbar, y, brace(ops, x, w)) + B1(gtilde, brace(ops, x, y), w);
      c.check("prim-sh.2#" + std::to_string(trial) + ";" + to_string(g), lhs, rhs);
    }
    auto shuffles_nm = enum_shuffles(Composition({n, m}, true));
    for (auto& g : shuffles_nm) {
      if (g == Perm::identity(n + m) || g == epsilon(n, m)) continue;
      // The head block keeps gamma's pattern and w trails it.
      Perm gunder = compose(concat(Perm::identity(n), epsilon(s, m)), concat(g, Perm::identity(s)));
      Lin<Word> lhs = brace(ops, B1(g, x, y), w);
      Lin<Word> rhs = B1(gunder, brace(ops, x, w), y) +
                      B1(concat(g, Perm::identity(s)), x, brace(ops, y, w));
      c.check("prim-sh.3#" + std::to_string(trial) + ";" + to_string(g), lhs, rhs);
    }
    // relation (4) and the composition cases of B1 after B1
    for (auto& delta : shuffles_nm) {
      if (delta == Perm::identity(n + m) || delta == epsilon(n, m)) continue;
      for (auto& gamma : enum_shuffles(Composition({n + m, s}, true))) {
        if (gamma == Perm::identity(n + m + s) || gamma == epsilon(n + m, s)) continue;
        Perm alpha = compose(concat(delta, Perm::identity(s)), gamma);
        auto [sigma, tau] = split_left(alpha, n, m + s);
        if (sigma == Perm::identity(m + s)) continue;
        Lin<Word> lhs = B1(gamma, B1(delta, x, y), w);
        Lin<Word> rhs;
        if (sigma == epsilon(m, s))
          rhs = B1(tau, x, brace(ops, w, y) + ops.bottom(w, y));
        else
          rhs = B1(tau, x, B1(sigma, y, w));
        c.check("prim-sh.4#" + std::to_string(trial), lhs, rhs);
      }
    }
  }
}

void suite_prim_gr(SuiteCtx& c, int cap, std::mt19937_64& rng) {
  ThetaTable table = ThetaTable::default_xi(std::max(cap, 2));
  BialgebraView<Tree> view = tree_view(table);
  AlgebraOps<Tree> ops = tree_ops();
  const int trials = 220;
  for (int trial = 0; trial < trials; ++trial) {
    int a = rand_between(rng, 1, std::max(1, cap - 2));
    int b = rand_between(rng, 1, std::max(1, cap - 1 - a));
    int r = rand_between(rng, 1, std::max(1, cap - a - b));
    if (a + b + r > cap) continue;
    Lin<Tree> x = random_primitive(view, a, rng);
    Lin<Tree> y = random_primitive(view, b, rng);
    Lin<Tree> z = random_primitive(view, r, rng);
    std::string id = "prim-gr#" + std::to_string(trial);
    // (1) {{x,y},z} = {x,{y,z}} + y ._{|x|} {x,z}
    if (a + r >= 2)
      c.check(id + ".1", brace(ops, brace(ops, x, y), z),
              brace(ops, x, brace(ops, y, z)) + ops.insert(y, a, brace(ops, x, z)));
    // (2) {x._p y, z} = x ._p {y,z}   for 1 <= p < |y|
    for (int p = 1; p < b; ++p)
      c.check(id + ".2p" + std::to_string(p), brace(ops, ops.insert(x, p, y), z),
              ops.insert(x, p, brace(ops, y, z)));
    // (3) {x, y._p z} = y ._{|x|+p} {x,z}  for 1 <= p < |z|
    for (int p = 1; p < r; ++p)
      c.check(id + ".3p" + std::to_string(p), brace(ops, x, ops.insert(y, p, z)),
              ops.insert(y, a + p, brace(ops, x, z)));
    // (4) {x,y} ._p z = y ._{|x|+p}(x ._p z) - x ._p (y ._p z)  for 1 <= p < |z|
    for (int p = 1; p < r; ++p)
      c.check(id + ".4p" + std::to_string(p), ops.insert(brace(ops, x, y), p, z),
              ops.insert(y, a + p, ops.insert(x, p, z)) - ops.insert(x, p, ops.insert(y, p, z)));
    // (5) (x._p y) ._q z = x ._{p+q} (y ._q z)
    for (int p = 1; p < b; ++p)
      for (int q = 1; q < r; ++q)
        c.check(id + ".5", ops.insert(ops.insert(x, p, y), q, z),
                ops.insert(x, p + q, ops.insert(y, q, z)));
    // (6) x ._p (y ._q z) = y ._{|x|+q}(x ._p z)  for 1 <= p < q < |z|
    for (int q = 2; q < r; ++q)
      for (int p = 1; p < q; ++p)
        c.check(id + ".6", ops.insert(x, p, ops.insert(y, q, z)),
                ops.insert(y, a + q, ops.insert(x, p, z)));
    // L_q vanishes on grafting algebras for q >= 1
    if (a + b + r <= cap) {
      int p = rand_between(rng, 1, b);
      c.check(id + ".Lzero", op_L(ops, p, {x}, y, z), Lin<Tree>());
    }
  }
}

void suite_prim_psh_a(SuiteCtx& c, int cap, std::mt19937_64& rng) {
  ThetaTable table = ThetaTable::default_xi(std::max(cap, 2));
  AlgebraOps<Word> ops = word_ops();
  auto kw = [&](int n, std::mt19937_64& r) {
    auto pool = enum_kwords(n);
    return Lin<Word>(pool[r() % pool.size()]);
  };
  const int trials = 400;
  for (int trial = 0; trial < trials; ++trial) {
    int q = rand_between(rng, 0, 2);
    std::vector<int> degs;
    int total = 0;
    for (int l = 0; l < q + 3; ++l) {
      int d = rand_between(rng, 1, 2);
      degs.push_back(d);
      total += d;
    }
    if (total > cap) continue;
    std::vector<Lin<Word>> xs;
    for (int l = 0; l < q; ++l) xs.push_back(kw(degs[static_cast<std::size_t>(l)], rng));
    Lin<Word> y = kw(degs[static_cast<std::size_t>(q)], rng);
    Lin<Word> w = kw(degs[static_cast<std::size_t>(q + 1)], rng);
    Lin<Word> tt = kw(degs[static_cast<std::size_t>(q + 2)], rng);
    const int ydeg = degs[static_cast<std::size_t>(q)];
    const int wdeg = degs[static_cast<std::size_t>(q + 1)];
    int j = rand_between(rng, 1, ydeg);
    int k = rand_between(rng, 1, wdeg);
    std::vector<int> nsuffix(static_cast<std::size_t>(q + 1), 0);
    for (int l = q - 1; l >= 0; --l)
      nsuffix[static_cast<std::size_t>(l)] =
          nsuffix[static_cast<std::size_t>(l + 1)] + degs[static_cast<std::size_t>(l)];
    Lin<Word> lhs = op_L(ops, j, xs, y, op_L(ops, k, {}, w, tt));
    Lin<Word> rhs;
    for (int r = 0; r <= q; ++r) {
      std::vector<Lin<Word>> head(xs.begin(), xs.begin() + r);
      std::vector<Lin<Word>> tail(xs.begin() + r, xs.end());
      Lin<Word> inner = op_L(ops, j, tail, y, w);
      rhs += op_L(ops, j + k + nsuffix[static_cast<std::size_t>(r)], head, inner, tt);
    }
    if (j == ydeg) {
      std::vector<Lin<Word>> extended = xs;
      extended.push_back(y);
      rhs += op_L(ops, k, extended, w, tt);
    }
    if (k == wdeg) {
      for (int r = 0; r <= q; ++r) {
        std::vector<Lin<Word>> head(xs.begin(), xs.begin() + r);
        std::vector<Lin<Word>> tail(xs.begin() + r, xs.end());
        Lin<Word> inner = op_L(ops, j, tail, y, tt);
        rhs -= op_L(ops, j + nsuffix[static_cast<std::size_t>(r)], head, inner, w);
      }
    }
    c.check("prim-psh-a#" + std::to_string(trial), lhs, rhs);
  }
}

void suite_prim_closure(SuiteCtx& c, int cap, std::mt19937_64& rng) {
  ThetaTable table = ThetaTable::default_xi(std::max(cap, 2));
  BialgebraView<Perm> mr = mr_view();
  BialgebraView<Word> ps = psym_view(table);
  BialgebraView<Tree> gr = tree_view(table);
  BialgebraView<TWord> ta = twoass_view({"e"});
  AlgebraOps<Perm> mops = mr_ops();
  AlgebraOps<Word> wops = word_ops();
  AlgebraOps<Tree> tops = tree_ops();
  auto dmr = [](const Perm& p) { return delta_mr(p); };
  DeltaFn<Perm> dmr_fn = dmr;
  DeltaFn<Word> dps_fn = [table](const Word& f) { return delta_theta(f, table); };
  DeltaFn<Tree> dgr_fn = [table](const Tree& t) { return delta_theta_tree(t, table); };
  DeltaFn<TWord> dta_fn = [](const TWord& w) { return delta_twoass(w); };
  const int trials = 200;
  for (int trial = 0; trial < trials; ++trial) {
    // braces and gamma-products of primitives stay primitive (MR and P_oo)
    {
      int n = rand_between(rng, 1, cap - 1);
      int m = rand_between(rng, 1, std::max(1, cap - n));
      if (n + m <= cap) {
        Lin<Perm> x = random_primitive(mr, n, rng);
        Lin<Perm> y = random_primitive(mr, m, rng);
        c.expect("closure.mr.brace#" + std::to_string(trial),
                 delta_lin(dmr_fn, brace(mops, x, y)).is_zero());
        auto sh = enum_shuffles(Composition({n, m}, true));
        Perm g = sh[rng() % sh.size()];
        if (!(g == Perm::identity(n + m)) && !(g == epsilon(n, m)))
          c.expect("closure.mr.gamma#" + std::to_string(trial),
                   delta_lin(dmr_fn, mops.gamma(x, g, y)).is_zero());
        Lin<Word> xw = random_primitive(ps, n, rng);
        Lin<Word> yw = random_primitive(ps, m, rng);
        c.expect("closure.ps.brace#" + std::to_string(trial),
                 delta_lin(dps_fn, brace(wops, xw, yw)).is_zero());
      }
    }
    // admissible B_q on primitives
    {
      int n = rand_between(rng, 1, 2);
      int q = rand_between(rng, 1, 2);
      std::vector<int> ms;
      int total = n;
      for (int l = 0; l < q; ++l) {
        int d = rand_between(rng, 1, 2);
        ms.push_back(d);
        total += d;
      }
      if (total <= cap) {
        auto sh = enum_shuffles(Composition({n, total - n}, true));
        std::vector<Perm> admissible;
        for (auto& g : sh)
          if (brace_admissible(g, n, ms)) admissible.push_back(g);
        if (!admissible.empty()) {
          Perm g = admissible[rng() % admissible.size()];
          Lin<Perm> x = random_primitive(mr, n, rng);
          std::vector<Lin<Perm>> ys;
          for (int d : ms) ys.push_back(random_primitive(mr, d, rng));
          c.expect("closure.B#" + std::to_string(trial),
                   delta_lin(dmr_fn, brace_B(mops, g, x, ys)).is_zero());
        }
      }
    }
    // L_q^p on preshuffle primitives (K-words sit inside P_oo)
    {
      int q = rand_between(rng, 0, 1);
      int ydeg = rand_between(rng, 1, 2);
      int zdeg = rand_between(rng, 1, 2);
      int total = ydeg + zdeg;
      std::vector<Lin<Word>> xs;
      for (int l = 0; l < q; ++l) {
        xs.push_back(random_primitive(ps, 1, rng));
        total += 1;
      }
      if (total <= cap) {
        Lin<Word> y = random_primitive(ps, ydeg, rng);
        Lin<Word> z = random_primitive(ps, zdeg, rng);
        int p = rand_between(rng, 1, ydeg);
        c.expect("closure.L#" + std::to_string(trial),
                 delta_lin(dps_fn, op_L(wops, p, xs, y, z)).is_zero());
      }
    }
    // interior graftings and braces of tree primitives
    {
      int a = rand_between(rng, 1, 2);
      int b = rand_between(rng, 2, std::max(2, cap - a));
      if (a + b <= cap) {
        Lin<Tree> x = random_primitive(gr, a, rng);
        Lin<Tree> y = random_primitive(gr, b, rng);
        int p = rand_between(rng, 1, b - 1);
        c.expect("closure.gr.insert#" + std::to_string(trial),
                 delta_lin(dgr_fn, tops.insert(x, p, y)).is_zero());
        c.expect("closure.gr.brace#" + std::to_string(trial),
                 delta_lin(dgr_fn, brace(tops, x, y)).is_zero());
      }
    }
    // mu_n on two-associative primitives
    {
      int arity = rand_between(rng, 2, 3);
      std::vector<Lin<TWord>> args;
      int total = 0;
      for (int l = 0; l < arity; ++l) {
        int d = rand_between(rng, 1, 2);
        total += d;
        if (total > cap) break;
        args.push_back(random_primitive(ta, d, rng));
      }
      if (static_cast<int>(args.size()) == arity)
        c.expect("closure.mu#" + std::to_string(trial), delta_lin(dta_fn, op_mu(args)).is_zero());
    }
  }
}

void suite_park(SuiteCtx& c, int cap, std::mt19937_64&) {
  for (int n = 1; n <= std::min(cap, 4); ++n) {
    auto fs = enum_functions(n);
    auto perms = all_perms(n);
    for (auto& f : fs) {
      Word pf = park(f);
      c.expect("park.image[" + to_string(f) + "]", is_parking(pf), to_string(pf));
      for (auto& g : perms)
        c.expect("park.act[" + to_string(f) + ";" + to_string(g) + "]",
                 park(word_act(f, g)) == word_act(pf, g), to_string(g));
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          bool lt = f(i) < f(j), plt = pf(i) < pf(j);
          bool eq = f(i) == f(j), peq = pf(i) == pf(j);
          c.expect("park.order", lt == plt && eq == peq, to_string(f));
        }
    }
  }
  for (int n = 1; n < cap; ++n)
    for (int m = 1; n + m <= std::min(cap, 5); ++m)
      for (auto& f : enum_parking(n))
        for (auto& g : enum_parking(m))
          c.expect("park.concat", park(word_concat(f, g)) == word_concat(park(f), park(g)),
                   to_string(f) + " x " + to_string(g));
  // parking functions close under the shuffle products
  for (int n = 1; n < cap; ++n)
    for (int m = 1; n + m <= cap; ++m)
      for (auto& f : enum_parking(n))
        for (auto& g : enum_parking(m))
          for (auto& gma : enum_shuffles(Composition({n, m}, true)))
            c.expect("pqsym.closed", is_parking(mul_gamma(f, gma, g)),
                     to_string(f) + "," + to_string(g));
  // prime factorization reassembles and primes are stable under the action
  for (int n = 1; n <= std::min(cap, 4); ++n) {
    for (auto& f : enum_parking(n)) {
      ParkingFactorization pf = prime_factorize(f);
      Word acc = pf.factors.front();
      for (std::size_t k = 1; k < pf.factors.size(); ++k) acc = word_concat(acc, pf.factors[k]);
      c.expect("park.refactor[" + to_string(f) + "]", word_act(acc, pf.sigma) == f, to_string(acc));
      for (auto& fac : pf.factors)
        c.expect("park.prime", is_prime_parking(fac), to_string(fac));
    }
    for (auto& f : enum_prime_parking(n))
      for (auto& g : all_perms(n))
        c.expect("park.prime.act", is_prime_parking(word_act(f, g)), to_string(f));
  }
}

void suite_dims(SuiteCtx& c, int cap, std::mt19937_64&) {
  for (auto& row : dims_report(cap))
    c.expect("dims." + row.family + "." + std::to_string(row.degree), row.match,
             row.computed.str() + " vs " + row.expected.str());
}

void suite_boundary(SuiteCtx& c, int cap, std::mt19937_64&) {
  ThetaTable t = ThetaTable::default_xi(std::max(cap, 3));
  for (int n = 1; n <= cap; ++n) {
    auto witness = d_squared_witness(t, n);
    c.expect("boundary.d2.n" + std::to_string(n), !witness.has_value(),
             witness ? to_string(*witness) : "");
  }
  // weights match the surjection counts and the complex is a point
  for (int n = 1; n <= cap; ++n) {
    ComplexReport rep = complex_report(t, n);
    BigInt fub = 0;
    for (int r = 1; r <= n; ++r) {
      // r! * S(n,r) by inclusion-exclusion
      BigInt cnt = 0;
      for (int j = 0; j <= r; ++j) {
        BigInt pw = 1;
        for (int i = 0; i < n; ++i) pw *= r - j;
        cnt += (j % 2 == 0 ? 1 : -1) * binomial(r, j) * pw;
      }
      c.expect("boundary.dim.n" + std::to_string(n) + ".r" + std::to_string(r),
               BigInt(rep.dims[static_cast<std::size_t>(r - 1)]) == cnt,
               std::to_string(rep.dims[static_cast<std::size_t>(r - 1)]));
      fub += cnt;
    }
    c.expect("boundary.euler.n" + std::to_string(n), rep.euler == 1, rep.euler.str());
  }
  {
    ComplexReport rep = complex_report(t, 3);
    c.expect("boundary.hexagon", rep.dims == std::vector<int>({1, 6, 6}), to_json(rep));
  }
  // the two evaluation routes agree
  for (int n = 1; n <= std::min(cap, 4); ++n)
    for (auto& f : enum_surjections(n))
      c.expect("boundary.routes[" + to_string(f) + "]",
               boundary(t, Lin<Word>(f)) == boundary_leibniz(t, Lin<Word>(f)), to_string(f));
  // negative control: a corrupted sign breaks d.d = 0
  {
    Lin<Word> u(xi(3));
    Lin<Word> d1 = boundary(t, u);
    // corrupt: negate every second-weight term before applying d again
    Lin<Word> d1bad;
    bool flip = false;
    for (auto& [w, cv] : d1.terms) {
      d1bad.add(w, flip ? -cv : cv);
      flip = !flip;
    }
    Lin<Word> dd = boundary(t, d1bad);
    c.expect("boundary.negative-control", !dd.is_zero(), "corrupted boundary still squared to zero");
  }
}

void suite_cofree(SuiteCtx& c, int cap, std::mt19937_64&) {
  BialgebraView<Perm> view = mr_view();
  for (int n = 1; n <= std::min(cap, 5); ++n)
    for (auto& s : all_perms(n)) {
      Tensor<Perm> rec = reconstruct(view, Lin<Perm>(s));
      c.check("cofree.rebuild[" + to_string(s) + "]", fold_tensor(view, rec), Lin<Perm>(s));
    }
  for (int n = 1; n <= std::min(cap, 6); ++n) {
    BigInt total = 0;
    for (auto& comp : compositions(n)) {
      BigInt prod = 1;
      for (int p : comp) prod *= irr_count(p);
      total += prod;
    }
    c.expect("cofree.dims.n" + std::to_string(n), total == factorial(n), total.str());
  }
}

void suite_derived_shuffle(SuiteCtx& c, int cap, std::mt19937_64&) {
  AlgebraOps<Tree> ops = tree_ops();
  DeltaFn<Tree> dpr = [](const Tree& t) { return delta_pr(t); };
  auto trees = [](int n) { return enum_binary_trees(n, {"a"}); };
  auto derived = [&](const Lin<Tree>& x, const Perm& g, const Lin<Tree>& y) {
    return shuffle_from_grafting(ops, dpr, x, g, y);
  };
  // the one-block case reduces to ._i
  for (int n = 1; n < cap; ++n)
    for (int m = 1; n + m <= cap; ++m)
      for (auto& x : trees(n))
        for (auto& y : trees(m))
          for (int i = 0; i <= m; ++i)
            c.check("derived.omega", derived(Lin<Tree>(x), omega(i, n, m), Lin<Tree>(y)),
                    ops.insert(Lin<Tree>(x), i, Lin<Tree>(y)));
  for (int n = 1; n <= cap - 2; ++n)
    for (int m = 1; n + m <= cap - 1; ++m)
      for (int r = 1; n + m + r <= cap; ++r) {
        auto quads = matched_quadruples(n, m, r);
        for (auto& x : trees(n))
          for (auto& y : trees(m))
            for (auto& z : trees(r))
              for (auto& q : quads) {
                Lin<Tree> lhs = derived(Lin<Tree>(x), q.gamma, derived(Lin<Tree>(y), q.delta, Lin<Tree>(z)));
                Lin<Tree> rhs = derived(derived(Lin<Tree>(x), q.sigma, Lin<Tree>(y)), q.lambda, Lin<Tree>(z));
                c.check("derived[" + to_string(x) + "," + to_string(y) + "," + to_string(z) + "]",
                        lhs, rhs);
              }
      }
}

void suite_tensor_shuffle(SuiteCtx& c, int cap, std::mt19937_64&) {
  // the nui-derived shuffle products on permutations satisfy the axiom
  auto cmul = [](const Lin<Perm>& a, const Lin<Perm>& b) { return mr_ops().bottom(a, b); };
  DeltaFn<Perm> dmr = [](const Perm& p) { return delta_mr(p); };
  std::function<Lin<Perm>(const Lin<Perm>&, const Lin<Perm>&)> mul = cmul;
  auto derived = [&](const Lin<Perm>& x, const Perm& g, const Lin<Perm>& y) {
    return shuffle_from_nui(mul, dmr, x, g, y);
  };
  for (int n = 1; n <= cap - 2; ++n)
    for (int m = 1; n + m <= cap - 1; ++m)
      for (int r = 1; n + m + r <= cap; ++r) {
        auto quads = matched_quadruples(n, m, r);
        for (auto& x : all_perms(n))
          for (auto& y : all_perms(m))
            for (auto& z : all_perms(r))
              for (auto& q : quads) {
                Lin<Perm> lhs = derived(Lin<Perm>(x), q.gamma, derived(Lin<Perm>(y), q.delta, Lin<Perm>(z)));
                Lin<Perm> rhs = derived(derived(Lin<Perm>(x), q.sigma, Lin<Perm>(y)), q.lambda, Lin<Perm>(z));
                c.check("nui-derived", lhs, rhs);
              }
      }
  // Hadamard and tensor products of two copies of the permutation algebra
  using PP = std::pair<Perm, Perm>;
  auto had_mul = [](const PP& a, const Perm& g, const PP& b) {
    return std::make_pair(mul_gamma(a.first, g, b.first), mul_gamma(a.second, g, b.second));
  };
  for (int n = 1; n <= cap - 2; ++n)
    for (int m = 1; n + m <= std::min(cap, 4) - 1; ++m)
      for (int r = 1; n + m + r <= std::min(cap, 4); ++r) {
        auto quads = matched_quadruples(n, m, r);
        for (auto& x1 : all_perms(n))
          for (auto& y1 : all_perms(m))
            for (auto& z1 : all_perms(r))
              for (auto& q : quads) {
                PP x{x1, x1}, y{y1, y1}, z{z1, z1};
                PP lhs = had_mul(x, q.gamma, had_mul(y, q.delta, z));
                PP rhs = had_mul(had_mul(x, q.sigma, y), q.lambda, z);
                c.expect("hadamard", lhs == rhs, to_string(x1));
              }
      }
  // tensor product via the diagonal decomposition
  auto tens_mul = [](const Lin<PP>& u, const Perm& g, const Lin<PP>& v) {
    Lin<PP> out;
    for (auto& [a, ca] : u.terms)
      for (auto& [b, cb] : v.terms) {
        int n = a.first.size(), m = a.second.size();
        int np = b.first.size(), mp = b.second.size();
        DiagonalDecomposition dd = diagonal_decompose(g, n + m, np + mp, n + np);
        if (dd.n1 != n) continue;
        out.add({mul_gamma(a.first, dd.g1, b.first), mul_gamma(a.second, dd.g2, b.second)},
                ca * cb);
      }
    return out;
  };
  for (int dx = 1; dx <= 2; ++dx)
    for (int dy = 1; dy + dx <= 3; ++dy)
      for (int dz = 1; dz + dy + dx <= std::min(cap, 4); ++dz) {
        // split each degree between the two tensor slots
        for (int ax = 0; ax <= dx; ++ax)
          for (int ay = 0; ay <= dy; ++ay)
            for (int az = 0; az <= dz; ++az) {
              if (ax == 0 || dx - ax == 0 || ay == 0 || dy - ay == 0 || az == 0 || dz - az == 0)
                continue;
              auto quads = matched_quadruples(dx, dy, dz);
              for (auto& xa : all_perms(ax))
                for (auto& xb : all_perms(dx - ax))
                  for (auto& ya : all_perms(ay))
                    for (auto& yb : all_perms(dy - ay))
                      for (auto& za : all_perms(az))
                        for (auto& zb : all_perms(dz - az))
                          for (auto& q : quads) {
                            Lin<PP> x(PP{xa, xb}), y(PP{ya, yb}), z(PP{za, zb});
                            Lin<PP> lhs = tens_mul(x, q.gamma, tens_mul(y, q.delta, z));
                            Lin<PP> rhs = tens_mul(tens_mul(x, q.sigma, y), q.lambda, z);
                            c.expect("tensor", lhs == rhs, to_string(xa));
                          }
            }
      }
}

void suite_coassoc(SuiteCtx& c, int cap, std::mt19937_64&) {
  ThetaTable t = ThetaTable::default_xi(std::max(cap, 2));
  DeltaFn<Perm> dmr = [](const Perm& p) { return delta_mr(p); };
  DeltaFn<Word> dth = [t](const Word& f) { return delta_theta(f, t); };
  DeltaFn<Word> dpq = [](const Word& f) { return delta_pqsym(f); };
  DeltaFn<Word> ddc = [](const Word& f) { return delta_deconcat(f); };
  DeltaFn<Tree> dpr = [](const Tree& s) { return delta_pr(s); };
  DeltaFn<Tree> dtt = [t](const Tree& s) { return delta_theta_tree(s, t); };
  DeltaFn<Perm> das = [](const Perm& p) { return delta_as1(p); };
  DeltaFn<TWord> d2a = [](const TWord& w) { return delta_twoass(w); };
  for (int n = 1; n <= cap; ++n) {
    for (auto& b : all_perms(n)) c.expect("coassoc.mr", coassociative_at(dmr, b), to_string(b));
    for (auto& b : enum_surjections(n))
      c.expect("coassoc.theta", coassociative_at(dth, b), to_string(b));
    for (auto& b : enum_parking(n))
      c.expect("coassoc.pqsym", coassociative_at(dpq, b), to_string(b));
    for (auto& b : enum_surjections(n))
      c.expect("coassoc.deconcat", coassociative_at(ddc, b), to_string(b));
    if (n <= std::min(cap, 4)) {
      for (auto& b : enum_binary_trees(n, {"a", "b"}))
        c.expect("coassoc.pr", coassociative_at(dpr, b), to_string(b));
      for (auto& b : enum_trees(n, t)) {
        c.expect("coassoc.trees", coassociative_at(dtt, b), to_string(b));
      }
      for (auto& b : all_perms(n + 1)) c.expect("coassoc.as1", coassociative_at(das, b), to_string(b));
      for (auto& b : enum_twords(n, {"e"}))
        c.expect("coassoc.2ass", coassociative_at(d2a, b), to_string(b));
    }
  }
  // custom table round: two colors in one degree
  ThetaTable t2;
  t2.add_color("u", 1);
  t2.add_color("v", 1);
  t2.add_color("w", 2);
  t2.add_split("w", "u", "v", Rational(1));
  t2.add_split("w", "v", "u", Rational(2));
  c.expect("coassoc.table", t2.coassociative(), "");
  for (int n = 1; n <= std::min(cap, 3); ++n)
    for (auto& f : enum_surjections(n)) {
      // every admissible coloring of f
      Composition fib = fibers(f);
      std::vector<std::vector<std::string>> per;
      bool ok = true;
      for (int p : fib.parts) {
        std::vector<std::string> opts;
        for (auto& col : t2.colors())
          if (col.degree == p) opts.push_back(col.name);
        if (opts.empty()) ok = false;
        per.push_back(opts);
      }
      if (!ok) continue;
      std::vector<std::size_t> idx(per.size(), 0);
      while (true) {
        std::vector<std::string> cs;
        for (std::size_t k2 = 0; k2 < per.size(); ++k2) cs.push_back(per[k2][idx[k2]]);
        CWord cw(f, cs, t2);
        DeltaFn<CWord> dcw = [t2](const CWord& g) { return delta_theta(g, t2); };
        c.expect("coassoc.cword", coassociative_at(dcw, cw), to_string(cw));
        std::size_t k2 = 0;
        while (k2 < idx.size() && ++idx[k2] == per[k2].size()) idx[k2++] = 0;
        if (k2 == idx.size()) break;
      }
    }
}

void suite_as1_bialgebra(SuiteCtx& c, int cap, std::mt19937_64&) {
  // Definition relations (1)-(3) for the substitution product and its
  // coproduct.  The algebra has a genuine degree-0 component (the one-letter
  // permutation, the unit of every insertion), so the relations only close
  // once that unit is treated as adjoined: factors of degree 0 are dropped
  // from the coproduct.  The literal form is tallied but not asserted.
  auto das_reduced = [](const Perm& p) {
    Tensor<Perm> out;
    for (auto& [t, cv] : delta_as1(p).terms)
      if (t[0].size() > 1 && t[1].size() > 1) out.add(t, cv);
    return out;
  };
  long long literal_mismatches = 0;
  for (int mode = 0; mode < 2; ++mode) {
    auto das = [&](const Perm& p) { return mode == 0 ? das_reduced(p) : delta_as1(p); };
    for (int dn = mode == 0 ? 1 : 0; dn <= cap - 1; ++dn)
      for (int dm = 1; dn + dm <= cap; ++dm)
        for (auto& x : all_perms(dn + 1))
          for (auto& y : all_perms(dm + 1))
            for (int i = 0; i <= dm; ++i) {
              Tensor<Perm> lhs = das(as1_mul(x, i, y));
              Tensor<Perm> rhs;
              Tensor<Perm> dy = das(y), dx = das(x);
              if (i == 0) {
                for (auto& [tp, cv] : dx.terms) rhs.add({tp[0], as1_mul(tp[1], 0, y)}, cv);
                rhs.add({x, y}, Rational(1));
                for (auto& [tp, cv] : dy.terms) rhs.add({as1_mul(x, 0, tp[0]), tp[1]}, cv);
              } else if (i == dm) {
                for (auto& [tp, cv] : dy.terms)
                  rhs.add({tp[0], as1_mul(x, tp[1].size() - 1, tp[1])}, cv);
                rhs.add({y, x}, Rational(1));
                for (auto& [tp, cv] : dx.terms) rhs.add({as1_mul(tp[0], dm, y), tp[1]}, cv);
              } else {
                for (auto& [tp, cv] : dy.terms) {
                  int d1 = tp[0].size() - 1;
                  if (d1 <= i) rhs.add({tp[0], as1_mul(x, i - d1, tp[1])}, cv);
                  if (d1 == i)
                    for (auto& [tx, cx] : dx.terms)
                      rhs.add({as1_mul(tx[0], i, tp[0]), as1_mul(tx[1], 0, tp[1])}, cv * cx);
                  if (d1 >= i) rhs.add({as1_mul(x, i, tp[0]), tp[1]}, cv);
                }
              }
              if (mode == 0) {
                c.check_tensor(
                    "as1[" + to_string(x) + "," + to_string(y) + ";" + std::to_string(i) + "]", lhs,
                    rhs);
              } else {
                c.hit();
                if (!(lhs == rhs)) ++literal_mismatches;
              }
            }
  }
  c.expect("as1.literal-form-fails-as-expected", literal_mismatches > 0,
           "the literal reading unexpectedly holds");
}

void suite_duplicial_admissible(SuiteCtx& c, int cap, std::mt19937_64&) {
  DeltaFn<Tree> dpr = [](const Tree& s) { return delta_pr(s); };
  auto trees = [](int n) { return enum_binary_trees(n, {"a"}); };
  for (int n = 1; n < cap; ++n)
    for (int m = 1; n + m <= cap; ++m)
      for (auto& x : trees(n))
        for (auto& y : trees(m)) {
          for (int which = 0; which < 2; ++which) {
            Lin<Tree> prod = which == 0 ? duplicial_over(Lin<Tree>(x), Lin<Tree>(y))
                                        : duplicial_under(Lin<Tree>(x), Lin<Tree>(y));
            Tensor<Tree> lhs = delta_lin(dpr, prod);
            Tensor<Tree> rhs;
            for (auto& [tp, cv] : dpr(x).terms) {
              Lin<Tree> tail = which == 0 ? duplicial_over(Lin<Tree>(tp[1]), Lin<Tree>(y))
                                          : duplicial_under(Lin<Tree>(tp[1]), Lin<Tree>(y));
              for (auto& [b, c2] : tail.terms) rhs.add({tp[0], b}, cv * c2);
            }
            for (auto& [tp, cv] : dpr(y).terms) {
              Lin<Tree> head = which == 0 ? duplicial_over(Lin<Tree>(x), Lin<Tree>(tp[0]))
                                          : duplicial_under(Lin<Tree>(x), Lin<Tree>(tp[0]));
              for (auto& [b, c2] : head.terms) rhs.add({b, tp[1]}, cv * c2);
            }
            rhs.add({x, y}, Rational(1));
            c.check_tensor(std::string("dup-adm.") + (which == 0 ? "over" : "under") + "[" +
                               to_string(x) + "," + to_string(y) + "]",
                           lhs, rhs);
          }
        }
}

struct SuiteDef {
  std::string name;
  int default_cap;
  bool report_only;
  void (*fn)(SuiteCtx&, int, std::mt19937_64&);
};

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = {
      {"shuffle-assoc", 6, false, suite_shuffle_assoc},
      {"shuffle-bialgebra", 5, false, suite_shuffle_bialgebra},
      {"nui", 5, false, suite_nui},
      {"hopf", 4, false, suite_hopf},
      {"dendriform", 5, false, suite_dendriform},
      {"preshuffle", 5, false, suite_preshuffle},
      {"grafting", 5, false, suite_grafting},
      {"duplicial", 4, false, suite_duplicial},
      {"prim-sh", 5, false, suite_prim_sh},
      {"prim-gr", 4, false, suite_prim_gr},
      {"prim-psh-a", 5, false, suite_prim_psh_a},
      {"prim-closure", 5, false, suite_prim_closure},
      {"park", 4, false, suite_park},
      {"dims", 5, false, suite_dims},
      {"boundary", 5, false, suite_boundary},
      {"cofree", 6, false, suite_cofree},
      {"derived-shuffle", 4, false, suite_derived_shuffle},
      {"tensor-shuffle", 4, false, suite_tensor_shuffle},
      {"coassoc", 5, false, suite_coassoc},
      {"as1-bialgebra", 4, true, suite_as1_bialgebra},
      {"duplicial-admissible", 4, true, suite_duplicial_admissible},
  };
  return defs;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (auto& d : registry()) out.push_back(d.name);
  return out;
}

bool suite_exists(const std::string& name) {
  for (auto& d : registry())
    if (d.name == name) return true;
  return false;
}

bool suite_report_only(const std::string& name) {
  for (auto& d : registry())
    if (d.name == name) return d.report_only;
  return false;
}

int suite_default_cap(const std::string& name) {
  for (auto& d : registry())
    if (d.name == name) return d.default_cap;
  return 0;
}

SuiteReport run_suite(const std::string& name, int cap, std::uint64_t seed) {
  for (auto& d : registry()) {
    if (d.name != name) continue;
    SuiteReport rep;
    rep.name = d.name;
    rep.cap = cap > 0 ? cap : d.default_cap;
    rep.seed = seed;
    rep.report_only = d.report_only;
    SuiteCtx ctx{&rep};
    std::mt19937_64 rng(seed);
    auto start = Clock::now();
    d.fn(ctx, rep.cap, rng);
    rep.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return rep;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteReport> run_battery(std::uint64_t seed) {
  std::vector<SuiteReport> out;
  for (auto& d : registry()) out.push_back(run_suite(d.name, 0, seed));
  return out;
}

std::string SuiteReport::to_json() const {
  std::ostringstream os;
  os << "{\"schema\":1,\"suite\":\"" << name << "\",\"cap\":" << cap << ",\"seed\":" << seed
     << ",\"report_only\":" << (report_only ? "true" : "false") << ",\"cases\":" << cases
     << ",\"millis\":" << millis << ",\"violations\":[";
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << ',';
    os << "{\"case\":\"" << violations[i].case_id << "\",\"detail\":\"" << violations[i].detail
       << "\"}";
  }
  os << "]}";
  return os.str();
}

std::vector<DimsRow> dims_report(int cap) {
  std::vector<DimsRow> rows;
  auto push = [&](const std::string& fam, int n, BigInt got, BigInt want) {
    rows.push_back({fam, n, got, want, got == want});
  };
  BialgebraView<Perm> mr = mr_view();
  for (int n = 1; n <= std::min(cap, 5); ++n) {
    BigInt brute = static_cast<long long>(irr_perms(n).size());
    push("mr", n, prim_dimension(mr, n), irr_count(n));
    push("mr-brute", n, irr_count(n), brute);
  }
  for (int e = 1; e <= 2; ++e) {
    std::vector<std::string> colors;
    for (int k = 0; k < e; ++k) colors.push_back("e" + std::to_string(k + 1));
    BialgebraView<Tree> dup = dup_view(colors);
    for (int n = 1; n <= std::min(cap, 5); ++n) {
      BigInt expect = catalan(n - 1);
      for (int k = 0; k < n; ++k) expect *= e;
      push("dup" + std::to_string(e), n, prim_dimension(dup, n), expect);
    }
  }
  {
    BialgebraView<TWord> ta = twoass_view({"e"});
    for (int n = 1; n <= std::min(cap, 4); ++n)
      push("2ass", n, prim_dimension(ta, n), super_catalan(n - 1));
  }
  {
    ThetaTable t = ThetaTable::default_xi(std::max(cap, 2));
    BialgebraView<Word> ps = psym_view(t);
    for (int n = 1; n <= std::min(cap, 4); ++n) {
      push("psym", n, prim_dimension(ps, n), irr_surjection_count(n));
      push("psym-brute", n, irr_surjection_count(n),
           static_cast<long long>(irr_surjections(n).size()));
    }
  }
  return rows;
}

}  // namespace combalg
