#include "combalg/products.hpp"

#include <algorithm>
#include <stdexcept>

namespace combalg {

namespace {

void require_shuffle(const Perm& gamma, int n, int m, const char* who) {
  if (gamma.size() != n + m || !is_shuffle(gamma, Composition({n, m}, true)))
    throw std::invalid_argument(std::string(who) + ": gamma is not a shuffle of the degrees");
}

}  // namespace

Perm mul_gamma(const Perm& x, const Perm& gamma, const Perm& y) {
  require_shuffle(gamma, x.size(), y.size(), "mul_gamma");
  return compose(concat(x, y), gamma);
}

Word mul_gamma(const Word& x, const Perm& gamma, const Word& y) {
  require_shuffle(gamma, x.size(), y.size(), "mul_gamma");
  return word_act(word_concat(x, y), gamma);
}

CWord mul_gamma(const CWord& x, const Perm& gamma, const CWord& y) {
  CWord r;
  r.base = mul_gamma(x.base, gamma, y.base);
  r.colors = x.colors;
  r.colors.insert(r.colors.end(), y.colors.begin(), y.colors.end());
  return r;
}

Perm mul_i(const Perm& x, int i, const Perm& y) {
  return mul_gamma(x, omega(i, x.size(), y.size()), y);
}

Word mul_i(const Word& x, int i, const Word& y) {
  return mul_gamma(x, omega(i, x.size(), y.size()), y);
}

CWord mul_i(const CWord& x, int i, const CWord& y) {
  return mul_gamma(x, omega(i, degree_of(x), degree_of(y)), y);
}

Tree mul_i(const Tree& x, int i, const Tree& y) { return graft(x, i, y); }

Perm mul_i_direct(const Perm& x, int i, const Perm& y) {
  const int n = x.size(), m = y.size();
  if (i < 0 || i > m) throw std::invalid_argument("mul_i: index out of range");
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n + m));
  for (int j = 1; j <= i; ++j) w.push_back(y(j) + n);
  for (int j = 1; j <= n; ++j) w.push_back(x(j));
  for (int j = i + 1; j <= m; ++j) w.push_back(y(j) + n);
  Perm p;
  p.img = std::move(w);
  return p;
}

Word mul_i_direct(const Word& x, int i, const Word& y) {
  const int m = y.size();
  if (i < 0 || i > m) throw std::invalid_argument("mul_i: index out of range");
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(x.size() + m));
  for (int j = 1; j <= i; ++j) w.push_back(y(j) + x.cod);
  for (int j = 1; j <= x.size(); ++j) w.push_back(x(j));
  for (int j = i + 1; j <= m; ++j) w.push_back(y(j) + x.cod);
  return Word(std::move(w), x.cod + y.cod);
}

Perm as1_mul(const Perm& sigma, int i, const Perm& tau) {
  const int n = sigma.size() - 1;
  const int m = tau.size() - 1;
  if (i < 0 || i > m) throw std::invalid_argument("as1_mul: index out of range");
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n + m + 1));
  for (int j = 1; j <= tau.size(); ++j) {
    int v = tau(j);
    if (v < i + 1)
      w.push_back(v);
    else if (v > i + 1)
      w.push_back(v + n);
    else
      for (int k = 1; k <= sigma.size(); ++k) w.push_back(sigma(k) + i);
  }
  Perm p;
  p.img = std::move(w);
  return p;
}

Perm as1_mul_blocks(const Perm& sigma, int i, const Perm& tau) {
  const int n = sigma.size() - 1;
  const int m = tau.size() - 1;
  if (i < 0 || i > m) throw std::invalid_argument("as1_mul_blocks: index out of range");
  // tau = (t1 x 1_1 x t2).delta with delta in Sh(i,1,m-i); expand the middle
  // block of delta to n+1 slots and reassemble.
  std::vector<int> t1, t2, delta_word(static_cast<std::size_t>(m + 1));
  int next1 = 0, next3 = i + 1;
  for (int j = 1; j <= tau.size(); ++j) {
    int v = tau(j);
    if (v <= i) {
      t1.push_back(v);
      delta_word[static_cast<std::size_t>(j - 1)] = ++next1;
    } else if (v == i + 1) {
      delta_word[static_cast<std::size_t>(j - 1)] = i + 1;
    } else {
      t2.push_back(v - (i + 1));
      delta_word[static_cast<std::size_t>(j - 1)] = ++next3;
    }
  }
  std::vector<int> expanded;
  expanded.reserve(static_cast<std::size_t>(n + m + 1));
  for (int k = 1; k <= m + 1; ++k) {
    int v = delta_word[static_cast<std::size_t>(k - 1)];
    if (v == i + 1)
      for (int r = 0; r <= n; ++r) expanded.push_back(i + 1 + r);
    else
      expanded.push_back(v <= i ? v : v + n);
  }
  Perm t1p, t2p;
  t1p.img = std::move(t1);
  t2p.img = std::move(t2);
  Perm block = concat(concat(t1p, sigma), t2p);
  Perm d;
  d.img = std::move(expanded);
  return compose(block, d);
}

namespace {

// Forest of a tensor word: a single tree contributes its children (itself
// if a bare leaf); a longer word contributes its packed tree.
std::vector<LTree> tword_forest(const TWord& x) {
  if (x.empty()) throw std::invalid_argument("twoass: empty tensor word");
  if (x.size() > 1) return {LTree::node(x)};
  const LTree& t = x.front();
  if (t.is_leaf()) return {t};
  return t.kids;
}

}  // namespace

TWord twoass_dot(const TWord& x, const TWord& y) {
  std::vector<LTree> forest = tword_forest(x);
  std::vector<LTree> right = tword_forest(y);
  forest.insert(forest.end(), right.begin(), right.end());
  return {LTree::node(std::move(forest))};
}

TWord twoass_circ(const TWord& x, const TWord& y) {
  TWord r = x;
  r.insert(r.end(), y.begin(), y.end());
  return r;
}

AlgebraOps<Perm> mr_ops() {
  AlgebraOps<Perm> ops;
  ops.gamma = [](const Lin<Perm>& u, const Perm& g, const Lin<Perm>& v) {
    return bilinear_extend<Perm, Perm>(
        [&](const Perm& a, const Perm& b) { return Lin<Perm>(mul_gamma(a, g, b)); }, u, v);
  };
  ops.insert = [](const Lin<Perm>& u, int i, const Lin<Perm>& v) {
    return bilinear_extend<Perm, Perm>(
        [&](const Perm& a, const Perm& b) { return Lin<Perm>(mul_i(a, i, b)); }, u, v);
  };
  ops.bottom = [](const Lin<Perm>& u, const Lin<Perm>& v) {
    return bilinear_extend<Perm, Perm>(
        [](const Perm& a, const Perm& b) { return Lin<Perm>(concat(a, b)); }, u, v);
  };
  ops.top = [](const Lin<Perm>& u, const Lin<Perm>& v) {
    return bilinear_extend<Perm, Perm>(
        [](const Perm& a, const Perm& b) {
          return Lin<Perm>(compose(concat(b, a), epsilon(b.size(), a.size())));
        },
        u, v);
  };
  return ops;
}

AlgebraOps<Word> word_ops() {
  AlgebraOps<Word> ops;
  ops.gamma = [](const Lin<Word>& u, const Perm& g, const Lin<Word>& v) {
    return bilinear_extend<Word, Word>(
        [&](const Word& a, const Word& b) { return Lin<Word>(mul_gamma(a, g, b)); }, u, v);
  };
  ops.insert = [](const Lin<Word>& u, int i, const Lin<Word>& v) {
    return bilinear_extend<Word, Word>(
        [&](const Word& a, const Word& b) { return Lin<Word>(mul_i(a, i, b)); }, u, v);
  };
  ops.bottom = [](const Lin<Word>& u, const Lin<Word>& v) {
    return bilinear_extend<Word, Word>(
        [](const Word& a, const Word& b) { return Lin<Word>(word_concat(a, b)); }, u, v);
  };
  ops.top = [](const Lin<Word>& u, const Lin<Word>& v) {
    return bilinear_extend<Word, Word>(
        [](const Word& a, const Word& b) {
          return Lin<Word>(word_act(word_concat(b, a), epsilon(b.size(), a.size())));
        },
        u, v);
  };
  return ops;
}

AlgebraOps<CWord> cword_ops() {
  AlgebraOps<CWord> ops;
  ops.gamma = [](const Lin<CWord>& u, const Perm& g, const Lin<CWord>& v) {
    return bilinear_extend<CWord, CWord>(
        [&](const CWord& a, const CWord& b) { return Lin<CWord>(mul_gamma(a, g, b)); }, u, v);
  };
  ops.insert = [](const Lin<CWord>& u, int i, const Lin<CWord>& v) {
    return bilinear_extend<CWord, CWord>(
        [&](const CWord& a, const CWord& b) { return Lin<CWord>(mul_i(a, i, b)); }, u, v);
  };
  ops.bottom = [](const Lin<CWord>& u, const Lin<CWord>& v) {
    return bilinear_extend<CWord, CWord>(
        [](const CWord& a, const CWord& b) {
          return Lin<CWord>(mul_gamma(a, Perm::identity(degree_of(a) + degree_of(b)), b));
        },
        u, v);
  };
  ops.top = [](const Lin<CWord>& u, const Lin<CWord>& v) {
    return bilinear_extend<CWord, CWord>(
        [](const CWord& a, const CWord& b) {
          return Lin<CWord>(mul_gamma(b, epsilon(degree_of(b), degree_of(a)), a));
        },
        u, v);
  };
  return ops;
}

AlgebraOps<Tree> tree_ops() {
  AlgebraOps<Tree> ops;
  ops.insert = [](const Lin<Tree>& u, int i, const Lin<Tree>& v) {
    return bilinear_extend<Tree, Tree>(
        [&](const Tree& a, const Tree& b) { return Lin<Tree>(graft(a, i, b)); }, u, v);
  };
  ops.bottom = [ins = ops.insert](const Lin<Tree>& u, const Lin<Tree>& v) { return ins(u, 0, v); };
  ops.top = [ins = ops.insert](const Lin<Tree>& u, const Lin<Tree>& v) {
    return ins(v, homogeneous_degree(u), u);
  };
  return ops;
}

Lin<Perm> star(const Lin<Perm>& x, const Lin<Perm>& y) {
  return bilinear_extend<Perm, Perm>(
      [](const Perm& a, const Perm& b) {
        Lin<Perm> r;
        for (auto& g : enum_shuffles(Composition({a.size(), b.size()}, true)))
          r.add(mul_gamma(a, g, b), Rational(1));
        return r;
      },
      x, y);
}

Lin<Word> star(const Lin<Word>& x, const Lin<Word>& y) {
  return bilinear_extend<Word, Word>(
      [](const Word& a, const Word& b) {
        Lin<Word> r;
        for (auto& g : enum_shuffles(Composition({a.size(), b.size()}, true)))
          r.add(mul_gamma(a, g, b), Rational(1));
        return r;
      },
      x, y);
}

Lin<Perm> dendriform_succ(const Lin<Perm>& x, const Lin<Perm>& y) {
  return bilinear_extend<Perm, Perm>(
      [](const Perm& a, const Perm& b) {
        Lin<Perm> r;
        const int n = a.size(), m = b.size();
        for (auto& g : enum_shuffles(Composition({n, m}, true)))
          if (g(n + m) == n + m) r.add(mul_gamma(a, g, b), Rational(1));
        return r;
      },
      x, y);
}

Lin<Perm> dendriform_prec(const Lin<Perm>& x, const Lin<Perm>& y) {
  return bilinear_extend<Perm, Perm>(
      [](const Perm& a, const Perm& b) {
        Lin<Perm> r;
        const int n = a.size(), m = b.size();
        for (auto& g : enum_shuffles(Composition({n, m}, true)))
          if (g(n + m) == n) r.add(mul_gamma(a, g, b), Rational(1));
        return r;
      },
      x, y);
}

Lin<Tree> duplicial_over(const Lin<Tree>& x, const Lin<Tree>& y) {
  return tree_ops().bottom(x, y);
}

Lin<Tree> duplicial_under(const Lin<Tree>& x, const Lin<Tree>& y) {
  return tree_ops().top(x, y);
}

bool brace_admissible(const Perm& gamma, int n, const std::vector<int>& ms) {
  int m = 0;
  for (int v : ms) m += v;
  if (gamma.size() != n + m || !is_shuffle(gamma, Composition({n, m}, true))) return false;
  Perm inv = gamma.inverse();
  // x's first letter before y_1's last, y_q's first before x's last.
  int m1 = ms.front();
  int mq_start = n + m - ms.back() + 1;
  return inv(1) < inv(n + m1) && inv(mq_start) < inv(n);
}

Lin<TWord> op_mu(const std::vector<Lin<TWord>>& xs) {
  if (xs.size() < 2) throw std::invalid_argument("op_mu: arity must be >= 2");
  auto dot = [](const Lin<TWord>& a, const Lin<TWord>& b) {
    return bilinear_extend<TWord, TWord>(
        [](const TWord& s, const TWord& t) { return Lin<TWord>(twoass_dot(s, t)); }, a, b);
  };
  auto circ = [](const Lin<TWord>& a, const Lin<TWord>& b) {
    return bilinear_extend<TWord, TWord>(
        [](const TWord& s, const TWord& t) { return Lin<TWord>(twoass_circ(s, t)); }, a, b);
  };
  if (xs.size() == 2) return dot(xs[0], xs[1]) - circ(xs[0], xs[1]);
  const std::size_t n = xs.size();
  Lin<TWord> head = xs[n - 2];
  for (std::size_t k = n - 2; k-- > 0;) head = dot(xs[k], head);
  Lin<TWord> tail = xs[n - 2];
  for (std::size_t k = n - 2; k-- > 1;) tail = dot(xs[k], tail);
  return circ(head, xs[n - 1]) - dot(xs[0], circ(tail, xs[n - 1]));
}

}  // namespace combalg
