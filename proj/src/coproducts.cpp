#include "combalg/coproducts.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "combalg/products.hpp"

namespace combalg {

Tensor<Perm> delta_mr(const Perm& s) {
  Tensor<Perm> r;
  const int n = s.size();
  for (int cut = 1; cut < n; ++cut) {
    std::vector<int> pre(s.img.begin(), s.img.begin() + cut);
    std::vector<int> suf(s.img.begin() + cut, s.img.end());
    r.add({standardize(pre), standardize(suf)}, Rational(1));
  }
  return r;
}

namespace {

// Coefficient carried by one fiber when its first `m` letters go left.
// Empty when the color admits no such split.
Rational fiber_coeff(const ThetaTable& t, const std::string& color, int m, int size, bool& ok) {
  ok = true;
  if (m == 0 || m == size) return Rational(1);
  Rational c;
  for (auto& e : t.splits_left_degree(color, m)) c += e.coeff;
  if (c.is_zero()) ok = false;
  return c;
}

}  // namespace

Tensor<Word> delta_theta(const Word& f, const ThetaTable& t) {
  if (!t.single_per_degree())
    throw std::invalid_argument("delta_theta: plain words need a single color per degree");
  if (!is_surjection(f)) throw std::invalid_argument("delta_theta: word must be surjective");
  Tensor<Word> r;
  const int n = f.size();
  MonotoneDecomposition md = monotone_decompose(f);
  for (int cut = 1; cut < n; ++cut) {
    std::vector<int> mparts(static_cast<std::size_t>(f.cod), 0);
    for (int p = 1; p <= cut; ++p) ++mparts[static_cast<std::size_t>(f(p) - 1)];
    Rational coeff(1);
    bool ok = true;
    for (int j = 0; j < f.cod && ok; ++j) {
      int size = md.blocks.parts[static_cast<std::size_t>(j)];
      bool entry_ok = true;
      coeff *= fiber_coeff(t, t.color_of_degree(size).name, mparts[static_cast<std::size_t>(j)],
                           size, entry_ok);
      ok = entry_ok;
    }
    if (!ok) continue;
    std::vector<int> pre(md.sigma.img.begin(), md.sigma.img.begin() + cut);
    std::vector<int> suf(md.sigma.img.begin() + cut, md.sigma.img.end());
    std::vector<int> rest(static_cast<std::size_t>(f.cod));
    for (int j = 0; j < f.cod; ++j)
      rest[static_cast<std::size_t>(j)] =
          md.blocks.parts[static_cast<std::size_t>(j)] - mparts[static_cast<std::size_t>(j)];
    Word left = word_act(xi_word(Composition(mparts, true)), standardize(pre));
    Word right = word_act(xi_word(Composition(rest, true)), standardize(suf));
    r.add({left, right}, coeff);
  }
  return r;
}

Tensor<CWord> delta_theta(const CWord& f, const ThetaTable& t) {
  Tensor<CWord> r;
  const int n = degree_of(f);
  MonotoneDecomposition md = monotone_decompose(f.base);
  const int nf = f.base.cod;
  for (int cut = 1; cut < n; ++cut) {
    std::vector<int> mparts(static_cast<std::size_t>(nf), 0);
    for (int p = 1; p <= cut; ++p) ++mparts[static_cast<std::size_t>(f.base(p) - 1)];
    // Per fiber, the admissible color splits at this cut.
    struct Opt {
      std::string left, right;  // empty = absent side
      Rational c;
    };
    std::vector<std::vector<Opt>> options(static_cast<std::size_t>(nf));
    bool feasible = true;
    for (int j = 0; j < nf && feasible; ++j) {
      int size = md.blocks.parts[static_cast<std::size_t>(j)];
      int m = mparts[static_cast<std::size_t>(j)];
      auto& opts = options[static_cast<std::size_t>(j)];
      const std::string& color = f.colors[static_cast<std::size_t>(j)];
      if (m == 0)
        opts.push_back({"", color, Rational(1)});
      else if (m == size)
        opts.push_back({color, "", Rational(1)});
      else
        for (auto& e : t.splits_left_degree(color, m)) opts.push_back({e.left, e.right, e.coeff});
      if (opts.empty()) feasible = false;
    }
    if (!feasible) continue;
    std::vector<int> pre(md.sigma.img.begin(), md.sigma.img.begin() + cut);
    std::vector<int> suf(md.sigma.img.begin() + cut, md.sigma.img.end());
    std::vector<int> rest(static_cast<std::size_t>(nf));
    for (int j = 0; j < nf; ++j)
      rest[static_cast<std::size_t>(j)] =
          md.blocks.parts[static_cast<std::size_t>(j)] - mparts[static_cast<std::size_t>(j)];
    Word left_word = word_act(xi_word(Composition(mparts, true)), standardize(pre));
    Word right_word = word_act(xi_word(Composition(rest, true)), standardize(suf));
    std::vector<std::size_t> idx(static_cast<std::size_t>(nf), 0);
    while (true) {
      Rational coeff(1);
      std::vector<std::string> lcolors, rcolors;
      for (int j = 0; j < nf; ++j) {
        const Opt& o = options[static_cast<std::size_t>(j)][idx[static_cast<std::size_t>(j)]];
        coeff *= o.c;
        if (!o.left.empty()) lcolors.push_back(o.left);
        if (!o.right.empty()) rcolors.push_back(o.right);
      }
      r.add({CWord(left_word, lcolors, t), CWord(right_word, rcolors, t)}, coeff);
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == options[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return r;
}

Tensor<Word> delta_pqsym(const Word& f) {
  Tensor<Word> r;
  const int n = f.size();
  for (int cut = 1; cut < n; ++cut) {
    Word pre(std::vector<int>(f.w.begin(), f.w.begin() + cut), f.cod);
    Word suf(std::vector<int>(f.w.begin() + cut, f.w.end()), f.cod);
    r.add({park(pre), park(suf)}, Rational(1));
  }
  return r;
}

Tensor<Tree> delta_pr(const Tree& t) {
  Tensor<Tree> r;
  if (t.is_leaf() || t.degree() <= 1) return r;
  if (t.kids.size() != 2) throw std::invalid_argument("delta_pr: binary trees only");
  const Tree& l = t.kids[0];
  const Tree& w = t.kids[1];
  const std::string& e = t.color;
  for (auto& [pair, c] : delta_pr(l).terms)
    r.add({pair[0], Tree(e, {pair[1], w})}, c);
  if (!l.is_leaf()) r.add({l, Tree(e, {Tree::leaf(), w})}, Rational(1));
  if (!w.is_leaf()) r.add({Tree(e, {l, Tree::leaf()}), w}, Rational(1));
  for (auto& [pair, c] : delta_pr(w).terms)
    r.add({Tree(e, {l, pair[0]}), pair[1]}, c);
  return r;
}

namespace {

// Cuts of a boundary child: trivial left edge, genuine splits, trivial
// right edge (the two coincide on a bare leaf).
std::vector<std::pair<std::pair<Tree, Tree>, Rational>> boundary_cuts(const Tree& s,
                                                                      const ThetaTable& table) {
  std::vector<std::pair<std::pair<Tree, Tree>, Rational>> out;
  out.push_back({{Tree::leaf(), s}, Rational(1)});
  for (auto& [pair, c] : delta_theta_tree(s, table).terms) out.push_back({{pair[0], pair[1]}, c});
  if (!s.is_leaf()) out.push_back({{s, Tree::leaf()}, Rational(1)});
  return out;
}

}  // namespace

Tensor<Tree> delta_theta_tree(const Tree& t, const ThetaTable& table) {
  Tensor<Tree> r;
  if (t.is_leaf() || t.degree() <= 1) {
    // A corolla of a degree-1 color has no reduced splits.
    return r;
  }
  const auto& kids = t.kids;
  const int n = static_cast<int>(kids.size()) - 1;
  // (a) cuts through the root color.
  for (auto& e : table.splits(t.color)) {
    int i = table.color_degree(e.left);
    for (auto& [cut, c] : boundary_cuts(kids[static_cast<std::size_t>(i)], table)) {
      std::vector<Tree> lk(kids.begin(), kids.begin() + i);
      lk.push_back(cut.first);
      std::vector<Tree> rk{cut.second};
      rk.insert(rk.end(), kids.begin() + i + 1, kids.end());
      r.add({Tree(e.left, std::move(lk)), Tree(e.right, std::move(rk))}, e.coeff * c);
    }
  }
  // (b) cuts inside the leftmost child, root goes right.
  {
    const Tree& first = kids.front();
    auto add_b = [&](const Tree& a, const Tree& b, const Rational& c) {
      std::vector<Tree> rk{b};
      rk.insert(rk.end(), kids.begin() + 1, kids.end());
      r.add({a, Tree(t.color, std::move(rk))}, c);
    };
    for (auto& [pair, c] : delta_theta_tree(first, table).terms) add_b(pair[0], pair[1], c);
    if (!first.is_leaf()) add_b(first, Tree::leaf(), Rational(1));
  }
  // (c) cuts inside the rightmost child, root goes left.
  {
    const Tree& last = kids.back();
    auto add_c = [&](const Tree& a, const Tree& b, const Rational& c) {
      std::vector<Tree> lk(kids.begin(), kids.end() - 1);
      lk.push_back(a);
      r.add({Tree(t.color, std::move(lk)), b}, c);
    };
    for (auto& [pair, c] : delta_theta_tree(last, table).terms) add_c(pair[0], pair[1], c);
    if (!last.is_leaf()) add_c(Tree::leaf(), last, Rational(1));
  }
  return r;
}

Tensor<Perm> delta_as1(const Perm& s) {
  Tensor<Perm> r;
  const int m = s.size() - 1;
  for (int i = 0; i <= m; ++i) {
    std::vector<int> low, high;
    for (int j = 1; j <= s.size(); ++j) {
      if (s(j) <= i + 1) low.push_back(s(j));
      if (s(j) >= i + 1) high.push_back(s(j) - i);
    }
    Perm a, b;
    a.img = std::move(low);
    b.img = std::move(high);
    r.add({a, b}, Rational(1));
  }
  return r;
}

Tensor<Word> delta_deconcat(const Word& f) {
  Tensor<Word> r;
  for (int cut = 1; cut < f.size(); ++cut) {
    Word pre(std::vector<int>(f.w.begin(), f.w.begin() + cut), f.cod);
    Word suf(std::vector<int>(f.w.begin() + cut, f.w.end()), f.cod);
    r.add({pre, suf}, Rational(1));
  }
  return r;
}

Word word_juxtapose(const Word& f, const Word& g) {
  std::vector<int> w = f.w;
  w.insert(w.end(), g.w.begin(), g.w.end());
  return Word(std::move(w), std::max(f.cod, g.cod));
}

namespace {

TWord unpack_tree(const LTree& t) {
  if (t.is_leaf()) return {t};
  return t.kids;
}

}  // namespace

Tensor<TWord> delta_twoass(const TWord& x) {
  static std::mutex mu;
  static std::map<TWord, Tensor<TWord>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto hit = cache.find(x);
    if (hit != cache.end()) return hit->second;
  }
  Tensor<TWord> r;
  auto dot = [](const TWord& a, const TWord& b) { return twoass_dot(a, b); };
  if (x.size() == 1) {
    const LTree& t = x.front();
    if (!t.is_leaf()) {
      // t = u . v along its leftmost child.
      TWord u = unpack_tree(t.kids.front());
      TWord v;
      if (t.kids.size() == 2)
        v = unpack_tree(t.kids[1]);
      else
        v = {LTree::node(std::vector<LTree>(t.kids.begin() + 1, t.kids.end()))};
      for (auto& [pair, c] : delta_twoass(v).terms) r.add({dot(u, pair[0]), pair[1]}, c);
      for (auto& [pair, c] : delta_twoass(u).terms) r.add({pair[0], dot(pair[1], v)}, c);
      r.add({u, v}, Rational(1));
    }
  } else {
    TWord y(x.begin(), x.end() - 1);
    TWord t{x.back()};
    for (auto& [pair, c] : delta_twoass(t).terms)
      r.add({twoass_circ(y, pair[0]), pair[1]}, c);
    for (auto& [pair, c] : delta_twoass(y).terms)
      r.add({pair[0], twoass_circ(pair[1], t)}, c);
    r.add({y, t}, Rational(1));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(x, r);
  return r;
}

}  // namespace combalg
