#include "combalg/primitives.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "combalg/coproducts.hpp"

namespace combalg {

BialgebraView<Perm> mr_view() {
  BialgebraView<Perm> v;
  v.mul0 = mr_ops().bottom;
  v.delta = [](const Perm& s) { return delta_mr(s); };
  v.basis = [](int n) { return all_perms(n); };
  return v;
}

BialgebraView<Word> psym_view(const ThetaTable& t) {
  BialgebraView<Word> v;
  v.mul0 = word_ops().bottom;
  v.delta = [t](const Word& f) { return delta_theta(f, t); };
  v.basis = [](int n) { return enum_surjections(n); };
  return v;
}

BialgebraView<Word> kword_view(const ThetaTable& t) {
  BialgebraView<Word> v = psym_view(t);
  v.basis = [](int n) { return enum_kwords(n); };
  return v;
}

BialgebraView<Word> pqsym_view() {
  BialgebraView<Word> v;
  v.mul0 = word_ops().bottom;
  v.delta = [](const Word& f) { return delta_pqsym(f); };
  v.basis = [](int n) { return enum_parking(n); };
  return v;
}

BialgebraView<Tree> dup_view(const std::vector<std::string>& colors) {
  BialgebraView<Tree> v;
  v.mul0 = tree_ops().bottom;
  v.delta = [](const Tree& t) { return delta_pr(t); };
  v.basis = [colors](int n) { return enum_binary_trees(n, colors); };
  return v;
}

BialgebraView<Tree> tree_view(const ThetaTable& t) {
  BialgebraView<Tree> v;
  v.mul0 = tree_ops().bottom;
  v.delta = [t](const Tree& s) { return delta_theta_tree(s, t); };
  v.basis = [t](int n) { return enum_trees(n, t); };
  return v;
}

BialgebraView<TWord> twoass_view(const std::vector<std::string>& colors) {
  BialgebraView<TWord> v;
  v.mul0 = [](const Lin<TWord>& a, const Lin<TWord>& b) {
    return bilinear_extend<TWord, TWord>(
        [](const TWord& s, const TWord& t) { return Lin<TWord>(twoass_dot(s, t)); }, a, b);
  };
  v.delta = [](const TWord& w) { return delta_twoass(w); };
  v.basis = [colors](int n) { return enum_twords(n, colors); };
  return v;
}

Lin<Perm> E_sigma(const Perm& sigma) {
  static std::mutex mu;
  static std::map<Perm, Lin<Perm>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto hit = cache.find(sigma);
    if (hit != cache.end()) return hit->second;
  }
  if (!is_irreducible(sigma)) throw std::invalid_argument("E_sigma: permutation is reducible");
  const int n = sigma.size();
  if (n == 1) return Lin<Perm>(Perm::identity(1));
  // sigma = ((1) x s1 x ... x sr) . delta with delta in Sh(1, n-1); the
  // letter 1 sits at offset s inside the span of the last factor.
  const int pos1 = sigma.inverse()(1);
  std::vector<int> rest;
  for (int j = 1; j <= n; ++j)
    if (sigma(j) != 1) rest.push_back(sigma(j) - 1);
  Perm w;
  w.img = std::move(rest);
  std::vector<Perm> factors = irr_factorize(w);
  int lead = 0;
  for (std::size_t k = 0; k + 1 < factors.size(); ++k) lead += factors[k].size();
  const int s = pos1 - 1 - lead;
  if (s < 1 || s > factors.back().size())
    throw std::logic_error("E_sigma: factorization offset out of range");
  std::vector<Lin<Perm>> xs;
  for (std::size_t k = 0; k + 1 < factors.size(); ++k) xs.push_back(E_sigma(factors[k]));
  Lin<Perm> y = E_sigma(factors.back());
  Lin<Perm> out = op_L(mr_ops(), s, xs, y, Lin<Perm>(Perm::identity(1)));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(sigma, out);
  return out;
}

Lin<Word> E_theta(const Word& f, const ThetaTable& t) {
  if (!is_surjection(f)) throw std::invalid_argument("E_theta: word must be surjective");
  if (!word_irreducible(f)) throw std::invalid_argument("E_theta: word is reducible");
  const int n = f.size();
  int n1 = 0;
  for (int v : f.w)
    if (v == 1) ++n1;
  if (n1 == n) return euler_e(psym_view(t), Lin<Word>(f));
  // f = xi_{n1} ._gamma f1 with gamma's small values at the letter-1 spots.
  std::vector<int> gamma_word(static_cast<std::size_t>(n));
  std::vector<int> rest;
  int next_small = 0, next_large = n1;
  for (int j = 1; j <= n; ++j) {
    if (f(j) == 1) {
      gamma_word[static_cast<std::size_t>(j - 1)] = ++next_small;
    } else {
      rest.push_back(f(j) - 1);
      gamma_word[static_cast<std::size_t>(j - 1)] = ++next_large;
    }
  }
  Perm gamma;
  gamma.img = std::move(gamma_word);
  Word f1(std::move(rest), f.cod - 1);
  std::vector<Word> gs = word_irr_factorize(f1);
  const int m1 = gs.front().size();
  Perm inv = gamma.inverse();
  AlgebraOps<Word> ops = word_ops();
  auto chain_of = [&](std::size_t from) {
    Lin<Word> acc = E_theta(gs.back(), t);
    for (std::size_t k = gs.size() - 1; k-- > from;)
      acc = ops.bottom(E_theta(gs[k], t), acc);
    return acc;
  };
  if (inv(1) < inv(n1 + m1)) {
    // x's first letter comes before g1's last: direct brace-type product.
    return ops.gamma(E_theta(xi(n1), t), gamma, chain_of(0));
  }
  // g1 lies entirely before x: peel it into a brace.
  Perm peel = concat(epsilon(n1, m1), Perm::identity(n - n1 - m1));
  Perm gtilde = compose(peel.inverse(), gamma);
  Lin<Word> head = brace(ops, E_theta(gs.front(), t), E_theta(xi(n1), t));
  if (gs.size() == 1) return head;
  if (!is_shuffle(gtilde, Composition({n1 + m1, n - n1 - m1}, true)))
    throw std::logic_error("E_theta: peeled permutation is not a shuffle");
  return ops.gamma(head, gtilde, chain_of(1));
}

// ---- normal forms ----------------------------------------------------------

bool operator==(const PrimTerm& a, const PrimTerm& b) {
  return a.kind == b.kind && a.generator == b.generator && a.gamma == b.gamma && a.p == b.p &&
         a.args == b.args;
}

bool PrimTerm::operator<(const PrimTerm& o) const { return to_string(*this) < to_string(o); }

std::string to_string(const PrimTerm& t) {
  switch (t.kind) {
    case PrimTerm::Kind::Generator:
      return "gen(" + t.generator + ")";
    case PrimTerm::Kind::Brace:
      return "brace(" + to_string(t.args[0]) + "," + to_string(t.args[1]) + ")";
    case PrimTerm::Kind::BraceB: {
      std::string s = "B[" + to_string(t.gamma) + "](" + to_string(t.args[0]) + ";";
      for (std::size_t k = 1; k < t.args.size(); ++k) {
        if (k > 1) s += ',';
        s += to_string(t.args[k]);
      }
      return s + ")";
    }
    case PrimTerm::Kind::OpL: {
      std::string s = "L[" + std::to_string(static_cast<int>(t.args.size()) - 2) + "," +
                      std::to_string(t.p) + "](";
      for (std::size_t k = 0; k + 2 < t.args.size(); ++k) {
        if (k) s += ',';
        s += to_string(t.args[k]);
      }
      s += ";" + to_string(t.args[t.args.size() - 2]) + ";" + to_string(t.args.back());
      return s + ")";
    }
    case PrimTerm::Kind::Mu: {
      std::string s = "mu(";
      for (std::size_t k = 0; k < t.args.size(); ++k) {
        if (k) s += ',';
        s += to_string(t.args[k]);
      }
      return s + ")";
    }
  }
  return {};
}

int term_degree(const PrimTerm& t, const ThetaTable& table) {
  if (t.kind == PrimTerm::Kind::Generator) return table.color_degree(t.generator);
  int d = 0;
  for (auto& a : t.args) d += term_degree(a, table);
  return d;
}

namespace {

// Slice the irreducible concatenation factors of a colored word.
std::vector<CWord> cword_factors(const CWord& f, const ThetaTable& table) {
  std::vector<Word> parts = word_irr_factorize(f.base);
  std::vector<CWord> out;
  std::size_t color_at = 0;
  for (auto& p : parts) {
    std::vector<std::string> cs(f.colors.begin() + static_cast<long>(color_at),
                                f.colors.begin() + static_cast<long>(color_at + static_cast<std::size_t>(p.cod)));
    color_at += static_cast<std::size_t>(p.cod);
    out.emplace_back(p, std::move(cs), table);
  }
  return out;
}

struct Peel {
  int n1 = 0;           // size of the letter-1 fiber
  std::string color;    // its color
  Perm gamma;           // the positional shuffle
  CWord rest;           // the packed remainder
};

Peel peel_first_fiber(const CWord& f, const ThetaTable& table) {
  Peel p;
  const Word& base = f.base;
  const int n = base.size();
  std::vector<int> gamma_word(static_cast<std::size_t>(n));
  std::vector<int> rest;
  int next_small = 0;
  for (int j = 1; j <= n; ++j)
    if (base(j) == 1) ++p.n1;
  int next_large = p.n1;
  for (int j = 1; j <= n; ++j) {
    if (base(j) == 1) {
      gamma_word[static_cast<std::size_t>(j - 1)] = ++next_small;
    } else {
      rest.push_back(base(j) - 1);
      gamma_word[static_cast<std::size_t>(j - 1)] = ++next_large;
    }
  }
  p.color = f.colors.front();
  p.gamma.img = std::move(gamma_word);
  std::vector<std::string> cs(f.colors.begin() + 1, f.colors.end());
  p.rest = CWord(Word(std::move(rest), base.cod - 1), std::move(cs), table);
  return p;
}

}  // namespace

PrimTerm kword_to_term(const CWord& f, const ThetaTable& table) {
  if (!is_kword(f.base)) throw std::invalid_argument("kword_to_term: not a K-word");
  if (!word_irreducible(f.base)) throw std::invalid_argument("kword_to_term: word is reducible");
  if (f.base.cod == 1) {
    PrimTerm t;
    t.kind = PrimTerm::Kind::Generator;
    t.generator = f.colors.front();
    return t;
  }
  Peel p = peel_first_fiber(f, table);
  const int pos1 = p.gamma.inverse()(1);
  std::vector<CWord> gs = cword_factors(p.rest, table);
  int lead = 0;
  for (std::size_t k = 0; k + 1 < gs.size(); ++k) lead += degree_of(gs[k]);
  const int s = (pos1 - 1) - lead;
  if (s < 1 || s > degree_of(gs.back()))
    throw std::logic_error("kword_to_term: offset out of range");
  PrimTerm t;
  t.kind = PrimTerm::Kind::OpL;
  t.p = s;
  for (std::size_t k = 0; k + 1 < gs.size(); ++k) t.args.push_back(kword_to_term(gs[k], table));
  t.args.push_back(kword_to_term(gs.back(), table));
  PrimTerm z;
  z.kind = PrimTerm::Kind::Generator;
  z.generator = p.color;
  t.args.push_back(std::move(z));
  return t;
}

CWord term_to_kword(const PrimTerm& t, const ThetaTable& table) {
  switch (t.kind) {
    case PrimTerm::Kind::Generator: {
      int d = table.color_degree(t.generator);
      return CWord(xi(d), {t.generator}, table);
    }
    case PrimTerm::Kind::OpL: {
      if (t.args.size() < 2 || t.args.back().kind != PrimTerm::Kind::Generator)
        throw std::invalid_argument("term_to_kword: z-slot must be a generator");
      CWord z = term_to_kword(t.args.back(), table);
      // chain = x_1 ._0 ... ._0 x_q ._0 y
      CWord chain = term_to_kword(t.args[t.args.size() - 2], table);
      int m = 0;
      for (std::size_t k = t.args.size() - 2; k-- > 0;) {
        CWord xk = term_to_kword(t.args[k], table);
        m += degree_of(xk);
        chain = mul_gamma(xk, Perm::identity(degree_of(xk) + degree_of(chain)), chain);
      }
      return mul_i(z, t.p + m, chain);
    }
    default:
      throw std::invalid_argument("term_to_kword: not an L-expression term");
  }
}

Tree term_to_tree(const PrimTerm& t, const ThetaTable& table) {
  switch (t.kind) {
    case PrimTerm::Kind::Generator:
      return corolla(t.generator, table.color_degree(t.generator));
    case PrimTerm::Kind::Brace: {
      if (t.args[0].kind != PrimTerm::Kind::Generator)
        throw std::invalid_argument("term_to_tree: brace head must be a generator");
      Tree head = term_to_tree(t.args[0], table);
      Tree tail = term_to_tree(t.args[1], table);
      return graft(tail, head.degree(), head);
    }
    case PrimTerm::Kind::OpL: {
      if (t.args.size() != 2)
        throw std::invalid_argument("term_to_tree: grafting terms use L[0,p]");
      if (t.args.back().kind != PrimTerm::Kind::Generator)
        throw std::invalid_argument("term_to_tree: z-slot must be a generator");
      Tree y = term_to_tree(t.args[0], table);
      Tree z = term_to_tree(t.args[1], table);
      if (t.p < 1 || t.p >= y.degree())
        throw std::invalid_argument("term_to_tree: interior index required");
      return graft(z, t.p, y);
    }
    default:
      throw std::invalid_argument("term_to_tree: unsupported node");
  }
}

namespace {

// The head of a normal-form term is a nested brace word; its letters inside
// the ambient word are tracked as a position set so that the term's shuffle
// can be read off positionally.
struct BetaData {
  PrimTerm head;                 // nested brace word (or bare generator)
  std::vector<int> head_positions;  // 1-based positions of the head letters
  std::vector<PrimTerm> args;
};

BetaData pword_beta(const CWord& f, const ThetaTable& table) {
  if (!word_irreducible(f.base)) throw std::invalid_argument("pword_to_term: word is reducible");
  BetaData out;
  if (f.base.cod == 1) {
    out.head.kind = PrimTerm::Kind::Generator;
    out.head.generator = f.colors.front();
    for (int j = 1; j <= f.base.size(); ++j) out.head_positions.push_back(j);
    return out;
  }
  Peel p = peel_first_fiber(f, table);
  std::vector<CWord> ts = cword_factors(p.rest, table);
  const int n1 = p.n1;
  Perm inv = p.gamma.inverse();
  PrimTerm gen;
  gen.kind = PrimTerm::Kind::Generator;
  gen.generator = p.color;
  std::vector<int> xpos, restpos;
  for (int j = 1; j <= f.base.size(); ++j)
    (f.base(j) == 1 ? xpos : restpos).push_back(j);
  const int h1 = degree_of(ts.front());
  if (inv(1) < inv(n1 + h1)) {
    // x's first letter precedes t1's last: x alone heads the term.
    out.head = gen;
    out.head_positions = xpos;
    for (auto& ti : ts) out.args.push_back(pword_to_term(ti, table));
    return out;
  }
  // t1 lies entirely before x: absorb t1's head into a brace.
  BetaData sub = pword_beta(ts.front(), table);
  out.head.kind = PrimTerm::Kind::Brace;
  out.head.args = {sub.head, gen};
  for (int q : sub.head_positions) out.head_positions.push_back(restpos[static_cast<std::size_t>(q - 1)]);
  out.head_positions.insert(out.head_positions.end(), xpos.begin(), xpos.end());
  std::sort(out.head_positions.begin(), out.head_positions.end());
  out.args = sub.args;
  for (std::size_t k = 1; k < ts.size(); ++k) out.args.push_back(pword_to_term(ts[k], table));
  return out;
}

}  // namespace

PrimTerm pword_to_term(const CWord& f, const ThetaTable& table) {
  BetaData d = pword_beta(f, table);
  if (d.args.empty()) return d.head;
  // The term's shuffle is the positional pattern of the head letters.
  const int n = f.base.size();
  const int hn = static_cast<int>(d.head_positions.size());
  std::vector<int> gamma_word(static_cast<std::size_t>(n), 0);
  int next_small = 0, next_large = hn;
  std::size_t hidx = 0;
  for (int j = 1; j <= n; ++j) {
    if (hidx < d.head_positions.size() && d.head_positions[hidx] == j) {
      gamma_word[static_cast<std::size_t>(j - 1)] = ++next_small;
      ++hidx;
    } else {
      gamma_word[static_cast<std::size_t>(j - 1)] = ++next_large;
    }
  }
  PrimTerm t;
  t.kind = PrimTerm::Kind::BraceB;
  t.gamma.img = std::move(gamma_word);
  t.args.push_back(d.head);
  for (auto& a : d.args) t.args.push_back(a);
  return t;
}

}  // namespace combalg
