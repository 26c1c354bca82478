#include "combalg/boundary.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "combalg/linalg.hpp"
#include "combalg/products.hpp"

namespace combalg {

namespace {

int perm_sign(const Perm& s) {
  int inv = 0;
  for (int i = 1; i <= s.size(); ++i)
    for (int j = i + 1; j <= s.size(); ++j)
      if (s(i) > s(j)) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

// d applied to the generator (xi_k; color): the signed shuffle expansion of
// each Theta split.
Lin<Word> boundary_generator(const ThetaTable& t, int k) {
  Lin<Word> out;
  const std::string color = t.color_of_degree(k).name;
  for (auto& e : t.splits(color)) {
    const int a = t.color_degree(e.left);
    const int b = t.color_degree(e.right);
    Rational sign = (a % 2 == 0) ? Rational(1) : Rational(-1);
    for (auto& g : enum_shuffles(Composition({a, b}))) {
      Rational c = e.coeff * sign * Rational(perm_sign(g));
      out.add(mul_gamma(xi(a), g, xi(b)), c);
    }
  }
  return out;
}

// Replace fiber k of f by a signed split of its color.
Lin<Word> split_fiber(const ThetaTable& t, const Word& f, int k) {
  Composition fib = fibers(f);
  const int size = fib.parts[static_cast<std::size_t>(k - 1)];
  Lin<Word> piece = boundary_generator(t, size);
  Lin<Word> out;
  // Embed each 2-fiber replacement back at fiber k: letters of fiber k take
  // the two new values k, k+1 per the split word; larger letters shift.
  std::vector<int> positions;
  for (int j = 1; j <= f.size(); ++j)
    if (f(j) == k) positions.push_back(j);
  for (auto& [w, c] : piece.terms) {
    std::vector<int> img = f.w;
    for (int& v : img)
      if (v > k) ++v;
    for (std::size_t i = 0; i < positions.size(); ++i)
      img[static_cast<std::size_t>(positions[i] - 1)] = k - 1 + w(static_cast<int>(i) + 1);
    out.add(Word(img, f.cod + 1), c);
  }
  return out;
}

}  // namespace

Lin<Word> boundary(const ThetaTable& t, const Lin<Word>& u) {
  Lin<Word> out;
  for (auto& [f, c] : u.terms) {
    Composition fib = fibers(f);
    // Fiber k carries (-1)^{(k-1) + n_1 + ... + n_{k-1}}; forced by d.d = 0.
    int parity = 0;
    for (int k = 1; k <= f.cod; ++k) {
      Rational sign = parity % 2 == 0 ? Rational(1) : Rational(-1);
      out += (c * sign) * split_fiber(t, f, k);
      parity += 1 + fib.parts[static_cast<std::size_t>(k - 1)];
    }
  }
  return out;
}

Lin<Word> boundary_leibniz(const ThetaTable& t, const Lin<Word>& u) {
  Lin<Word> out;
  for (auto& [f, c] : u.terms) {
    if (f.cod == 1) {
      out += c * boundary_generator(t, f.size());
      continue;
    }
    // f = (xi_{n1}; x1) ._gamma rest; d(f) = d(x1) ._g rest - (-1) x1 ._g d(rest).
    std::vector<int> gamma_word(static_cast<std::size_t>(f.size()));
    std::vector<int> rest;
    int n1 = 0;
    for (int j = 1; j <= f.size(); ++j)
      if (f(j) == 1) ++n1;
    int next_small = 0, next_large = n1;
    for (int j = 1; j <= f.size(); ++j) {
      if (f(j) == 1)
        gamma_word[static_cast<std::size_t>(j - 1)] = ++next_small;
      else {
        rest.push_back(f(j) - 1);
        gamma_word[static_cast<std::size_t>(j - 1)] = ++next_large;
      }
    }
    Perm gamma;
    gamma.img = std::move(gamma_word);
    Word tail(std::move(rest), f.cod - 1);
    AlgebraOps<Word> ops = word_ops();
    Lin<Word> head(xi(n1));
    Lin<Word> first = ops.gamma(boundary_generator(t, n1), gamma, Lin<Word>(tail));
    Lin<Word> second = ops.gamma(head, gamma, boundary_leibniz(t, Lin<Word>(tail)));
    // d(x .g y) = d(x) .g y - (-1)^{|x|} x .g d(y), degree-graded.
    out += c * (n1 % 2 == 0 ? first - second : first + second);
  }
  return out;
}

namespace {

// Whether every fiber size of f carries a color of the family.
bool word_in_family(const ThetaTable& t, const Word& f) {
  for (int p : fibers(f).parts) {
    bool found = false;
    for (auto& c : t.colors())
      if (c.degree == p) found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace

std::optional<Word> d_squared_witness(const ThetaTable& t, int n) {
  for (auto& f : enum_surjections(n)) {
    if (!word_in_family(t, f)) continue;
    Lin<Word> dd = boundary(t, boundary(t, Lin<Word>(f)));
    if (!dd.is_zero()) return f;
  }
  return std::nullopt;
}

bool d_squared_check(const ThetaTable& t, int n) { return !d_squared_witness(t, n).has_value(); }

ComplexReport complex_report(const ThetaTable& t, int n) {
  ComplexReport rep;
  rep.n = n;
  std::vector<std::vector<Word>> by_weight(static_cast<std::size_t>(n + 1));
  for (auto& f : enum_surjections(n)) by_weight[static_cast<std::size_t>(f.cod)].push_back(f);
  for (int r = 1; r <= n; ++r)
    rep.dims.push_back(static_cast<int>(by_weight[static_cast<std::size_t>(r)].size()));
  for (int r = 1; r <= n; ++r) {
    if (r == n) {
      rep.ranks.push_back(0);
      break;
    }
    std::map<Word, int> row_of;
    for (auto& f : by_weight[static_cast<std::size_t>(r + 1)])
      row_of.emplace(f, static_cast<int>(row_of.size()));
    std::vector<SparseVec> cols;
    for (auto& f : by_weight[static_cast<std::size_t>(r)]) {
      Lin<Word> img = boundary(t, Lin<Word>(f));
      SparseVec col;
      for (auto& [w, c] : img.terms) col.emplace(row_of.at(w), c);
      cols.push_back(std::move(col));
    }
    rep.ranks.push_back(rank_of(cols));
  }
  for (int r = 1; r <= n; ++r) {
    int into = (r >= 2) ? rep.ranks[static_cast<std::size_t>(r - 2)] : 0;
    int outof = rep.ranks[static_cast<std::size_t>(r - 1)];
    rep.homology.push_back(rep.dims[static_cast<std::size_t>(r - 1)] - into - outof);
  }
  rep.euler = 0;
  for (int r = 1; r <= n; ++r) {
    BigInt d = rep.dims[static_cast<std::size_t>(r - 1)];
    if ((n - r) % 2 == 0)
      rep.euler += d;
    else
      rep.euler -= d;
  }
  return rep;
}

std::string to_json(const ComplexReport& r) {
  std::ostringstream os;
  os << "{\"n\":" << r.n << ",\"weights\":[";
  for (std::size_t i = 0; i < r.dims.size(); ++i) {
    if (i) os << ',';
    os << "{\"r\":" << i + 1 << ",\"dim\":" << r.dims[i] << "}";
  }
  os << "],\"ranks\":[";
  for (std::size_t i = 0; i < r.ranks.size(); ++i) {
    if (i) os << ',';
    os << r.ranks[i];
  }
  os << "],\"homology\":[";
  for (std::size_t i = 0; i < r.homology.size(); ++i) {
    if (i) os << ',';
    os << r.homology[i];
  }
  os << "],\"euler\":\"" << r.euler.str() << "\"}";
  return os.str();
}

}  // namespace combalg
