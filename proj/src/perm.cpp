#include "combalg/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace combalg {

Perm::Perm(std::vector<int> w) : img(std::move(w)) {
  std::vector<bool> seen(img.size(), false);
  for (int v : img) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("Perm: not a bijection of {1..n}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  Perm p;
  p.img = std::move(w);
  return p;
}

Perm Perm::inverse() const {
  Perm r;
  r.img.resize(img.size());
  for (int i = 1; i <= size(); ++i) r.img[static_cast<std::size_t>((*this)(i)-1)] = i;
  return r;
}

Composition::Composition(std::vector<int> p, bool extended) : parts(std::move(p)) {
  for (int v : parts)
    if (v < 0 || (!extended && v == 0))
      throw std::invalid_argument("Composition: invalid part");
}

int Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Composition Composition::reduced() const {
  std::vector<int> p;
  for (int v : parts)
    if (v > 0) p.push_back(v);
  Composition c;
  c.parts = std::move(p);
  return c;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  Perm r;
  r.img.resize(a.img.size());
  for (int i = 1; i <= a.size(); ++i) r.img[static_cast<std::size_t>(i - 1)] = a(b(i));
  return r;
}

std::vector<int> act_right(const std::vector<int>& f, const Perm& s) {
  if (static_cast<int>(f.size()) != s.size())
    throw std::invalid_argument("act_right: length mismatch");
  std::vector<int> r(f.size());
  for (int i = 1; i <= s.size(); ++i)
    r[static_cast<std::size_t>(i - 1)] = f[static_cast<std::size_t>(s(i) - 1)];
  return r;
}

Perm concat(const Perm& a, const Perm& b) {
  Perm r;
  r.img = a.img;
  r.img.reserve(a.img.size() + b.img.size());
  for (int v : b.img) r.img.push_back(v + a.size());
  return r;
}

Perm standardize(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
    return w[static_cast<std::size_t>(i)] < w[static_cast<std::size_t>(j)];
  });
  Perm r;
  r.img.resize(static_cast<std::size_t>(n));
  for (int rank = 0; rank < n; ++rank)
    r.img[static_cast<std::size_t>(idx[static_cast<std::size_t>(rank)])] = rank + 1;
  return r;
}

bool is_shuffle(const Perm& gamma, const Composition& c) {
  Composition red = c.reduced();
  if (gamma.size() != red.total()) throw std::invalid_argument("is_shuffle: length mismatch");
  Perm inv = gamma.inverse();
  int offset = 0;
  for (int part : red.parts) {
    for (int v = offset + 1; v < offset + part; ++v)
      if (inv(v) >= inv(v + 1)) return false;
    offset += part;
  }
  return true;
}

std::vector<Perm> enum_shuffles(const Composition& c) {
  Composition red = c.reduced();
  const int n = red.total();
  // A shuffle is determined by the multiset word of block labels: block-k
  // values fill the label-k positions in increasing order.
  std::vector<int> labels;
  for (int k = 0; k < red.length(); ++k)
    labels.insert(labels.end(), static_cast<std::size_t>(red.parts[static_cast<std::size_t>(k)]), k);
  std::vector<int> offsets(red.parts.size() + 1, 0);
  for (std::size_t k = 0; k < red.parts.size(); ++k)
    offsets[k + 1] = offsets[k] + red.parts[k];
  std::sort(labels.begin(), labels.end());
  std::vector<Perm> out;
  do {
    std::vector<int> next(offsets.begin(), offsets.end() - 1);
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      word[static_cast<std::size_t>(i)] = ++next[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])];
    Perm g;
    g.img = std::move(word);
    out.push_back(std::move(g));
  } while (std::next_permutation(labels.begin(), labels.end()));
  std::sort(out.begin(), out.end());
  return out;
}

ShuffleId::ShuffleId(Perm g, Composition c) : gamma(std::move(g)), blocks(std::move(c)) {
  if (!is_shuffle(gamma, blocks))
    throw std::invalid_argument("ShuffleId: not a shuffle of the given type");
  inv = gamma.inverse();
}

Perm epsilon(int n, int m) {
  Perm p;
  p.img.reserve(static_cast<std::size_t>(n + m));
  for (int i = 1; i <= m; ++i) p.img.push_back(n + i);
  for (int i = 1; i <= n; ++i) p.img.push_back(i);
  return p;
}

Perm omega(int i, int n, int m) {
  if (i < 0 || i > m) throw std::invalid_argument("omega: index out of range");
  return concat(epsilon(n, i), Perm::identity(m - i));
}

CosetDecomposition coset_decompose(const Perm& s, int i) {
  const int n = s.size();
  if (i < 0 || i > n) throw std::invalid_argument("coset_decompose: index out of range");
  // gamma places 1..i at the positions carrying values <= i, in order; the
  // factors are the value subwords.
  std::vector<int> small, large, gamma_word(static_cast<std::size_t>(n));
  int next_small = 0, next_large = i;
  for (int j = 1; j <= n; ++j) {
    if (s(j) <= i) {
      small.push_back(s(j));
      gamma_word[static_cast<std::size_t>(j - 1)] = ++next_small;
    } else {
      large.push_back(s(j) - i);
      gamma_word[static_cast<std::size_t>(j - 1)] = ++next_large;
    }
  }
  CosetDecomposition d;
  d.left.img = std::move(small);
  d.right.img = std::move(large);
  d.gamma.img = std::move(gamma_word);
  return d;
}

DiagonalDecomposition diagonal_decompose(const Perm& gamma, int n, int m, int r) {
  if (gamma.size() != n + m) throw std::invalid_argument("diagonal_decompose: size mismatch");
  if (r < 0 || r > n + m) throw std::invalid_argument("diagonal_decompose: cut out of range");
  DiagonalDecomposition d;
  for (int j = 1; j <= r; ++j)
    if (gamma(j) <= n) ++d.n1;
  d.m1 = r - d.n1;
  // Small values among the first r positions are exactly 1..n1 and large
  // ones n+1..n+m1, because gamma is an (n,m)-shuffle.
  d.g1.img.reserve(static_cast<std::size_t>(r));
  for (int j = 1; j <= r; ++j)
    d.g1.img.push_back(gamma(j) <= n ? gamma(j) : d.n1 + (gamma(j) - n));
  d.g2.img.reserve(static_cast<std::size_t>(n + m - r));
  for (int j = r + 1; j <= n + m; ++j)
    d.g2.img.push_back(gamma(j) <= n ? gamma(j) - d.n1 : gamma(j) - r);
  return d;
}

namespace {

// Maximal runs of small (<= n) and large (> n) values of a two-block shuffle.
// Returns (starts_large, run lengths).
std::pair<bool, std::vector<int>> value_runs(const Perm& gamma, int n) {
  std::vector<int> runs;
  bool starts_large = false;
  for (int j = 1; j <= gamma.size(); ++j) {
    bool large = gamma(j) > n;
    if (j == 1) {
      starts_large = large;
      runs.push_back(1);
    } else {
      bool prev_large = (runs.size() % 2 == 1) == starts_large;
      if (large == prev_large)
        ++runs.back();
      else
        runs.push_back(1);
    }
  }
  return {starts_large, runs};
}

}  // namespace

GraftBlocks blocks_graft(const Perm& gamma, int n, int m) {
  if (gamma.size() != n + m) throw std::invalid_argument("blocks_graft: size mismatch");
  GraftBlocks b;
  auto [starts_large, runs] = value_runs(gamma, n);
  b.m_parts.push_back(0);
  bool large = starts_large;
  for (int len : runs) {
    if (large) {
      if (b.n_parts.empty())
        b.m_parts[0] = len;
      else
        b.m_parts.push_back(len);
    } else {
      while (b.m_parts.size() < b.n_parts.size() + 1) b.m_parts.push_back(0);
      b.n_parts.push_back(len);
    }
    large = !large;
  }
  while (b.m_parts.size() < b.n_parts.size() + 1) b.m_parts.push_back(0);
  if (n == 0) b.m_parts = {m};
  return b;
}

UtilBlocks blocks_util(const Perm& gamma, int n, int m) {
  if (gamma.size() != n + m) throw std::invalid_argument("blocks_util: size mismatch");
  UtilBlocks b;
  auto [starts_large, runs] = value_runs(gamma, n);
  bool large = starts_large;
  if (starts_large) b.n_parts.push_back(0);
  for (int len : runs) {
    if (large)
      b.m_parts.push_back(len);
    else
      b.n_parts.push_back(len);
    large = !large;
  }
  if (b.m_parts.size() < b.n_parts.size()) b.m_parts.push_back(0);
  return b;
}

bool is_irreducible(const Perm& s) {
  const int n = s.size();
  if (n == 0) return false;
  int max_seen = 0;
  for (int j = 1; j < n; ++j) {
    max_seen = std::max(max_seen, s(j));
    if (max_seen == j) return false;
  }
  return true;
}

std::vector<Perm> irr_factorize(const Perm& s) {
  std::vector<Perm> out;
  const int n = s.size();
  int start = 1, max_seen = 0;
  for (int j = 1; j <= n; ++j) {
    max_seen = std::max(max_seen, s(j));
    if (max_seen == j) {
      Perm f;
      for (int k = start; k <= j; ++k) f.img.push_back(s(k) - (start - 1));
      out.push_back(std::move(f));
      start = j + 1;
    }
  }
  return out;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

BigInt irr_count(int n) {
  std::vector<BigInt> a(static_cast<std::size_t>(n + 1));
  for (int k = 1; k <= n; ++k) {
    BigInt v = factorial(k);
    for (int i = 1; i < k; ++i) v -= a[static_cast<std::size_t>(i)] * factorial(k - i);
    a[static_cast<std::size_t>(k)] = v;
  }
  return a[static_cast<std::size_t>(n)];
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = Perm::identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.img.begin(), p.img.end()));
  return out;
}

std::vector<Perm> irr_perms(int n) {
  std::vector<Perm> out;
  for (auto& p : all_perms(n))
    if (is_irreducible(p)) out.push_back(p);
  return out;
}

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  for (int first = 1; first <= n; ++first)
    for (auto rest : compositions(n - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

std::vector<std::vector<int>> compositions_len(int n, int k, bool allow_zero) {
  std::vector<std::vector<int>> out;
  if (k == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  int lo = allow_zero ? 0 : 1;
  for (int first = lo; first <= n; ++first)
    for (auto rest : compositions_len(n - first, k - 1, allow_zero)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

std::string to_string(const Perm& p) {
  std::string s;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) s += ',';
    s += std::to_string(p(i));
  }
  return s;
}

}  // namespace combalg
