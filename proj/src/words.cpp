#include "combalg/words.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace combalg {

Word::Word(std::vector<int> letters, int codomain) : w(std::move(letters)), cod(codomain) {
  for (int v : w)
    if (v < 1 || v > cod) throw std::invalid_argument("Word: letter outside {1..cod}");
}

Word Word::packed(std::vector<int> letters) {
  int mx = 0;
  for (int v : letters) mx = std::max(mx, v);
  return Word(std::move(letters), mx);
}

bool is_surjection(const Word& f) {
  std::vector<bool> hit(static_cast<std::size_t>(f.cod), false);
  for (int v : f.w) hit[static_cast<std::size_t>(v - 1)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_kword(const Word& f) {
  if (!is_surjection(f)) return false;
  const int n = f.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (f(i) == f(j))
        for (int k = i; k <= j; ++k)
          if (f(k) > f(i)) return false;
  return true;
}

bool is_parking(const Word& f) {
  std::vector<int> s = f.w;
  std::sort(s.begin(), s.end());
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (s[static_cast<std::size_t>(i)] > i + 1) return false;
  return true;
}

bool is_prime_parking(const Word& f) {
  if (!is_parking(f)) return false;
  return static_cast<int>(breakpoints(f).size()) == (f.size() == 0 ? 1 : 2);
}

WordFlags classify(const Word& f) {
  WordFlags fl;
  fl.function = true;
  fl.surjection = is_surjection(f);
  fl.kword = fl.surjection && is_kword(f);
  fl.parking = is_parking(f);
  fl.prime_parking = fl.parking && is_prime_parking(f);
  return fl;
}

Word xi(int n) { return Word(std::vector<int>(static_cast<std::size_t>(n), 1), 1); }

Word xi_word(const Composition& c) {
  Composition red = c.reduced();
  std::vector<int> w;
  for (int k = 0; k < red.length(); ++k)
    w.insert(w.end(), static_cast<std::size_t>(red.parts[static_cast<std::size_t>(k)]), k + 1);
  return Word(std::move(w), red.length());
}

Composition fibers(const Word& f) {
  if (!is_surjection(f)) throw std::invalid_argument("fibers: word is not surjective");
  std::vector<int> parts(static_cast<std::size_t>(f.cod), 0);
  for (int v : f.w) ++parts[static_cast<std::size_t>(v - 1)];
  Composition c;
  c.parts = std::move(parts);
  return c;
}

MonotoneDecomposition monotone_decompose(const Word& f) {
  MonotoneDecomposition d;
  std::vector<int> s = f.w;
  std::sort(s.begin(), s.end());
  d.sorted = Word(std::move(s), f.cod);
  d.sigma = standardize(f.w);
  std::map<int, int> count;
  for (int v : f.w) ++count[v];
  std::vector<int> parts;
  for (auto& [v, c] : count) parts.push_back(c);
  d.blocks = Composition(std::move(parts));
  return d;
}

Word surjection_from_coset(const Composition& c, const Perm& delta) {
  if (!is_shuffle(delta, c))
    throw std::invalid_argument("surjection_from_coset: delta is not a shuffle of the composition");
  Word base = xi_word(c);
  return Word(act_right(base.w, delta), base.cod);
}

Word word_concat(const Word& f, const Word& g) {
  std::vector<int> w = f.w;
  w.reserve(f.w.size() + g.w.size());
  for (int v : g.w) w.push_back(v + f.cod);
  return Word(std::move(w), f.cod + g.cod);
}

Word word_act(const Word& f, const Perm& s) { return Word(act_right(f.w, s), f.cod); }

Word pack(const Word& f) {
  std::vector<int> vals = f.w;
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::map<int, int> rank;
  for (int i = 0; i < static_cast<int>(vals.size()); ++i) rank[vals[static_cast<std::size_t>(i)]] = i + 1;
  std::vector<int> w;
  w.reserve(f.w.size());
  for (int v : f.w) w.push_back(rank[v]);
  return Word(std::move(w), static_cast<int>(vals.size()));
}

Word park(const Word& f) {
  const int n = f.size();
  if (n == 0) return Word({}, 0);
  std::vector<int> s = f.w;
  std::sort(s.begin(), s.end());
  std::vector<int> ps(static_cast<std::size_t>(n));
  ps[0] = 1;
  for (int j = 1; j < n; ++j)
    ps[static_cast<std::size_t>(j)] =
        std::min(ps[static_cast<std::size_t>(j - 1)] + s[static_cast<std::size_t>(j)] - s[static_cast<std::size_t>(j - 1)], j + 1);
  Perm sigma = standardize(f.w);
  return Word(act_right(ps, sigma), n);
}

std::vector<int> breakpoints(const Word& f) {
  const int n = f.size();
  std::vector<int> out;
  for (int b = 0; b <= n; ++b) {
    int cnt = 0;
    for (int v : f.w)
      if (v <= b) ++cnt;
    if (cnt == b) out.push_back(b);
  }
  return out;
}

ParkingFactorization prime_factorize(const Word& f) {
  if (!is_parking(f)) throw std::invalid_argument("prime_factorize: not a parking function");
  const int n = f.size();
  std::vector<int> bps = breakpoints(f);
  ParkingFactorization r;
  std::vector<int> sigma_word(static_cast<std::size_t>(n));
  int start = 0;
  for (std::size_t k = 0; k + 1 < bps.size(); ++k) {
    int lo = bps[k], hi = bps[k + 1];
    std::vector<int> piece;
    int next = start;
    for (int i = 1; i <= n; ++i)
      if (f(i) > lo && f(i) <= hi) {
        piece.push_back(f(i) - lo);
        sigma_word[static_cast<std::size_t>(i - 1)] = ++next;
      }
    r.factors.emplace_back(std::move(piece), hi - lo);
    start += hi - lo;
  }
  r.sigma.img = std::move(sigma_word);
  return r;
}

bool word_irreducible(const Word& f) {
  const int n = f.size();
  if (n == 0) return false;
  // Reducible iff some proper prefix's letters are exactly an initial value
  // segment and the suffix lies strictly above it.
  for (int cut = 1; cut < n; ++cut) {
    int maxpre = 0, minsuf = f.cod + 1;
    for (int i = 1; i <= cut; ++i) maxpre = std::max(maxpre, f(i));
    for (int i = cut + 1; i <= n; ++i) minsuf = std::min(minsuf, f(i));
    if (minsuf > maxpre) return false;
  }
  return true;
}

std::vector<Word> word_irr_factorize(const Word& f) {
  std::vector<Word> out;
  const int n = f.size();
  int start = 1, offset = 0, maxpre = 0;
  for (int cut = 1; cut <= n; ++cut) {
    maxpre = std::max(maxpre, f(cut));
    int minsuf = f.cod + 1;
    for (int i = cut + 1; i <= n; ++i) minsuf = std::min(minsuf, f(i));
    if (cut == n || minsuf > maxpre) {
      std::vector<int> piece;
      for (int i = start; i <= cut; ++i) piece.push_back(f(i) - offset);
      out.emplace_back(std::move(piece), maxpre - offset);
      start = cut + 1;
      offset = maxpre;
    }
  }
  return out;
}

namespace {
// Enumeration guards; every computation in the library is per-degree and
// these families grow superexponentially.
constexpr int kWordEnumCap = 8;
constexpr int kFunctionEnumCap = 7;

void check_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw std::invalid_argument(std::string(what) + ": degree exceeds the enumeration cap of " +
                                std::to_string(cap));
}
}  // namespace

std::vector<Word> enum_surjections(int n) {
  check_cap(n, kWordEnumCap, "enum_surjections");
  std::vector<Word> out;
  for (int r = 1; r <= n; ++r) {
    std::vector<int> w(static_cast<std::size_t>(n), 1);
    while (true) {
      Word cand(w, r);
      if (is_surjection(cand)) out.push_back(std::move(cand));
      int i = n - 1;
      while (i >= 0 && w[static_cast<std::size_t>(i)] == r) {
        w[static_cast<std::size_t>(i)] = 1;
        --i;
      }
      if (i < 0) break;
      ++w[static_cast<std::size_t>(i)];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> enum_kwords(int n) {
  std::vector<Word> out;
  for (auto& f : enum_surjections(n))
    if (is_kword(f)) out.push_back(f);
  return out;
}

std::vector<Word> enum_functions(int n) {
  check_cap(n, kFunctionEnumCap, "enum_functions");
  std::vector<Word> out;
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  while (true) {
    out.emplace_back(w, n);
    int i = n - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == n) {
      w[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  if (n == 0) out.clear();
  return out;
}

std::vector<Word> enum_parking(int n) {
  std::vector<Word> out;
  for (auto& f : enum_functions(n))
    if (is_parking(f)) out.push_back(f);
  return out;
}

std::vector<Word> enum_prime_parking(int n) {
  std::vector<Word> out;
  for (auto& f : enum_parking(n))
    if (is_prime_parking(f)) out.push_back(f);
  return out;
}

std::vector<Word> irr_surjections(int n) {
  std::vector<Word> out;
  for (auto& f : enum_surjections(n))
    if (word_irreducible(f)) out.push_back(f);
  return out;
}

BigInt irr_surjection_count(int n) {
  // a_n = p_n - sum_{i<n} a_i p_{n-i} with p_k the surjection counts.
  std::vector<BigInt> p(static_cast<std::size_t>(n + 1), 0), a(static_cast<std::size_t>(n + 1), 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) {
    BigInt total = 0;
    for (int r = 1; r <= k; ++r) {
      // Surjections onto r letters: r! * S(k, r); accumulate via inclusion-exclusion.
      BigInt cnt = 0;
      for (int j = 0; j <= r; ++j) {
        BigInt term = binomial(r, j);
        BigInt pw = 1;
        for (int t = 0; t < k; ++t) pw *= r - j;
        if (j % 2 == 0)
          cnt += term * pw;
        else
          cnt -= term * pw;
      }
      total += cnt;
    }
    p[static_cast<std::size_t>(k)] = total;
  }
  for (int k = 1; k <= n; ++k) {
    BigInt v = p[static_cast<std::size_t>(k)];
    for (int i = 1; i < k; ++i) v -= a[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
    a[static_cast<std::size_t>(k)] = v;
  }
  return a[static_cast<std::size_t>(n)];
}

std::string to_string(const Word& f) {
  std::string s;
  for (int i = 1; i <= f.size(); ++i) {
    if (i > 1) s += ',';
    s += std::to_string(f(i));
  }
  return s;
}

}  // namespace combalg
