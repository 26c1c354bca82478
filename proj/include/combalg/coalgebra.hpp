#pragma once

#include <functional>
#include <optional>

#include "combalg/lin.hpp"
#include "combalg/perm.hpp"

namespace combalg {

template <class B>
using DeltaFn = std::function<Tensor<B>(const B&)>;

// Linear extension of a reduced coproduct.
template <class B>
Tensor<B> delta_lin(const DeltaFn<B>& delta, const Lin<B>& u) {
  Tensor<B> r;
  for (auto& [b, c] : u.terms) {
    Tensor<B> d = delta(b);
    for (auto& [t, v] : d.terms) r.add(t, c * v);
  }
  return r;
}

// The component of the iterated reduced coproduct with exactly k tensor
// factors, obtained by repeatedly splitting the first slot.
template <class B>
Tensor<B> delta_power_factors(const DeltaFn<B>& delta, const Lin<B>& u, int k) {
  Tensor<B> cur;
  for (auto& [b, c] : u.terms) cur.add(std::vector<B>{b}, c);
  for (int step = 1; step < k; ++step) {
    Tensor<B> next;
    for (auto& [tup, c] : cur.terms) {
      Tensor<B> split = delta(tup.front());
      for (auto& [pair, v] : split.terms) {
        std::vector<B> t;
        t.reserve(tup.size() + 1);
        t.insert(t.end(), pair.begin(), pair.end());
        t.insert(t.end(), tup.begin() + 1, tup.end());
        next.add(std::move(t), c * v);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

// Delta^r: r+1 tensor factors, left iteration.
template <class B>
Tensor<B> delta_iter(const DeltaFn<B>& delta, const Lin<B>& u, int r) {
  if (r < 1) throw std::invalid_argument("delta_iter: r must be >= 1");
  return delta_power_factors(delta, u, r + 1);
}

// Projection of the iterate onto prescribed slot degrees.
template <class B>
Tensor<B> delta_graded(const DeltaFn<B>& delta, const Lin<B>& u, const std::vector<int>& parts) {
  Tensor<B> full = delta_power_factors(delta, u, static_cast<int>(parts.size()));
  Tensor<B> r;
  for (auto& [tup, c] : full.terms) {
    bool ok = true;
    for (std::size_t i = 0; i < tup.size(); ++i)
      if (degree_of(tup[i]) != parts[i]) {
        ok = false;
        break;
      }
    if (ok) r.add(tup, c);
  }
  return r;
}

// Counital tensor square: factors are optional basis elements (nullopt is
// the adjoined unit).  Used for the Hopf compatibility check.
template <class B>
using UnitalTensor = Lin<std::vector<std::optional<B>>>;

template <class B>
int degree_of(const std::vector<std::optional<B>>& t) {
  int d = 0;
  for (auto& b : t)
    if (b) d += degree_of(*b);
  return d;
}

// Delta_+(x) = 1 (x) x + x (x) 1 + Delta(x), extended linearly.
template <class B>
UnitalTensor<B> delta_plus(const DeltaFn<B>& delta, const Lin<B>& u) {
  UnitalTensor<B> r;
  for (auto& [b, c] : u.terms) {
    r.add({std::nullopt, std::optional<B>(b)}, c);
    r.add({std::optional<B>(b), std::nullopt}, c);
    Tensor<B> d = delta(b);
    for (auto& [t, v] : d.terms) r.add({std::optional<B>(t[0]), std::optional<B>(t[1])}, c * v);
  }
  return r;
}

// Delta_+ on an element of the unital closure: scalar * 1 (x) 1 plus the
// counital closure of the positive part.
template <class B>
UnitalTensor<B> delta_plus_unital(const DeltaFn<B>& delta, const Rational& scalar,
                                  const Lin<B>& u) {
  UnitalTensor<B> r = delta_plus(delta, u);
  if (!scalar.is_zero()) r.add({std::nullopt, std::nullopt}, scalar);
  return r;
}

// Coassociativity of a reduced coproduct on one basis element.
template <class B>
bool coassociative_at(const DeltaFn<B>& delta, const B& b) {
  Tensor<B> left, right;
  Tensor<B> d = delta(b);
  for (auto& [t, c] : d.terms) {
    Tensor<B> dl = delta(t[0]);
    for (auto& [s, v] : dl.terms) left.add({s[0], s[1], t[1]}, c * v);
    Tensor<B> dr = delta(t[1]);
    for (auto& [s, v] : dr.terms) right.add({t[0], s[0], s[1]}, c * v);
  }
  return left == right;
}

}  // namespace combalg
