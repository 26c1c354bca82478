#pragma once

#include <functional>
#include <map>
#include <vector>

#include "combalg/rational.hpp"

namespace combalg {

// Sparse formal linear combination over a canonically ordered basis type B.
// No zero coefficients are ever stored; term order is the order of B,
// which every basis defines as (degree, canonical encoding).
template <class B>
struct Lin {
  std::map<B, Rational> terms;

  Lin() = default;
  Lin(const B& b, Rational c = Rational(1)) {
    if (!c.is_zero()) terms.emplace(b, std::move(c));
  }

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }

  Rational coeff(const B& b) const {
    auto it = terms.find(b);
    return it == terms.end() ? Rational() : it->second;
  }

  void add(const B& b, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms.find(b);
    if (it == terms.end()) {
      terms.emplace(b, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  Lin& operator+=(const Lin& o) {
    for (auto& [b, c] : o.terms) add(b, c);
    return *this;
  }
  Lin& operator-=(const Lin& o) {
    for (auto& [b, c] : o.terms) add(b, -c);
    return *this;
  }
  Lin& operator*=(const Rational& c) {
    if (c.is_zero()) {
      terms.clear();
      return *this;
    }
    for (auto& [b, v] : terms) v *= c;
    return *this;
  }

  friend Lin operator+(Lin a, const Lin& b) { return a += b; }
  friend Lin operator-(Lin a, const Lin& b) { return a -= b; }
  friend Lin operator*(const Rational& c, Lin a) { return a *= c; }

  friend bool operator==(const Lin& a, const Lin& b) { return a.terms == b.terms; }
  friend bool operator!=(const Lin& a, const Lin& b) { return !(a == b); }
};

// a*u + b*v, pointwise, zero terms dropped.
template <class B>
Lin<B> lin_combine(const Rational& a, const Lin<B>& u, const Rational& b, const Lin<B>& v) {
  Lin<B> r;
  for (auto& [k, c] : u.terms) r.add(k, a * c);
  for (auto& [k, c] : v.terms) r.add(k, b * c);
  return r;
}

// Extends a basis-level map linearly.
template <class B, class C, class F>
Lin<C> linear_extend(F&& op, const Lin<B>& u) {
  Lin<C> r;
  for (auto& [b, c] : u.terms) {
    Lin<C> img = op(b);
    for (auto& [k, v] : img.terms) r.add(k, c * v);
  }
  return r;
}

// Extends a basis-level binary operation bilinearly.
template <class B, class C, class F>
Lin<C> bilinear_extend(F&& op, const Lin<B>& u, const Lin<B>& v) {
  Lin<C> r;
  for (auto& [b1, c1] : u.terms)
    for (auto& [b2, c2] : v.terms) {
      Lin<C> img = op(b1, b2);
      for (auto& [k, v2] : img.terms) r.add(k, c1 * c2 * v2);
    }
  return r;
}

// Tensor elements are linear combinations over tuples of basis elements.
template <class B>
using Tensor = Lin<std::vector<B>>;

template <class B>
int degree_of(const std::vector<B>& t) {
  int d = 0;
  for (auto& b : t) d += degree_of(b);
  return d;
}

// Restriction of u to its degree-n terms.
template <class B>
Lin<B> graded_component(const Lin<B>& u, int n) {
  Lin<B> r;
  for (auto& [b, c] : u.terms)
    if (degree_of(b) == n) r.add(b, c);
  return r;
}

template <class B>
Tensor<B> tensor_pair(const Lin<B>& u, const Lin<B>& v) {
  Tensor<B> r;
  for (auto& [b1, c1] : u.terms)
    for (auto& [b2, c2] : v.terms) r.add(std::vector<B>{b1, b2}, c1 * c2);
  return r;
}

}  // namespace combalg
