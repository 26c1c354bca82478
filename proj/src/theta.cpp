#include "combalg/theta.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace combalg {

ThetaTable ThetaTable::default_xi(int cap) {
  ThetaTable t;
  for (int n = 1; n <= cap; ++n) t.add_color("xi" + std::to_string(n), n);
  for (int n = 2; n <= cap; ++n)
    for (int i = 1; i < n; ++i)
      t.add_split("xi" + std::to_string(n), "xi" + std::to_string(i), "xi" + std::to_string(n - i),
                  Rational(1));
  return t;
}

void ThetaTable::add_color(const std::string& name, int degree) {
  if (degree < 1) throw std::invalid_argument("ThetaTable: colors must have positive degree");
  if (has_color(name)) throw std::invalid_argument("ThetaTable: duplicate color " + name);
  colors_.push_back({name, degree});
  theta_.emplace_back();
  cap_ = std::max(cap_, degree);
}

void ThetaTable::add_split(const std::string& on, const std::string& left,
                           const std::string& right, const Rational& c) {
  int i = index(on);
  if (color(left).degree + color(right).degree != colors_[static_cast<std::size_t>(i)].degree)
    throw std::invalid_argument("ThetaTable: split degrees do not add up on " + on);
  theta_[static_cast<std::size_t>(i)].push_back({left, right, c});
}

int ThetaTable::index(const std::string& name) const {
  for (std::size_t i = 0; i < colors_.size(); ++i)
    if (colors_[i].name == name) return static_cast<int>(i);
  throw std::invalid_argument("ThetaTable: unknown color " + name);
}

const Color& ThetaTable::color(const std::string& name) const {
  return colors_[static_cast<std::size_t>(index(name))];
}

bool ThetaTable::has_color(const std::string& name) const {
  return std::any_of(colors_.begin(), colors_.end(),
                     [&](const Color& c) { return c.name == name; });
}

bool ThetaTable::single_per_degree() const {
  std::map<int, int> count;
  for (auto& c : colors_) ++count[c.degree];
  return std::all_of(count.begin(), count.end(), [](auto& kv) { return kv.second <= 1; });
}

const Color& ThetaTable::color_of_degree(int degree) const {
  const Color* found = nullptr;
  for (auto& c : colors_)
    if (c.degree == degree) {
      if (found) throw std::invalid_argument("ThetaTable: degree carries several colors");
      found = &c;
    }
  if (!found)
    throw std::invalid_argument("ThetaTable: no color of degree " + std::to_string(degree));
  return *found;
}

const std::vector<ThetaEntry>& ThetaTable::splits(const std::string& name) const {
  return theta_[static_cast<std::size_t>(index(name))];
}

std::vector<ThetaEntry> ThetaTable::splits_left_degree(const std::string& name,
                                                       int left_degree) const {
  std::vector<ThetaEntry> out;
  for (auto& e : splits(name))
    if (color(e.left).degree == left_degree) out.push_back(e);
  return out;
}

std::optional<std::string> ThetaTable::coassoc_failure() const {
  using Triple = std::vector<std::string>;
  for (auto& c : colors_) {
    std::map<Triple, Rational> lhs, rhs;
    auto addto = [](std::map<Triple, Rational>& m, Triple k, const Rational& v) {
      auto it = m.find(k);
      if (it == m.end())
        m.emplace(std::move(k), v);
      else {
        it->second += v;
        if (it->second.is_zero()) m.erase(it);
      }
    };
    for (auto& e : splits(c.name)) {
      for (auto& e2 : splits(e.left)) addto(lhs, {e2.left, e2.right, e.right}, e.coeff * e2.coeff);
      for (auto& e2 : splits(e.right)) addto(rhs, {e.left, e2.left, e2.right}, e.coeff * e2.coeff);
    }
    if (lhs != rhs) return c.name;
  }
  return std::nullopt;
}

CWord::CWord(Word f, std::vector<std::string> cs, const ThetaTable& t)
    : base(std::move(f)), colors(std::move(cs)) {
  if (!is_surjection(base)) throw std::invalid_argument("CWord: base word must be surjective");
  if (static_cast<int>(colors.size()) != base.cod)
    throw std::invalid_argument("CWord: one color per fiber required");
  Composition fib = fibers(base);
  for (int i = 0; i < base.cod; ++i)
    if (t.color_degree(colors[static_cast<std::size_t>(i)]) != fib.parts[static_cast<std::size_t>(i)])
      throw std::invalid_argument("CWord: color degree must match fiber size");
}

CWord color_word(const Word& f, const ThetaTable& t) {
  Composition fib = fibers(f);
  std::vector<std::string> cs;
  cs.reserve(fib.parts.size());
  for (int p : fib.parts) cs.push_back(t.color_of_degree(p).name);
  return CWord(f, std::move(cs), t);
}

std::string to_string(const CWord& f) {
  std::string s = "f=" + to_string(f.base) + "; colors=";
  for (std::size_t i = 0; i < f.colors.size(); ++i) {
    if (i) s += ',';
    s += f.colors[i];
  }
  return s;
}

}  // namespace combalg
