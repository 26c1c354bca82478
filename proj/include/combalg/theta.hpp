#pragma once

#include <optional>
#include <string>
#include <vector>

#include "combalg/lin.hpp"
#include "combalg/words.hpp"

namespace combalg {

// A color from a positively graded family.
struct Color {
  std::string name;
  int degree = 0;

  friend bool operator==(const Color& a, const Color& b) {
    return a.name == b.name && a.degree == b.degree;
  }
  friend bool operator<(const Color& a, const Color& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.name < b.name;
  }
};

struct ThetaEntry {
  std::string left;
  std::string right;
  Rational coeff;
};

// A graded coassociative coproduct on a finite graded color family.  Drives
// the colored coproducts and the boundary operator.
class ThetaTable {
 public:
  ThetaTable() = default;

  // Family {xi_1,...,xi_cap} with theta(xi_n) = sum_i xi_i (x) xi_{n-i}.
  static ThetaTable default_xi(int cap = 8);

  void add_color(const std::string& name, int degree);
  void add_split(const std::string& on, const std::string& left, const std::string& right,
                 const Rational& c);

  int degree_cap() const { return cap_; }
  const std::vector<Color>& colors() const { return colors_; }
  const Color& color(const std::string& name) const;
  bool has_color(const std::string& name) const;
  int color_degree(const std::string& name) const { return color(name).degree; }

  // True when each degree carries at most one color; plain surjection words
  // then determine their colors.
  bool single_per_degree() const;
  // The unique color of a degree (single-per-degree families only).
  const Color& color_of_degree(int degree) const;

  const std::vector<ThetaEntry>& splits(const std::string& name) const;
  // Splits of a color with the given left degree.
  std::vector<ThetaEntry> splits_left_degree(const std::string& name, int left_degree) const;

  // Coassociativity ((theta x id)theta = (id x theta)theta) per color, all
  // degrees up to the cap.  On failure returns the offending color.
  std::optional<std::string> coassoc_failure() const;
  bool coassociative() const { return !coassoc_failure().has_value(); }

 private:
  std::vector<Color> colors_;
  std::vector<std::vector<ThetaEntry>> theta_;
  int cap_ = 0;

  int index(const std::string& name) const;
};

// A surjection word with one color per fiber; |x_i| = |f^-1(i)|.
struct CWord {
  Word base;
  std::vector<std::string> colors;

  CWord() = default;
  CWord(Word f, std::vector<std::string> cs, const ThetaTable& t);

  friend bool operator==(const CWord& a, const CWord& b) {
    return a.base == b.base && a.colors == b.colors;
  }
  friend bool operator<(const CWord& a, const CWord& b) {
    if (!(a.base == b.base)) return a.base < b.base;
    return a.colors < b.colors;
  }
};

inline int degree_of(const CWord& f) { return f.base.size(); }

// Attaches the forced colors of a single-per-degree family.
CWord color_word(const Word& f, const ThetaTable& t);

std::string to_string(const CWord& f);

}  // namespace combalg
