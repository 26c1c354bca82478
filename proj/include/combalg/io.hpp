#pragma once

#include <string>

#include "combalg/lin.hpp"
#include "combalg/perm.hpp"
#include "combalg/theta.hpp"
#include "combalg/trees.hpp"
#include "combalg/words.hpp"

namespace combalg {

// ---- element text forms -----------------------------------------------------
// Words and permutations print as comma-separated letters; linear
// combinations as "c1*W1 + c2*W2" with exact rational coefficients, a bare
// W standing for 1*W.

std::vector<int> parse_int_list(const std::string& s);
Perm parse_perm(const std::string& s);
// "f=2,1,1,2,3,2; colors=xi2,xi3,xi1"
CWord parse_cword(const std::string& s, const ThetaTable& t);

template <class B>
std::string lin_to_string(const Lin<B>& u) {
  if (u.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [b, c] : u.terms) {
    if (!first) out += " + ";
    first = false;
    if (c.is_one())
      out += to_string(b);
    else
      out += c.str() + "*" + to_string(b);
  }
  return out;
}

template <class B>
std::string tensor_to_string(const Tensor<B>& t) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [tup, c] : t.terms) {
    if (!first) out += " + ";
    first = false;
    out += c.str() + " * [";
    for (std::size_t i = 0; i < tup.size(); ++i) {
      if (i) out += " | ";
      out += to_string(tup[i]);
    }
    out += "]";
  }
  return out;
}

// Splits "c1*W1 + c2*W2" into (coeff, payload) pairs.
std::vector<std::pair<Rational, std::string>> parse_lin_terms(const std::string& s);

Lin<Perm> parse_perm_lin(const std::string& s);
// parking = true gives codomain n (the parking-function convention).
Lin<Word> parse_word_lin(const std::string& s, bool parking = false);
Lin<Tree> parse_tree_lin(const std::string& s);
Lin<TWord> parse_tword_lin(const std::string& s);

// ---- JSON forms --------------------------------------------------------------

std::string json_of(const Perm& p);
std::string json_of(const Word& f);
std::string json_of(const CWord& f);
std::string json_of(const Tree& t);
std::string json_of(const TWord& w);

template <class B>
std::string lin_to_json(const Lin<B>& u) {
  std::string out = "{\"terms\":[";
  bool first = true;
  for (auto& [b, c] : u.terms) {
    if (!first) out += ',';
    first = false;
    out += "{\"coeff\":\"" + c.str() + "\",\"word\":" + json_of(b) + "}";
  }
  return out + "]}";
}

template <class B>
std::string tensor_to_json(const Tensor<B>& t) {
  std::string out = "{\"terms\":[";
  bool first = true;
  for (auto& [tup, c] : t.terms) {
    if (!first) out += ',';
    first = false;
    out += "{\"coeff\":\"" + c.str() + "\",\"factors\":[";
    for (std::size_t i = 0; i < tup.size(); ++i) {
      if (i) out += ',';
      out += json_of(tup[i]);
    }
    out += "]}";
  }
  return out + "]}";
}

// Theta tables from the JSON schema
// {"colors":[{"name":"xi2","degree":2}],"theta":[{"on":"xi2","terms":[...]}]}.
ThetaTable theta_from_json(const std::string& text);
ThetaTable theta_from_file(const std::string& path);

}  // namespace combalg
