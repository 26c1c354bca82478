#include "combalg/io.hpp"

#include <fstream>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace combalg {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(trim(s));
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw std::invalid_argument("parse: empty entry in '" + s + "'");
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw std::invalid_argument("parse: empty word");
  return out;
}

Perm parse_perm(const std::string& s) { return Perm(parse_int_list(s)); }

CWord parse_cword(const std::string& s, const ThetaTable& t) {
  auto fpos = s.find("f=");
  auto semi = s.find(';');
  auto cpos = s.find("colors=");
  if (fpos == std::string::npos || semi == std::string::npos || cpos == std::string::npos)
    throw std::invalid_argument("parse_cword: expected 'f=...; colors=...'");
  Word base = Word::packed(parse_int_list(s.substr(fpos + 2, semi - fpos - 2)));
  std::vector<std::string> colors;
  std::stringstream ss(trim(s.substr(cpos + 7)));
  std::string item;
  while (std::getline(ss, item, ',')) colors.push_back(trim(item));
  return CWord(base, std::move(colors), t);
}

std::vector<std::pair<Rational, std::string>> parse_lin_terms(const std::string& s) {
  std::vector<std::pair<Rational, std::string>> out;
  std::stringstream ss(s);
  std::string term;
  auto is_coeff = [](const std::string& c) {
    if (c.empty()) return false;
    for (char ch : c)
      if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/')) return false;
    return true;
  };
  while (std::getline(ss, term, '+')) {
    term = trim(term);
    if (term.empty()) continue;
    auto starpos = term.find('*');
    // '*' also opens an unlabeled tree vertex, so only a rational prefix
    // counts as a coefficient
    std::string prefix = starpos == std::string::npos ? "" : trim(term.substr(0, starpos));
    if (starpos == std::string::npos || !is_coeff(prefix)) {
      out.emplace_back(Rational(1), term);
    } else {
      out.emplace_back(Rational::parse(prefix), trim(term.substr(starpos + 1)));
    }
  }
  if (out.empty()) throw std::invalid_argument("parse: empty linear combination");
  return out;
}

Lin<Perm> parse_perm_lin(const std::string& s) {
  Lin<Perm> u;
  for (auto& [c, w] : parse_lin_terms(s)) u.add(parse_perm(w), c);
  return u;
}

Lin<Word> parse_word_lin(const std::string& s, bool parking) {
  Lin<Word> u;
  for (auto& [c, w] : parse_lin_terms(s)) {
    std::vector<int> letters = parse_int_list(w);
    Word word = parking ? Word(letters, static_cast<int>(letters.size())) : Word::packed(letters);
    u.add(word, c);
  }
  return u;
}

Lin<Tree> parse_tree_lin(const std::string& s) {
  Lin<Tree> u;
  for (auto& [c, w] : parse_lin_terms(s)) u.add(parse_tree(w), c);
  return u;
}

Lin<TWord> parse_tword_lin(const std::string& s) {
  Lin<TWord> u;
  for (auto& [c, w] : parse_lin_terms(s)) u.add(parse_tword(w), c);
  return u;
}

namespace {

std::string int_array(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

}  // namespace

std::string json_of(const Perm& p) { return int_array(p.img); }
std::string json_of(const Word& f) { return int_array(f.w); }

std::string json_of(const CWord& f) {
  std::string out = "{\"f\":" + int_array(f.base.w) + ",\"colors\":[";
  for (std::size_t i = 0; i < f.colors.size(); ++i) {
    if (i) out += ',';
    out += "\"" + f.colors[i] + "\"";
  }
  return out + "]}";
}

std::string json_of(const Tree& t) {
  if (t.is_leaf()) return "{\"leaf\":true}";
  std::string out = "{\"color\":\"" + t.color + "\",\"children\":[";
  for (std::size_t i = 0; i < t.kids.size(); ++i) {
    if (i) out += ',';
    out += json_of(t.kids[i]);
  }
  return out + "]}";
}

namespace {

std::string json_of_ltree(const LTree& t) {
  if (t.is_leaf()) return "{\"leaf\":\"" + t.leaf_color + "\"}";
  std::string out = "{\"children\":[";
  for (std::size_t i = 0; i < t.kids.size(); ++i) {
    if (i) out += ',';
    out += json_of_ltree(t.kids[i]);
  }
  return out + "]}";
}

}  // namespace

std::string json_of(const TWord& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += json_of_ltree(w[i]);
  }
  return out + "]";
}

ThetaTable theta_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ThetaTable t;
  for (auto& c : j.at("colors"))
    t.add_color(c.at("name").get<std::string>(), c.at("degree").get<int>());
  if (j.contains("theta"))
    for (auto& row : j.at("theta")) {
      std::string on = row.at("on").get<std::string>();
      for (auto& e : row.at("terms"))
        t.add_split(on, e.at("l").get<std::string>(), e.at("r").get<std::string>(),
                    Rational::parse(e.at("c").get<std::string>()));
    }
  if (auto bad = t.coassoc_failure())
    throw std::invalid_argument("theta table is not coassociative at color " + *bad);
  return t;
}

ThetaTable theta_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open theta table file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return theta_from_json(ss.str());
}

}  // namespace combalg
