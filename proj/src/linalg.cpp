#include "combalg/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace combalg {

namespace {

// Rescale to integer entries with content 1 and positive leading entry.
void normalize_row(SparseVec& row) {
  if (row.empty()) return;
  BigInt lcm = 1;
  for (auto& [i, c] : row) lcm = boost::multiprecision::lcm(lcm, c.den());
  BigInt content = 0;
  for (auto& [i, c] : row) {
    BigInt v = c.num() * (lcm / c.den());
    content = boost::multiprecision::gcd(content, v < 0 ? BigInt(-v) : v);
  }
  const Rational scale(lcm, content);
  for (auto& [i, c] : row) c *= scale;
  if (row.begin()->second.sign() < 0)
    for (auto& [i, c] : row) c = -c;
}

}  // namespace

bool Eliminator::add_column(SparseVec col) {
  while (!col.empty()) {
    auto lead = col.begin();
    auto pivot = rows_.find(lead->first);
    if (pivot == rows_.end()) {
      normalize_row(col);
      rows_.emplace(col.begin()->first, std::move(col));
      return true;
    }
    // col -= (lead / pivot_lead) * pivot_row
    Rational factor = lead->second / pivot->second.begin()->second;
    for (auto& [i, c] : pivot->second) {
      auto it = col.find(i);
      if (it == col.end()) {
        col.emplace(i, -(factor * c));
      } else {
        it->second -= factor * c;
        if (it->second.is_zero()) col.erase(it);
      }
    }
  }
  return false;
}

int rank_of(const std::vector<SparseVec>& cols) {
  Eliminator e;
  for (auto& c : cols) e.add_column(c);
  return e.rank();
}

std::vector<int> independent_columns(const std::vector<SparseVec>& cols) {
  Eliminator e;
  std::vector<int> out;
  for (std::size_t k = 0; k < cols.size(); ++k)
    if (e.add_column(cols[k])) out.push_back(static_cast<int>(k));
  return out;
}

}  // namespace combalg
