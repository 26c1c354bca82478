#pragma once

#include <map>
#include <vector>

#include "combalg/rational.hpp"

namespace combalg {

// A sparse vector over the rationals, indexed by dense row ids.
using SparseVec = std::map<int, Rational>;

// Incremental exact row-echelon elimination.  Feed columns one at a time;
// rank and the set of pivot (independent) columns fall out.  All arithmetic
// exact; rows are rescaled to integer entries with content 1 to keep the
// numbers small.
class Eliminator {
 public:
  // Returns true when the column enlarged the span (i.e. is independent).
  bool add_column(SparseVec col);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  // pivot index -> normalized row
  std::map<int, SparseVec> rows_;
};

int rank_of(const std::vector<SparseVec>& cols);
// Indices of a column basis of the span.
std::vector<int> independent_columns(const std::vector<SparseVec>& cols);

}  // namespace combalg
