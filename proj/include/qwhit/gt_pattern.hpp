#pragma once
// Gelfand-Tsetlin patterns with bounding row lambda, their NE/SE
// differences, q-weight and area, and the SSYT correspondence.

#include <vector>

#include "qwhit/partition.hpp"
#include "qwhit/qpoly.hpp"

namespace qwhit {

class Filling;

// rows[j-1] holds (T^j_1, .., T^j_j); row n is lambda padded to length n.
class GTPattern {
 public:
  GTPattern(int n, std::vector<std::vector<int>> rows);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  // T^j_i, 1-based, with the convention T^j_{j+1} = 0.
  int entry(int j, int i) const;

  Partition shape() const;             // bounding row
  Partition row_shape(int j) const;    // row j as a partition

  bool operator==(const GTPattern&) const = default;
  // Lexicographic on rows, top row first.
  bool operator<(const GTPattern& o) const { return rows_ < o.rows_; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> rows_;
};

// NE_ij = T^{j+1}_i - T^j_i, SE_ij = T^j_i - T^{j+1}_{i+1},
// defined for 1 <= i <= j+1 <= n.
int ne_diff(const GTPattern& T, int i, int j);
int se_diff(const GTPattern& T, int i, int j);

// Product of qbinom(NE_ij, SE_ij) over 1 <= i <= j < n.
QPoly wtq(const GTPattern& T);
// Sum of NE_ij * SE_ij over the same range.
long long area(const GTPattern& T);
// Exponent of x_j is |row j| - |row j-1|.
std::vector<int> xweight_gt(const GTPattern& T);

// All patterns with bounding row lambda (at most n nonzero parts),
// in lexicographic row-by-row order.
std::vector<GTPattern> enumerate_gt(const Partition& lambda, int n);

// Semistandard tableau <-> pattern; rows[j] of the pattern is the shape
// occupied by tableau entries <= j.
GTPattern gt_from_ssyt(const Filling& tab);
Filling ssyt_from_gt(const GTPattern& T);

}  // namespace qwhit
