#pragma once
// Partitions confined to a rows x cols rectangle, box complementation,
// and the strict-tuple encoding gamma -> gamma + delta.

#include <vector>

#include "qwhit/partition.hpp"

namespace qwhit {

class BoxedPartition {
 public:
  // gamma must have at most `rows` parts and gamma_1 <= cols.
  BoxedPartition(Partition gamma, int rows, int cols);

  const Partition& gamma() const { return gamma_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long size() const { return gamma_.sum(); }
  std::vector<int> padded_parts() const { return gamma_.padded(rows_); }

  bool operator==(const BoxedPartition&) const = default;

 private:
  Partition gamma_;
  int rows_ = 0;
  int cols_ = 0;
};

// Complement inside the bounding rectangle: (cols - p_k, ..., cols - p_1).
BoxedPartition box_complement(const BoxedPartition& p);

// gamma + delta with delta = (k-1, ..., 1, 0): a strictly decreasing
// k-tuple of integers in [0, k+l-1].
std::vector<int> to_strict_tuple(const BoxedPartition& p);
BoxedPartition from_strict_tuple(const std::vector<int>& t, int rows, int cols);

}  // namespace qwhit
