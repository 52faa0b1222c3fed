#include "qwhit/boxed_partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace qwhit {

BoxedPartition::BoxedPartition(Partition gamma, int rows, int cols)
    : gamma_(std::move(gamma)), rows_(rows), cols_(cols) {
  if (rows_ < 0 || cols_ < 0)
    throw std::invalid_argument("BoxedPartition: negative box");
  if (gamma_.num_parts() > rows_ || gamma_.part(0) > cols_)
    throw std::invalid_argument("BoxedPartition: partition does not fit box");
}

BoxedPartition box_complement(const BoxedPartition& p) {
  std::vector<int> parts = p.padded_parts();
  std::reverse(parts.begin(), parts.end());
  for (int& v : parts) v = p.cols() - v;
  return BoxedPartition(Partition(std::move(parts)), p.rows(), p.cols());
}

std::vector<int> to_strict_tuple(const BoxedPartition& p) {
  std::vector<int> t = p.padded_parts();
  const int k = p.rows();
  for (int i = 0; i < k; ++i) t[static_cast<std::size_t>(i)] += k - 1 - i;
  return t;
}

BoxedPartition from_strict_tuple(const std::vector<int>& t, int rows,
                                 int cols) {
  if (static_cast<int>(t.size()) != rows)
    throw std::invalid_argument("from_strict_tuple: wrong tuple length");
  std::vector<int> parts(t);
  for (int i = 0; i < rows; ++i) {
    int& v = parts[static_cast<std::size_t>(i)];
    if (v < 0 || v > rows + cols - 1)
      throw std::invalid_argument("from_strict_tuple: entry out of range");
    if (i + 1 < rows && t[static_cast<std::size_t>(i)] <= t[static_cast<std::size_t>(i) + 1])
      throw std::invalid_argument("from_strict_tuple: not strictly decreasing");
    v -= rows - 1 - i;
  }
  return BoxedPartition(Partition(std::move(parts)), rows, cols);
}

}  // namespace qwhit
