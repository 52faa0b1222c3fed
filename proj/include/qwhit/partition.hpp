#pragma once
// Integer partitions in canonical form (trailing zeros stripped).

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwhit {

class Partition {
 public:
  Partition() = default;
  // Accepts any non-increasing sequence of non-negative integers;
  // trailing zeros are stripped.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  long long sum() const;

  // 0-based access, reads 0 beyond the last nonzero part.
  int part(int i) const {
    return (i >= 0 && i < num_parts()) ? parts_[i] : 0;
  }
  // Parts padded with zeros to the given length (>= num_parts()).
  std::vector<int> padded(int len) const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lam);

// eta(lam) = sum_j C(lam'_j, 2).
long long eta(const Partition& lam);

// mu interlaces lam: lam_i >= mu_i >= lam_{i+1} for 1 <= i < n,
// with missing parts read as 0. Requires lam with at most n parts and
// mu with at most n-1.
bool interlaces(const Partition& mu, const Partition& lam, int n);

// All partitions gamma with at most `rows` parts and gamma_1 <= cols,
// ordered lexicographically by padded parts.
std::vector<Partition> partitions_in_box(int rows, int cols);

// All partitions with |lam| <= max_size and at most max_parts parts,
// ordered by size then lexicographically.
std::vector<Partition> partitions_up_to(int max_size, int max_parts);

std::string to_string(const Partition& lam);

}  // namespace qwhit
