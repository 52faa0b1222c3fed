#include "qwhit/gt_pattern.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qwhit {

GTPattern::GTPattern(int n, std::vector<std::vector<int>> rows)
    : n_(n), rows_(std::move(rows)) {
  if (n_ < 1) throw std::invalid_argument("GTPattern: n must be >= 1");
  if (static_cast<int>(rows_.size()) != n_)
    throw std::invalid_argument("GTPattern: expected n rows");
  for (int j = 1; j <= n_; ++j)
    if (static_cast<int>(rows_[static_cast<std::size_t>(j) - 1].size()) != j)
      throw std::invalid_argument("GTPattern: row j must have j entries");
  for (const auto& row : rows_)
    for (int v : row)
      if (v < 0) throw std::invalid_argument("GTPattern: negative entry");
  for (int j = 1; j < n_; ++j)
    for (int i = 1; i <= j; ++i)
      if (entry(j + 1, i) < entry(j, i) || entry(j, i) < entry(j + 1, i + 1))
        throw std::invalid_argument("GTPattern: interleaving violated");
}

int GTPattern::entry(int j, int i) const {
  if (j < 1 || j > n_ || i < 1 || i > j + 1)
    throw std::invalid_argument("GTPattern: entry index out of range");
  if (i == j + 1) return 0;
  return rows_[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(i) - 1];
}

Partition GTPattern::shape() const { return row_shape(n_); }

Partition GTPattern::row_shape(int j) const {
  if (j < 1 || j > n_) throw std::invalid_argument("GTPattern: bad row index");
  return Partition(rows_[static_cast<std::size_t>(j) - 1]);
}

int ne_diff(const GTPattern& T, int i, int j) {
  if (i < 1 || j < 1 || i > j + 1 || j + 1 > T.n())
    throw std::invalid_argument("ne_diff: index out of range");
  return T.entry(j + 1, i) - T.entry(j, i);
}

int se_diff(const GTPattern& T, int i, int j) {
  if (i < 1 || j < 1 || i > j + 1 || j + 1 > T.n())
    throw std::invalid_argument("se_diff: index out of range");
  return T.entry(j, i) - T.entry(j + 1, i + 1);
}

QPoly wtq(const GTPattern& T) {
  QPoly w(1);
  for (int j = 1; j < T.n(); ++j)
    for (int i = 1; i <= j; ++i) w *= qbinom(ne_diff(T, i, j), se_diff(T, i, j));
  return w;
}

long long area(const GTPattern& T) {
  long long a = 0;
  for (int j = 1; j < T.n(); ++j)
    for (int i = 1; i <= j; ++i)
      a += 1LL * ne_diff(T, i, j) * se_diff(T, i, j);
  return a;
}

std::vector<int> xweight_gt(const GTPattern& T) {
  std::vector<int> w(static_cast<std::size_t>(T.n()), 0);
  long long prev = 0;
  for (int j = 1; j <= T.n(); ++j) {
    const auto& row = T.rows()[static_cast<std::size_t>(j) - 1];
    long long s = std::accumulate(row.begin(), row.end(), 0LL);
    w[static_cast<std::size_t>(j) - 1] = static_cast<int>(s - prev);
    prev = s;
  }
  return w;
}

std::vector<GTPattern> enumerate_gt(const Partition& lambda, int n) {
  if (n < 1) throw std::invalid_argument("enumerate_gt: n must be >= 1");
  if (lambda.num_parts() > n)
    throw std::invalid_argument("enumerate_gt: lambda has more than n parts");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  rows[static_cast<std::size_t>(n) - 1] = lambda.padded(n);
  std::vector<GTPattern> out;
  // Choose row j interlacing row j+1; every position has the independent
  // range [T^{j+1}_{i+1}, T^{j+1}_i].
  auto rec = [&](auto&& self, int j) -> void {
    if (j == 0) {
      out.emplace_back(n, rows);
      return;
    }
    const auto& below = rows[static_cast<std::size_t>(j)];
    auto& row = rows[static_cast<std::size_t>(j) - 1];
    row.assign(static_cast<std::size_t>(j), 0);
    auto fill = [&](auto&& go, int i) -> void {
      if (i == j) {
        self(self, j - 1);
        return;
      }
      int hi = below[static_cast<std::size_t>(i)];
      int lo = below[static_cast<std::size_t>(i) + 1];
      for (int v = lo; v <= hi; ++v) {
        row[static_cast<std::size_t>(i)] = v;
        go(go, i + 1);
      }
    };
    fill(fill, 0);
  };
  rec(rec, n - 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qwhit
