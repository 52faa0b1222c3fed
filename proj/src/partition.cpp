#include "qwhit/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qwhit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition part < 0");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be non-increasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

long long Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::vector<int> Partition::padded(int len) const {
  if (len < num_parts())
    throw std::invalid_argument("padding length shorter than partition");
  std::vector<int> out(parts_);
  out.resize(static_cast<std::size_t>(len), 0);
  return out;
}

Partition conjugate(const Partition& lam) {
  std::vector<int> cols(static_cast<std::size_t>(lam.part(0)), 0);
  for (int p : lam.parts())
    for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

long long eta(const Partition& lam) {
  long long total = 0;
  for (int c : conjugate(lam).parts()) total += 1LL * c * (c - 1) / 2;
  return total;
}

bool interlaces(const Partition& mu, const Partition& lam, int n) {
  if (n < 1) throw std::invalid_argument("interlaces: n must be >= 1");
  if (lam.num_parts() > n)
    throw std::invalid_argument("interlaces: lambda has more than n parts");
  if (mu.num_parts() > n - 1)
    throw std::invalid_argument("interlaces: mu has more than n-1 parts");
  for (int i = 0; i + 1 < n; ++i)
    if (!(lam.part(i) >= mu.part(i) && mu.part(i) >= lam.part(i + 1)))
      return false;
  return true;
}

namespace {

void box_rec(int pos, int rows, int bound, std::vector<int>& cur,
             std::vector<Partition>& out) {
  if (pos == rows) {
    out.emplace_back(cur);
    return;
  }
  for (int v = 0; v <= bound; ++v) {
    cur.push_back(v);
    box_rec(pos + 1, rows, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("partitions_in_box: negative box");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Ascending choice at each position = lexicographic order on padded parts.
  box_rec(0, rows, cols, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size, int max_parts) {
  if (max_size < 0 || max_parts < 0)
    throw std::invalid_argument("partitions_up_to: negative bound");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int bound) -> void {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int v = 1; v <= std::min(bound, remaining); ++v) {
      cur.push_back(v);
      self(self, remaining - v, v);
      cur.pop_back();
    }
  };
  rec(rec, max_size, max_size);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return a.parts() < b.parts();
  });
  return out;
}

std::string to_string(const Partition& lam) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < lam.num_parts(); ++i) {
    if (i) os << ',';
    os << lam.parts()[static_cast<std::size_t>(i)];
  }
  os << ')';
  return os.str();
}

}  // namespace qwhit
