#include "qwhit/filling.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qwhit {

namespace {
constexpr int kInfinity = std::numeric_limits<int>::max();
}

Filling::Filling(int n, std::vector<std::vector<int>> rows)
    : n_(n), rows_(std::move(rows)) {
  if (n_ < 0) throw std::invalid_argument("Filling: negative alphabet size");
  std::vector<int> lens;
  lens.reserve(rows_.size());
  for (const auto& row : rows_) {
    if (row.empty()) throw std::invalid_argument("Filling: empty row");
    lens.push_back(static_cast<int>(row.size()));
    for (int v : row)
      if (v < 1 || v > n_)
        throw std::invalid_argument("Filling: entry outside [1, n]");
  }
  shape_ = Partition(std::move(lens));  // validates non-increasing lengths
}

bool Filling::in_shape(int row, int col) const {
  return row >= 1 && col >= 1 && row <= shape_.num_parts() &&
         col <= shape_.part(row - 1);
}

int Filling::entry(int row, int col) const {
  if (!in_shape(row, col))
    throw std::invalid_argument("Filling: cell outside shape");
  return rows_[static_cast<std::size_t>(row) - 1]
              [static_cast<std::size_t>(col) - 1];
}

int Filling::entry_below_or_infinity(int row, int col) const {
  if (!in_shape(row, col))
    throw std::invalid_argument("Filling: cell outside shape");
  return in_shape(row + 1, col) ? entry(row + 1, col) : kInfinity;
}

int Filling::column_height(int col) const {
  int h = 0;
  while (in_shape(h + 1, col)) ++h;
  return h;
}

bool is_csf(const Filling& F) {
  for (int i = 1; i + 1 <= F.shape().num_parts(); ++i)
    for (int c = 1; c <= F.shape().part(i); ++c)
      if (F.entry(i, c) >= F.entry(i + 1, c)) return false;
  return true;
}

bool is_wdf(const Filling& F) {
  for (int i = 1; i + 1 <= F.shape().num_parts(); ++i)
    for (int c = 1; c <= F.shape().part(i); ++c)
      if (F.entry(i, c) < F.entry(i + 1, c)) return false;
  return true;
}

long long maj(const Filling& F) {
  long long total = 0;
  for (int i = 1; i + 1 <= F.shape().num_parts(); ++i)
    for (int c = 1; c <= F.shape().part(i); ++c)
      if (F.entry(i, c) < F.entry(i + 1, c))
        total += F.column_height(c) - i;  // leg of the descent cell
  return total;
}

namespace {

void require_csf(const Filling& F, const char* who) {
  if (!is_csf(F))
    throw std::invalid_argument(std::string(who) + ": filling is not a CSF");
}

// Shared triple scan. zdir = +1 scans z to the right of x (quinv),
// zdir = -1 scans z to the left (refinv).
template <typename Visit>
void scan_triples(const Filling& F, int zdir, Visit visit) {
  const Partition& sh = F.shape();
  for (int i = 1; i <= sh.num_parts(); ++i) {
    int len = sh.part(i - 1);
    for (int xc = 1; xc <= len; ++xc) {
      int fx = F.entry(i, xc);
      int fy = F.entry_below_or_infinity(i, xc);
      if (fx + 1 >= fy) continue;  // no entry value fits strictly between
      int zc0 = zdir > 0 ? xc + 1 : 1;
      int zc1 = zdir > 0 ? len : xc - 1;
      for (int zc = zc0; zc <= zc1; ++zc) {
        int fz = F.entry(i, zc);
        if (fx < fz && fz < fy) visit(i, xc, zc);
      }
    }
  }
}

}  // namespace

std::vector<Triple> quinv_triples(const Filling& F) {
  require_csf(F, "quinv_triples");
  std::vector<Triple> out;
  scan_triples(F, +1, [&](int i, int xc, int zc) {
    out.push_back({{i, xc}, {i + 1, xc}, {i, zc}});
  });
  return out;
}

std::vector<Triple> refinv_triples(const Filling& F) {
  require_csf(F, "refinv_triples");
  std::vector<Triple> out;
  scan_triples(F, -1, [&](int i, int xc, int zc) {
    out.push_back({{i, xc}, {i + 1, xc}, {i, zc}});
  });
  return out;
}

long long quinv(const Filling& F) {
  require_csf(F, "quinv");
  long long count = 0;
  scan_triples(F, +1, [&](int, int, int) { ++count; });
  return count;
}

long long inv(const Filling& F) {
  require_csf(F, "inv");
  long long count = 0;
  scan_triples(F, -1, [&](int, int, int) { ++count; });
  return count;
}

long long statistic(Stat stat, const Filling& F) {
  return stat == Stat::inv ? inv(F) : quinv(F);
}

namespace {

int zcells(CellRef c, const Filling& F, int zdir, const char* who) {
  require_csf(F, who);
  if (!F.in_shape(c.row, c.col))
    throw std::invalid_argument(std::string(who) + ": cell outside shape");
  int fz = F.entry(c.row, c.col);
  int len = F.shape().part(c.row - 1);
  int xc0 = zdir > 0 ? 1 : c.col + 1;
  int xc1 = zdir > 0 ? c.col - 1 : len;
  int count = 0;
  for (int xc = xc0; xc <= xc1; ++xc) {
    int fx = F.entry(c.row, xc);
    if (fx < fz && fz < F.entry_below_or_infinity(c.row, xc)) ++count;
  }
  return count;
}

}  // namespace

int zcount(CellRef c, const Filling& F) { return zcells(c, F, +1, "zcount"); }

int zcb(CellRef c, const Filling& F) { return zcells(c, F, -1, "zcb"); }

std::vector<CellRef> cells(int i, int j, const Filling& F) {
  if (i < 1 || j < 1 || i > j + 1 || j + 1 > F.n())
    throw std::invalid_argument("cells: index out of range");
  std::vector<CellRef> out;
  for (int c = 1; c <= F.shape().part(i - 1); ++c)
    if (F.entry(i, c) == j + 1) out.push_back({i, c});
  return out;
}

GTPattern rsort(const Filling& F) {
  require_csf(F, "rsort");
  const int n = F.n();
  if (n < 1) throw std::invalid_argument("rsort: empty alphabet");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    auto& row = rows[static_cast<std::size_t>(j) - 1];
    row.assign(static_cast<std::size_t>(j), 0);
    for (int i = 1; i <= std::min(j, F.shape().num_parts()); ++i) {
      int count = 0;
      for (int c = 1; c <= F.shape().part(i - 1); ++c)
        if (F.entry(i, c) <= j) ++count;
      row[static_cast<std::size_t>(i) - 1] = count;
    }
  }
  return GTPattern(n, std::move(rows));
}

std::vector<int> xweight(const Filling& F) {
  std::vector<int> w(static_cast<std::size_t>(F.n()), 0);
  for (const auto& row : F.rows())
    for (int v : row) ++w[static_cast<std::size_t>(v) - 1];
  return w;
}

std::string to_string(const Filling& F) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < F.rows().size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t c = 0; c < F.rows()[i].size(); ++c) {
      if (c) os << ',';
      os << F.rows()[i][c];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

void enumerate_fillings(const Partition& shape, int n, bool column_strict,
                        const std::function<void(const Filling&)>& fn) {
  if (shape.empty()) {
    fn(Filling(n, {}));
    return;
  }
  if (n < 1) return;  // nonempty shape needs at least one letter
  std::vector<std::pair<int, int>> cellseq;
  for (int i = 1; i <= shape.num_parts(); ++i)
    for (int c = 1; c <= shape.part(i - 1); ++c) cellseq.emplace_back(i, c);
  std::vector<std::vector<int>> rows(
      static_cast<std::size_t>(shape.num_parts()));
  for (int i = 0; i < shape.num_parts(); ++i)
    rows[static_cast<std::size_t>(i)].assign(
        static_cast<std::size_t>(shape.part(i)), 0);
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cellseq.size()) {
      fn(Filling(n, rows));
      return;
    }
    auto [r, c] = cellseq[idx];
    int lb = 1;
    if (column_strict && r >= 2)
      lb = rows[static_cast<std::size_t>(r) - 2][static_cast<std::size_t>(c) - 1] + 1;
    for (int e = lb; e <= n; ++e) {
      rows[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1] = e;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

void for_each_filling(const Partition& shape, int n,
                      const std::function<void(const Filling&)>& fn) {
  enumerate_fillings(shape, n, false, fn);
}

void for_each_csf(const Partition& shape, int n,
                  const std::function<void(const Filling&)>& fn) {
  enumerate_fillings(shape, n, true, fn);
}

void for_each_fiber_filling(const GTPattern& T,
                            const std::function<void(const Filling&)>& fn) {
  Filling tab = ssyt_from_gt(T);
  const Partition& sh = tab.shape();
  if (sh.empty()) {
    fn(tab);
    return;
  }
  const int n = tab.n();
  const int nrows = sh.num_parts();
  // Remaining multiset of entries per row.
  std::vector<std::vector<int>> remaining(
      static_cast<std::size_t>(nrows),
      std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  for (int i = 1; i <= nrows; ++i)
    for (int c = 1; c <= sh.part(i - 1); ++c)
      ++remaining[static_cast<std::size_t>(i) - 1]
                 [static_cast<std::size_t>(tab.entry(i, c))];
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(nrows));
  for (int i = 0; i < nrows; ++i)
    rows[static_cast<std::size_t>(i)].assign(
        static_cast<std::size_t>(sh.part(i)), 0);
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (c > sh.part(r - 1)) {
      r += 1;
      c = 1;
    }
    if (r > nrows) {
      fn(Filling(n, rows));
      return;
    }
    int lb = r >= 2 ? rows[static_cast<std::size_t>(r) - 2]
                          [static_cast<std::size_t>(c) - 1] + 1
                    : 1;
    auto& pool = remaining[static_cast<std::size_t>(r) - 1];
    for (int e = lb; e <= n; ++e) {
      if (pool[static_cast<std::size_t>(e)] == 0) continue;
      --pool[static_cast<std::size_t>(e)];
      rows[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1] = e;
      self(self, r, c + 1);
      ++pool[static_cast<std::size_t>(e)];
    }
  };
  rec(rec, 1, 1);
}

GTPattern gt_from_ssyt(const Filling& tab) {
  const Partition& sh = tab.shape();
  for (int i = 1; i <= sh.num_parts(); ++i)
    for (int c = 1; c + 1 <= sh.part(i - 1); ++c)
      if (tab.entry(i, c) > tab.entry(i, c + 1))
        throw std::invalid_argument("gt_from_ssyt: rows not weakly increasing");
  if (!is_csf(tab))
    throw std::invalid_argument("gt_from_ssyt: columns not strictly increasing");
  return rsort(tab);  // already sorted; shares the counting construction
}

Filling ssyt_from_gt(const GTPattern& T) {
  const int n = T.n();
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> row;
    for (int j = i; j <= n; ++j) {
      int count = T.entry(j, i) - (j > i ? T.entry(j - 1, i) : 0);
      row.insert(row.end(), static_cast<std::size_t>(count), j);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return Filling(n, std::move(rows));
}

}  // namespace qwhit
