#pragma once
// Fillings of Young diagrams (English convention, 1-based cells) and the
// statistics maj, quinv and inv, the latter two via their triple
// descriptions on column strict fillings.

#include <functional>
#include <string>
#include <vector>

#include "qwhit/gt_pattern.hpp"
#include "qwhit/partition.hpp"

namespace qwhit {

struct CellRef {
  int row = 0;
  int col = 0;
  auto operator<=>(const CellRef&) const = default;
};

class Filling {
 public:
  // Shape is implied by the row lengths; entries must lie in [1, n].
  Filling(int n, std::vector<std::vector<int>> rows);

  int n() const { return n_; }
  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  long long num_cells() const { return shape_.sum(); }

  bool in_shape(int row, int col) const;
  int entry(int row, int col) const;  // 1-based
  // Entry of the cell directly below, or a sentinel acting as +infinity
  // when that cell lies outside the diagram.
  int entry_below_or_infinity(int row, int col) const;
  int column_height(int col) const;

  bool operator==(const Filling&) const = default;

 private:
  int n_ = 0;
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

enum class Stat { inv, quinv };

bool is_csf(const Filling& F);  // strictly increasing down columns
bool is_wdf(const Filling& F);  // weakly decreasing down columns

// Sum of leg(u) over cells u whose below-neighbour holds a larger entry.
// With this convention maj(F) = eta(shape) iff F is a CSF and maj(F) = 0
// iff F is a WDF.
long long maj(const Filling& F);

struct Triple {
  CellRef x, y, z;  // y is the cell below x in the augmented diagram
  auto operator<=>(const Triple&) const = default;
};

// Triples with z strictly to the right of x in the same row, y directly
// below x, and F(x) < F(z) < F(y) (F = infinity below the diagram).
std::vector<Triple> quinv_triples(const Filling& F);
// Same with z strictly to the left of x.
std::vector<Triple> refinv_triples(const Filling& F);

long long quinv(const Filling& F);
long long inv(const Filling& F);
long long statistic(Stat stat, const Filling& F);

// Number of quinv-triples (resp. refinv-triples) whose third component
// is the cell c.
int zcount(CellRef c, const Filling& F);
int zcb(CellRef c, const Filling& F);

// Cells of row i holding the entry j+1, left to right; requires
// 1 <= i <= j+1 <= n.
std::vector<CellRef> cells(int i, int j, const Filling& F);

// Ascending sort of every row; lands in SSYT when F is a CSF.
GTPattern rsort(const Filling& F);

// Content vector: exponent of x_v is the number of cells holding v.
std::vector<int> xweight(const Filling& F);

std::string to_string(const Filling& F);

// Enumeration streams, deterministic row-major lexicographic order.
void for_each_filling(const Partition& shape, int n,
                      const std::function<void(const Filling&)>& fn);
void for_each_csf(const Partition& shape, int n,
                  const std::function<void(const Filling&)>& fn);
// All CSFs whose row sort equals T.
void for_each_fiber_filling(const GTPattern& T,
                            const std::function<void(const Filling&)>& fn);

}  // namespace qwhit
