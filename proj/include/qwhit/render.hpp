#pragma once
// Lattice-path representation of a CSF: one monotone staircase path per
// column of the diagram, drawn on a grid with one column per row of the
// filling and one horizontal strip per entry value. Crossings of the
// marked form realize inv(F); non-crossings of that form realize quinv(F).

#include <string>
#include <vector>

#include "qwhit/filling.hpp"

namespace qwhit {

struct PathCrossing {
  int strip = 0;         // entry value of the strip where paths meet
  int grid_col = 0;      // row index of the filling
  int vertical_col = 0;  // column whose path passes full-height
  int turning_col = 0;   // column whose path turns down inside the cell
  auto operator<=>(const PathCrossing&) const = default;
};

struct PathDiagram {
  int n = 0;          // number of strips
  int grid_cols = 0;  // number of rows of the filling
  int paths = 0;      // number of columns of the filling
  std::vector<PathCrossing> crossings;  // |crossings| = inv(F)
  long long noncrossings = 0;           // = quinv(F)
};

PathDiagram path_diagram(const Filling& F);

std::string render_ascii(const Filling& F);
std::string render_svg(const Filling& F);

}  // namespace qwhit
