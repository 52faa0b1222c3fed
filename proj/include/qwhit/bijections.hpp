#pragma once
// The weight-preserving bijections between column strict fillings and
// partition overlaid patterns, their inverses, the involution omega, and
// the commutative-diagram checkers.

#include "qwhit/filling.hpp"
#include "qwhit/pop.hpp"
#include "qwhit/report.hpp"

namespace qwhit {

// (rsort(F), Lambda) with Lambda_ij the zcount values of cells(i,j,F)
// read right to left; |Lambda| = quinv(F).
OverlaidPattern psi_quinv(const Filling& F);

// (rsort(F), Lambda-bar) with Lambda-bar_ij the zcb values read left to
// right; the box complement of the quinv overlay; |Lambda-bar| = inv(F).
OverlaidPattern psi_inv(const Filling& F);

// Row-by-row reconstruction from the bottom; two-sided inverse of the
// matching psi map.
Filling psi_inverse(const OverlaidPattern& p, Stat stat);

// psi_inv^{-1} . psi_quinv: an involution exchanging inv and quinv.
Filling omega(const Filling& F);

// pr . psi_v = rsort over all CSFs of shape lambda.
CheckReport check_projection(const Partition& lambda, int n);
// psi_v . dsplice = br . psi_v (dsplice output read over [n-1]).
CheckReport check_branching(const Partition& lambda, int n);
// bcomp . psi_inv = psi_quinv.
CheckReport check_complement(const Partition& lambda, int n);

}  // namespace qwhit
