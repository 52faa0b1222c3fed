#pragma once
// The three monomial models of the q-Whittaker polynomial, the q=0
// projection, the branching identity, and row-sort fiber generating
// functions.

#include "qwhit/filling.hpp"
#include "qwhit/gt_pattern.hpp"
#include "qwhit/report.hpp"
#include "qwhit/sympoly.hpp"

namespace qwhit {

enum class Model { fermionic, inv, quinv };

// fermionic: sum over GT patterns of x^T wtq(T);
// inv/quinv:  sum over CSFs of x^F q^{v(F)}.
SymPoly whittaker(const Partition& lambda, int n, Model model);

// The q = 0 specialization; equals the Schur polynomial sum_T x^T.
SymPoly schur(const Partition& lambda, int n);

// W_lambda(x_1..x_{n-1}, 1; q) =
//   sum over mu interlacing lambda of
//   prod_i qbinom(lambda_i - mu_i, mu_i - lambda_{i+1}) * W_mu(X_{n-1}; q).
CheckReport check_branching_identity(const Partition& lambda, int n);

// sum of q^{stat(F)} over the fiber of rsort over T; equals wtq(T) for
// either statistic.
QPoly fiber_qgen(const GTPattern& T, Stat stat);

}  // namespace qwhit
