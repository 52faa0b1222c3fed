#pragma once
// Exhaustive desk-scale verification suites over all (lambda, n) with
// |lambda| <= max_size, lambda with at most n parts, 1 <= n <= vars.

#include "qwhit/report.hpp"

namespace qwhit {

// All three models of W_lambda agree and are symmetric.
CheckReport verify_equality(int max_size, int vars);
// psi round-trips, weight preservation, bcomp relation, omega involution,
// and the CSF/POP cardinality identity.
CheckReport verify_bijections(int max_size, int vars);
// pr . psi_v = rsort and psi_v . dsplice = br . psi_v.
CheckReport verify_diagrams(int max_size, int vars);
// Fiber generating functions equal wtq(T); inv + quinv = area(T) on fibers.
CheckReport verify_fibers(int max_size, int vars);
// Over ALL fillings: maj = eta(lambda) iff CSF, maj = 0 iff WDF.
CheckReport verify_maj(int max_size, int vars);
// dsplice outcome is independent of the splice order (seeded random
// orders), its shape interlaces lambda, and its row sort deletes the
// n-cells of rsort(F).
CheckReport verify_dsplice(int max_size, int vars, unsigned long long seed,
                           int trials = 10);
// The branching identity as an exact SymPoly equality (n >= 2).
CheckReport verify_branching(int max_size, int vars);

}  // namespace qwhit
