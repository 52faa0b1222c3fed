#pragma once
// Column splicing and the delete-and-splice branching map on CSFs.

#include <functional>
#include <utility>
#include <vector>

#include "qwhit/filling.hpp"

namespace qwhit {

// sigma and tau are strictly increasing tuples of positive integers with
// len(sigma) = len(tau) - 1; swaps the suffixes from position
// k = max{ i : sigma_{i-1} < tau_i } (sigma_0 = 0), exchanging lengths.
std::pair<std::vector<int>, std::vector<int>> splice(
    const std::vector<int>& sigma, const std::vector<int>& tau);

// Deletes every cell holding the entry n, then splices adjacent column
// pairs until the column lengths form a partition. The result is a CSF
// over the alphabet [n-1] whose shape interlaces that of F.
Filling dsplice(const Filling& F);

// Same map, with the choice of which eligible column pair to splice next
// delegated to `chooser` (given the eligible column indices, returns a
// position into that list). The outcome never depends on the choices.
Filling dsplice_with_chooser(
    const Filling& F,
    const std::function<std::size_t(const std::vector<int>&)>& chooser);

}  // namespace qwhit
