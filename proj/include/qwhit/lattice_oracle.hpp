#pragma once
// Independent series expansion of the basic character: the theta function
// of the A_{n-1} root lattice divided by (q;q)_infinity^{n-1}, truncated
// at q^q_cap. Ground truth for the CSF computation; deliberately built on
// plain containers with no dependence on the rest of the library.

#include <map>
#include <vector>

namespace qwhit {

// Per q-degree d <= q_cap: reduced weight vector (length n, minimum
// coordinate 0) -> multiplicity.
std::map<int, std::map<std::vector<int>, long long>> basic_character_oracle(
    int n, int q_cap);

}  // namespace qwhit
