#pragma once
// Truncated CSF sums converging to the character of the level-one basic
// representation: sum over k of sum over F in C_k of x^F q^{k^2 - inv(F)},
// graded by sl_n-weight (x-exponents reduced modulo the all-ones vector).

#include <map>
#include <string>
#include <vector>

#include "qwhit/filling.hpp"
#include "qwhit/partition.hpp"

namespace qwhit {

// Reduced weight -> multiplicity. Reduction subtracts min * (1,..,1) so
// the minimum coordinate is 0.
using WeightMap = std::map<std::vector<int>, long long>;

std::vector<int> reduce_weight(std::vector<int> exps);

// k * (2,1,...,1,0) with n-1 nonzero parts.
Partition theta_shape(int n, int k);

// Membership in C_k: either 1 occurs in the first column of F, or 1 does
// not occur in its last column.
bool in_ck(const Filling& F);

struct CharacterResult {
  int n = 0;
  int k_max = 0;
  int q_cap = 0;
  std::map<int, WeightMap> coeff;  // per q-degree d in [0, q_cap]
  // Smallest k from which the degree-d data never changes again (within
  // the computed range); 0 when the k = 0 partial sum is already final.
  std::map<int, int> stable_at;
  // Fillings with k^2 - inv(F) < 0; expected empty, reported not rejected.
  std::vector<std::string> violations;
};

CharacterResult basic_character_partial(int n, int k_max, int q_cap);

}  // namespace qwhit
