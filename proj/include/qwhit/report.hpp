#pragma once
// Result of an exhaustive check: number of objects examined and a list of
// counterexample descriptions (empty on success).

#include <string>
#include <vector>

namespace qwhit {

struct CheckReport {
  long long checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void merge(const CheckReport& o) {
    checked += o.checked;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
};

}  // namespace qwhit
