#pragma once
// Sparse polynomials in x_1..x_n whose coefficients are QPoly values.
// Exponent vectors are kept in lexicographic order for deterministic
// serialization.

#include <map>
#include <string>
#include <vector>

#include "qwhit/qpoly.hpp"

namespace qwhit {

class SymPoly {
 public:
  explicit SymPoly(int nvars);

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, QPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<int>& exps, const QPoly& c);

  SymPoly& operator+=(const SymPoly& o);  // rejects mixed nvars
  friend SymPoly operator+(SymPoly a, const SymPoly& b) {
    a += b;
    return a;
  }
  SymPoly operator*(const QPoly& c) const;
  bool operator==(const SymPoly&) const = default;

  QPoly coefficient(const std::vector<int>& exps) const;

  // x_n = 1: sums coefficients over the dropped last exponent.
  SymPoly specialize_last_var_to_one() const;
  // q = 0: constant term of every coefficient.
  SymPoly eval_q_zero() const;
  // Invariance of the term map under all adjacent transpositions of the
  // exponent coordinates.
  bool is_symmetric() const;

  std::string to_text() const;

 private:
  int nvars_ = 0;
  std::map<std::vector<int>, QPoly> terms_;
};

}  // namespace qwhit
