#pragma once
// Dense polynomials in q with exact unbounded integer coefficients.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace qwhit {

using Int = boost::multiprecision::cpp_int;

class QPoly {
 public:
  QPoly() = default;  // the zero polynomial
  QPoly(long long constant);
  QPoly(const Int& constant);
  explicit QPoly(std::vector<Int> coeffs);  // coeffs[d] multiplies q^d

  static QPoly monomial(long long degree, Int coeff = 1);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(int d) const;
  const std::vector<Int>& coeffs() const { return c_; }

  Int at_one() const;   // sum of coefficients
  Int at_zero() const;  // constant term

  QPoly& operator+=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) {
    a += b;
    return a;
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  bool operator==(const QPoly&) const = default;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Int> c_;
};

// Generating function of partitions inside a k x l box, i.e. the Gaussian
// binomial [k+l choose k]_q, via the Pascal-type recurrence
// B(k,l) = B(k,l-1) + q^l B(k-1,l).
QPoly qbinom(int k, int l);

}  // namespace qwhit
