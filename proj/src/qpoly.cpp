#include "qwhit/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qwhit {

QPoly::QPoly(long long constant) : QPoly(Int(constant)) {}

QPoly::QPoly(const Int& constant) {
  if (constant != 0) c_.push_back(constant);
}

QPoly::QPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

QPoly QPoly::monomial(long long degree, Int coeff) {
  if (degree < 0) throw std::invalid_argument("QPoly: negative degree");
  QPoly p;
  if (coeff != 0) {
    p.c_.assign(static_cast<std::size_t>(degree) + 1, Int(0));
    p.c_.back() = std::move(coeff);
  }
  return p;
}

Int QPoly::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(d)];
}

Int QPoly::at_one() const {
  Int s = 0;
  for (const Int& v : c_) s += v;
  return s;
}

Int QPoly::at_zero() const { return c_.empty() ? Int(0) : c_.front(); }

void QPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Int> out(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& o) {
  *this = *this * o;
  return *this;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < c_.size(); ++d) {
    const Int& v = c_[d];
    if (v == 0) continue;
    Int mag = v < 0 ? Int(-v) : v;
    if (first) {
      if (v < 0) os << '-';
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    if (d == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << 'q';
      if (d > 1) os << '^' << d;
    }
  }
  return os.str();
}

QPoly qbinom(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("qbinom: negative box");
  // B[j] holds B(i, j) while filling row i.
  std::vector<QPoly> row(static_cast<std::size_t>(l) + 1, QPoly(1));
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= l; ++j) {
      // B(i, j) = B(i, j-1) + q^j B(i-1, j)
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j) - 1] +
          QPoly::monomial(j) * row[static_cast<std::size_t>(j)];
    }
  }
  return row[static_cast<std::size_t>(l)];
}

}  // namespace qwhit
