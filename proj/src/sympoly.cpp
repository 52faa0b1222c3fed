#include "qwhit/sympoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qwhit {

SymPoly::SymPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("SymPoly: negative variable count");
}

void SymPoly::add_term(const std::vector<int>& exps, const QPoly& c) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw std::invalid_argument("SymPoly: exponent vector of wrong length");
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("SymPoly: negative exponent");
  if (c.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (o.nvars_ != nvars_)
    throw std::invalid_argument("SymPoly: mixed variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SymPoly SymPoly::operator*(const QPoly& c) const {
  SymPoly out(nvars_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.add_term(e, v * c);
  return out;
}

QPoly SymPoly::coefficient(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? QPoly() : it->second;
}

SymPoly SymPoly::specialize_last_var_to_one() const {
  if (nvars_ < 1)
    throw std::invalid_argument("SymPoly: no variable to specialize");
  SymPoly out(nvars_ - 1);
  for (const auto& [e, c] : terms_) {
    std::vector<int> key(e.begin(), e.end() - 1);
    out.add_term(key, c);
  }
  return out;
}

SymPoly SymPoly::eval_q_zero() const {
  SymPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.add_term(e, QPoly(c.at_zero()));
  return out;
}

bool SymPoly::is_symmetric() const {
  for (int i = 0; i + 1 < nvars_; ++i) {
    for (const auto& [e, c] : terms_) {
      std::vector<int> swapped(e);
      std::swap(swapped[static_cast<std::size_t>(i)],
                swapped[static_cast<std::size_t>(i) + 1]);
      if (coefficient(swapped) != c) return false;
    }
  }
  return true;
}

std::string SymPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending lexicographic order reads naturally (x1^2 before x2^2).
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (int v = 0; v < nvars_; ++v) {
      int p = e[static_cast<std::size_t>(v)];
      if (p == 0) continue;
      if (any) mono << '*';
      any = true;
      mono << 'x' << (v + 1);
      if (p > 1) mono << '^' << p;
    }
    std::string cs = c.to_string();
    int nonzero = 0;
    for (const Int& v : c.coeffs())
      if (v != 0) ++nonzero;
    if (!any) {
      os << cs;
    } else if (cs == "1") {
      os << mono.str();
    } else if (nonzero == 1 && c.coeffs().back() > 0) {
      os << cs << '*' << mono.str();
    } else {
      os << '(' << cs << ")*" << mono.str();
    }
  }
  return os.str();
}

}  // namespace qwhit
