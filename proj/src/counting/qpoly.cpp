#include "extlat/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace extlat {

QPoly::QPoly(Count constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<Count> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(int degree, Count coeff) {
  std::vector<Count> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = std::move(coeff);
  return QPoly(std::move(c));
}

Count QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly multiply_truncated(const QPoly& a, const QPoly& b, int max_degree) {
  if (a.is_zero() || b.is_zero()) return {};
  int deg = std::min(a.degree() + b.degree(), max_degree);
  if (deg < 0) return {};
  std::vector<Count> out(static_cast<std::size_t>(deg) + 1, 0);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (int i = 0; i <= a.degree() && i <= deg; ++i) {
    if (ac[i] == 0) continue;
    for (int j = 0; j <= b.degree() && i + j <= deg; ++j) out[i + j] += ac[i] * bc[j];
  }
  return QPoly(std::move(out));
}

QPoly operator*(const QPoly& a, const QPoly& b) { return multiply_truncated(a, b, a.degree() + b.degree()); }

QPoly QPoly::truncated(int max_degree) const {
  if (degree() <= max_degree) return *this;
  return QPoly(std::vector<Count>(c_.begin(), c_.begin() + (max_degree + 1)));
}

QPoly QPoly::shifted(int by) const {
  if (is_zero()) return {};
  std::vector<Count> c(static_cast<std::size_t>(by), 0);
  c.insert(c.end(), c_.begin(), c_.end());
  return QPoly(std::move(c));
}

bool QPoly::dominates(const QPoly& other) const {
  int deg = std::max(degree(), other.degree());
  for (int i = 0; i <= deg; ++i)
    if (coeff(i) < other.coeff(i)) return false;
  return true;
}

Rational QPoly::evaluate(const Rational& q) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Rational(*it);
  return acc;
}

Count QPoly::at_one() const {
  Count s = 0;
  for (const auto& v : c_) s += v;
  return s;
}

std::string QPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] < 0 ? " - " : " + ");
    else if (c_[i] < 0) os << '-';
    Count mag = abs(c_[i]);
    if (i == 0) os << mag;
    else {
      if (mag != 1) os << mag << '*';
      os << 'q';
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace extlat
