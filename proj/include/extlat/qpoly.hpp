#pragma once

#include <string>
#include <vector>

#include "extlat/arith.hpp"

namespace extlat {

// Polynomial in q with integer coefficients; coeffs()[i] is the q^i term.
// Trailing zeros are trimmed, so equality is structural.
class QPoly {
 public:
  QPoly() = default;
  QPoly(Count constant);  // NOLINT: implicit lift of scalars is intended
  QPoly(int constant) : QPoly(Count(constant)) {}  // NOLINT
  explicit QPoly(std::vector<Count> coeffs);
  static QPoly monomial(int degree, Count coeff = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Count coeff(int i) const;
  const std::vector<Count>& coeffs() const { return c_; }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  QPoly truncated(int max_degree) const;
  QPoly shifted(int by) const;  // multiply by q^by
  // Coefficient-wise a >= b.
  bool dominates(const QPoly& other) const;
  Rational evaluate(const Rational& q) const;
  Count at_one() const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Count> c_;
};

QPoly multiply_truncated(const QPoly& a, const QPoly& b, int max_degree);

}  // namespace extlat
