#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace extlat {

using Count = mpz_class;
using Rational = mpq_class;

Count factorial(int n);
Count binomial(long n, long k);
Count power(long base, unsigned long exponent);

// Raised when an enumeration would exceed a configured state-space cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Count& c) { return c.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace extlat
