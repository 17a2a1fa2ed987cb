#include "extlat/arith.hpp"

namespace extlat {

Count factorial(int n) {
  Count out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return out;
}

Count binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Count out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Count power(long base, unsigned long exponent) {
  Count out;
  Count b = base;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
  return out;
}

}  // namespace extlat
