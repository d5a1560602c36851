#include "zonotopal/integer.hpp"

namespace zonotopal {

Integer binomial(const Integer& n, unsigned long k) {
  if (k == 0) return 1;
  if (n >= 0 && n.fits_ulong_p()) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n.get_ui(), k);
    return r;
  }
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

Integer factorial(unsigned long k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Integer contentOf(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

} // namespace zonotopal
