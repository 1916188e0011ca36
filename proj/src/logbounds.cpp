#include "champ/logbounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>

namespace champ {

namespace {

// Exact conversion: every finite mpfr value is mantissa * 2^exp.
Rat to_rational(mpfr_srcptr x) {
  Int mantissa;
  const mpfr_exp_t exp = mpfr_get_z_2exp(mantissa.get_mpz_t(), x);
  Rat q(std::move(mantissa));
  if (exp > 0) {
    q *= Rat(int_pow(2ul, static_cast<unsigned long>(exp)));
  } else if (exp < 0) {
    q /= Rat(int_pow(2ul, static_cast<unsigned long>(-exp)));
  }
  return q;
}

Rat log10_rounded(const Int& n, int bits, mpfr_rnd_t rounding) {
  if (n < 2) throw std::invalid_argument("log10 bounds need n >= 2");
  const int arg_bits = std::max(64, static_cast<int>(mpz_sizeinbase(n.get_mpz_t(), 2)) + 2);
  mpfr_t arg, res;
  mpfr_init2(arg, arg_bits);
  mpfr_init2(res, bits);
  mpfr_set_z(arg, n.get_mpz_t(), MPFR_RNDN);  // exact: precision covers n
  mpfr_log10(res, arg, rounding);
  Rat out = to_rational(res);
  mpfr_clear(res);
  mpfr_clear(arg);
  return out;
}

}  // namespace

RatBounds log10_bounds(const Int& n, int bits) {
  return {log10_rounded(n, bits, MPFR_RNDD), log10_rounded(n, bits, MPFR_RNDU)};
}

Rat log10_approx(const Int& n, int bits) { return log10_rounded(n, bits, MPFR_RNDN); }

}  // namespace champ
