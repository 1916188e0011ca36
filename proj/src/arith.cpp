#include "champ/arith.hpp"

namespace champ {

Int int_pow(unsigned long base, unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

int digit_length(const Int& v, int base) {
  if (v < 1) throw std::invalid_argument("digit_length: v must be >= 1");
  // mpz_sizeinbase may report one digit too many for non-power-of-2 bases.
  std::size_t n = mpz_sizeinbase(v.get_mpz_t(), base);
  if (n > 1 && v < int_pow(static_cast<unsigned long>(base), n - 1)) --n;
  return static_cast<int>(n);
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::string decimal_string(const Rat& q, int fraction_digits) {
  if (fraction_digits < 0) throw std::invalid_argument("decimal_string: negative precision");
  const bool negative = q < 0;
  Rat a = negative ? Rat(-q) : q;
  // scaled = round(|q| * 10^d), half away from zero
  Int scale = int_pow(10ul, static_cast<unsigned long>(fraction_digits));
  Int num = a.get_num() * scale;
  Int whole = num / a.get_den();
  Int rem = num - whole * a.get_den();
  if (2 * rem >= a.get_den()) whole += 1;

  Int ip = whole / scale;
  Int fp = whole - ip * scale;
  std::string out = negative && whole != 0 ? "-" : "";
  out += ip.get_str();
  if (fraction_digits > 0) {
    std::string frac = fp.get_str();
    out += ".";
    out += std::string(static_cast<std::size_t>(fraction_digits) - frac.size(), '0');
    out += frac;
  }
  return out;
}

}  // namespace champ
