#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace champ {

using Int = mpz_class;
using Rat = mpq_class;

Int int_pow(unsigned long base, unsigned long exp);
Int int_pow(const Int& base, unsigned long exp);

// num/den in canonical form; den must be nonzero.
Rat make_rat(Int num, Int den);

// Number of base-b digits of v >= 1.
int digit_length(const Int& v, int base);

// Floored quotient (round toward -inf), for possibly negative numerators.
Int floor_div(const Int& a, const Int& b);

// Fixed-point decimal rendering with `fraction_digits` digits after the
// point, rounded half away from zero. Deterministic; used for all machine
// output instead of floating point.
std::string decimal_string(const Rat& q, int fraction_digits);

// Thrown when a requested computation would exceed the materialization guard.
struct infeasible_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// splitmix64. Self-contained so seeded commands and tests reproduce
// bit-identically on every platform (std:: distributions do not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n); n >= 1, rejection sampled
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::uint64_t state_;
};

}  // namespace champ
