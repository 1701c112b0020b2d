#ifndef SDRES_RAT_HPP
#define SDRES_RAT_HPP

#include <gmpxx.h>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace sdres {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1)
{
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// num/den in lowest terms, positive denominator (gmp canonical form).
inline std::string rat_str(const Rat& r)
{
  return r.get_str();
}

inline Rat rat_pow(const Rat& base, long e)
{
  if (e == 0)
    return Rat(1);
  if (sgn(base) == 0) {
    if (e < 0)
      throw std::domain_error("zero base with negative exponent");
    return Rat(0);
  }
  Rat b = base;
  bool inv = e < 0;
  unsigned long ee = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), b.get_num().get_mpz_t(), ee);
  mpz_pow_ui(den.get_mpz_t(), b.get_den().get_mpz_t(), ee);
  Rat r = inv ? Rat(den, num) : Rat(num, den);
  r.canonicalize();
  return r;
}

// Exact q-th root of a rational if one exists in Q.  For even q the
// radicand must be nonnegative and the principal (positive) root is
// returned.
inline bool rat_root(const Rat& a, unsigned long q, Rat& out)
{
  if (q == 0)
    return false;
  if (q == 1) {
    out = a;
    return true;
  }
  if (sgn(a) == 0) {
    out = Rat(0);
    return true;
  }
  if (sgn(a) < 0 && q % 2 == 0)
    return false;
  Int num = a.get_num(), den = a.get_den();
  bool neg = sgn(num) < 0;
  if (neg)
    num = -num;
  Int rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), q))
    return false;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), q))
    return false;
  out = Rat(neg ? Int(-rn) : rn, rd);
  out.canonicalize();
  return true;
}

// Deterministic rng wrapper used by all randomized routines.
class Rng {
public:
  explicit Rng(std::uint64_t seed = 0x5d1f7c3a9e24b80dULL) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  // uniform integer in [lo, hi]
  long integer(long lo, long hi)
  {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(eng_);
  }

  // nonzero rational with ~63-bit numerator and denominator
  Rat rational63()
  {
    Int num(static_cast<unsigned long>(eng_() >> 1));
    num -= Int(static_cast<unsigned long>(1) << 62 >> 1) * 2;  // center around 0
    if (sgn(num) == 0)
      num = 1;
    Int den(static_cast<unsigned long>(eng_() >> 1) | 1);
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

  // small nonzero rational, handy for property tests
  Rat small_rational(long bound = 20)
  {
    long n = integer(-bound, bound);
    if (n == 0)
      n = 1;
    long d = integer(1, bound);
    return make_rat(n, d);
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace sdres

#endif
