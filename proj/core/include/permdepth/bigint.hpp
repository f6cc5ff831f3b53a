#pragma once

#include <gmpxx.h>

#include <string>

namespace permdepth {

// Exact unbounded integer. Row counts reach n! and overflow any native
// type from n = 21 on, so everything counted is carried in one of these.
using BigInt = mpz_class;

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// C(n, k), zero for k > n.
inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace permdepth
