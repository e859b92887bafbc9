#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace parkspan {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when a size guard is exceeded (callers may retry with bigger limits).
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a search exhausts its node budget without reaching a verdict.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int factorial(long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline Int ipow(Int base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
  if (!is_integer(q)) throw std::domain_error("expected integer, got " + q.get_str());
  return q.get_num();
}

inline long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw std::domain_error("integer too large: " + z.get_str());
  return z.get_si();
}

inline long to_long(const Rat& q) { return to_long(to_int(q)); }

}  // namespace parkspan
