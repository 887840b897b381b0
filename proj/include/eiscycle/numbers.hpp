#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace eis {

// Exact rational coefficient type. mpq_class keeps values canonical
// (reduced, positive denominator) as long as arithmetic goes through
// its operators; anything built from raw numerator/denominator pairs
// must call canonicalize().
using Rat = mpq_class;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerifyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated internal assertion (a "cannot happen" branch), distinct from
// bad input and from a failed mathematical check.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "p" (arbitrary precision, optional sign).
inline Rat parse_rat(const std::string& s) {
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw UsageError("malformed rational: '" + s + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw UsageError("zero denominator in rational: '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool is_integer(const Rat& q) {
  return mpz_cmp_ui(mpq_denref(q.get_mpq_t()), 1) == 0;
}

// Floor of a rational as an integer.
inline mpz_class rat_floor(const Rat& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
  return r;
}

// Fractional part, in [0, 1).
inline Rat rat_frac(const Rat& q) { return q - Rat(rat_floor(q)); }

// B_0 .. B_n by the defining recurrence sum_{j<=m} C(m+1,j) B_j = 0.
inline std::vector<Rat> bernoulli_upto(int n) {
  std::vector<Rat> b(n + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rat acc = 0;
    mpz_class binom = 1;  // C(m+1, 0)
    for (int j = 0; j < m; ++j) {
      acc += Rat(binom) * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[m] = -acc / Rat(binom);  // binom == C(m+1, m) == m+1
  }
  return b;
}

inline long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

}  // namespace eis
