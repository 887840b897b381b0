#include "eiscycle/lseries.hpp"

#include <numeric>

namespace eis {

Real hurwitz_zeta2(const Rat& x, int digits) {
  if (digits < 10) throw UsageError("hurwitz_zeta2: need at least 10 digits");
  if (x <= 0 || x > 1) throw UsageError("hurwitz_zeta2: x must be in (0, 1]");
  mpfr_prec_t prec = prec_for_digits(digits + 10);
  Real eps = Real::pow10(-(long)(digits + 6), prec);

  static const std::vector<Rat> bern = bernoulli_upto(120);

  long M = std::max(40L, (long)digits);
  for (int attempt = 0; attempt < 8; ++attempt, M *= 4) {
    // head: sum_{n=0}^{M-1} (n+x)^{-2}
    Real head(prec);
    Real xr = Real::of(x, prec);
    for (long n = 0; n < M; ++n) {
      Real t = Real::of(n, prec) + xr;
      head += Real::of(1L, prec) / t.sqr();
    }
    Real Mx = Real::of(M, prec) + xr;
    // tail = 1/(M+x) + 1/(2 (M+x)^2) + sum_k B_{2k} (M+x)^{-2k-1}
    Real tail = Real::of(1L, prec) / Mx + Real::of(1L, prec) / (Real::of(2L, prec) * Mx.sqr());
    bool converged = false;
    Real prev_abs(prec);
    for (size_t k = 1; 2 * k + 1 < bern.size(); ++k) {
      Real term = Real::of(bern[2 * k], prec).div_pow(Mx, 2 * k + 1);
      Real mag = term.abs();
      if (k > 1 && mag > prev_abs) break;  // terms started growing; M too small
      tail += term;
      prev_abs = mag;
      if (mag < eps) {
        converged = true;
        break;
      }
    }
    if (converged) return head + tail;
  }
  throw PrecisionError("hurwitz_zeta2: tail bound not met at digits=" +
                       std::to_string(digits));
}

Complex L_chi_series(const DirichletChar& chi, int digits) {
  if (digits < 20) throw UsageError("L_chi_series: need at least 20 digits");
  int N = chi.modulus();
  mpfr_prec_t prec = prec_for_digits(digits + 10);
  Complex acc(prec);
  for (int r = 1; r < 2 * N; r += 2) {
    if (std::gcd((long)r, (long)N) != 1) continue;  // chi_2 vanishes
    Rat xr(r, 2 * N);
    xr.canonicalize();
    Real z = hurwitz_zeta2(xr, digits + 5);
    Complex cv = chi.value_numeric(r % N, prec);
    acc += Complex(cv.re * z, cv.im * z);
  }
  // (2N^2/pi^2) * (1/(2N)^2) = 1 / (2 pi^2)
  Real scale = Real::of(1L, prec) / (Real::of(2L, prec) * Real::pi(prec).sqr());
  return Complex(acc.re * scale, acc.im * scale);
}

}  // namespace eis
