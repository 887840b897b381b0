#include "eiscycle/eisfun.hpp"

namespace eis {

Rat bern1(const Rat& x) {
  Rat f = rat_frac(x);
  if (f == 0) return Rat(0);
  return f - Rat(1, 2);
}

Rat f2(const Rat& x, const Rat& y) { return bern1(x) * bern1(y); }

CycloElem F_closed(const PointClass& P, const LevelContext& ctx) {
  int N = ctx.N();
  long x = P.u % N;
  long y = P.v % N;
  if ((x - y) % 2 == 0) y += N;
  CycloElem cx = cos_pi_over(ctx.field2N(), x);
  CycloElem cy = cos_pi_over(ctx.field2N(), y);
  CycloElem den = cx - cy;
  if (den.is_zero())
    throw InternalError("cos(pi x/N) == cos(pi y/N) with x - y odd");
  return (cx + cy) * den.inv() * Rat(-1, 4);
}

CycloElem F_fourier(const PointClass& P, const LevelContext& ctx) {
  int N = ctx.N();
  PointN HP{(P.u + P.v) % N, (((-P.u + P.v) % N) + N) % N};
  Lift0 w = lift0(HP, N);
  const FieldPtr& f = ctx.field2N();
  CycloElem acc = CycloElem::zero(f);
  for (int s1 = 1; s1 < 2 * N; ++s1) {
    Rat b1 = bern1(Rat(s1, 2 * N));
    if (b1 == 0) continue;
    for (int s2 = 1; s2 < 2 * N; ++s2) {
      Rat b2 = bern1(Rat(s2, 2 * N));
      if (b2 == 0) continue;
      acc += CycloElem::root_of_unity(f, (long)s1 * w.u + (long)s2 * w.v) * (b1 * b2);
    }
  }
  return acc;
}

CycloElem fhat(int p1, int p2, const LevelContext& ctx) {
  int N = ctx.N();
  const FieldPtr& f = ctx.field2N();
  CycloElem acc = CycloElem::zero(f);
  for (int s1 = 1; s1 < 2 * N; ++s1) {
    Rat b1 = bern1(Rat(s1, 2 * N));
    if (b1 == 0) continue;
    for (int s2 = 1; s2 < 2 * N; ++s2) {
      Rat b2 = bern1(Rat(s2, 2 * N));
      if (b2 == 0) continue;
      acc += CycloElem::root_of_unity(f, (long)s1 * p1 + (long)s2 * p2) * (b1 * b2);
    }
  }
  return acc;
}

namespace {

void check_primitive(int d, int j) {
  if (d < 1) throw UsageError("twisted sum: d must be positive");
  if (gcd_long(j, 2L * d) != 1)
    throw UsageError("twisted sum: beta exponent must be coprime to 2d");
}

}  // namespace

CycloElem twisted_sum_direct(int d, int j, const Rat& x) {
  check_primitive(d, j);
  FieldPtr f = CycloField::of(2 * (unsigned)d);
  CycloElem acc = CycloElem::zero(f);
  for (int k = 0; k < 2 * d; ++k) {
    Rat b = bern1(x + Rat(k, 2 * d));
    if (b == 0) continue;
    acc += CycloElem::root_of_unity(f, (long)j * k) * b;
  }
  return acc;
}

CycloElem twisted_sum_closed(int d, int j, const Rat& x) {
  check_primitive(d, j);
  FieldPtr f = CycloField::of(2 * (unsigned)d);
  Rat t = rat_frac(x);       // 1-periodic
  Rat scaled = t * Rat(2 * d);
  mpz_class lz = rat_floor(scaled);
  long l = lz.get_si();
  CycloElem beta = CycloElem::root_of_unity(f, j);
  CycloElem beta_ml = CycloElem::root_of_unity(f, -(long)j * l);
  CycloElem den_inv = (beta - CycloElem::one(f)).inv();
  if (is_integer(scaled)) {
    // midpoint of the jump: beta^{-l} (1 + beta) / (2 (beta - 1))
    return beta_ml * (CycloElem::one(f) + beta) * den_inv * Rat(1, 2);
  }
  return beta_ml * den_inv;
}

}  // namespace eis
