#pragma once

#include "eiscycle/modgroup.hpp"

namespace eis {

// 1-periodic first Bernoulli function: x - 1/2 on (0,1), 0 at integers.
Rat bern1(const Rat& x);

// f(x, y) = B1(x) B1(y)
Rat f2(const Rat& x, const Rat& y);

// F(P) = -(1/4) (cos(pi x/N) + cos(pi y/N)) / (cos(pi x/N) - cos(pi y/N))
// with representatives chosen so x - y is odd (x in [0,N), y in [0,2N)).
// Value lies in the real subfield of Q(zeta_2N). The value does not
// depend on the representative pair: any two valid choices differ by
// multiples of 2N in each coordinate or by N in both at once, and in
// the latter case both cosines flip sign together.
CycloElem F_closed(const PointClass& P, const LevelContext& ctx);

// F as the (2N)^2-term sum over s in (Z/2NZ)^2 of
// e(s.(HP)^0 / 2N) B1(s1/2N) B1(s2/2N), with H = [[1,1],[-1,1]] acting
// on columns and (HP)^0 the odd-odd lift. Equals F_closed on every
// point.
CycloElem F_fourier(const PointClass& P, const LevelContext& ctx);

// fhat(P) = sum_{s in (Z/2NZ)^2} e(s.P / 2N) f(s/2N) for P mod 2N
CycloElem fhat(int p1, int p2, const LevelContext& ctx);

// sum_{k mod 2d} beta^k B1(x + k/2d), beta = zeta_{2d}^j primitive
CycloElem twisted_sum_direct(int d, int j, const Rat& x);

// the same sum in closed form: beta^{-l}/(beta-1) on (l/2d,(l+1)/2d)
// and beta^{-l}(1+beta)/(2(beta-1)) at x = l/2d
CycloElem twisted_sum_closed(int d, int j, const Rat& x);

}  // namespace eis
