#pragma once

#include "eiscycle/bigfloat.hpp"
#include "eiscycle/characters.hpp"

namespace eis {

// zeta(2, x) = sum_{n >= 0} 1/(n+x)^2 for rational x in (0, 1], with a
// guaranteed absolute error below 10^-(digits+5). Direct summation of
// the head plus the integral of the tail and Euler-Maclaurin
// corrections; the remainder after the last correction term is bounded
// in magnitude by the first omitted term (the summand is completely
// monotone), which is driven under the target. Throws PrecisionError if
// that bound cannot be met.
Real hurwitz_zeta2(const Rat& x, int digits);

// (2N^2/pi^2) * L(chi_2, 2) where chi_2 is the mod-2N character
// agreeing with chi on odd integers, and
// L(chi_2, 2) = (1/(2N)^2) sum_r chi_2(r) zeta(2, r/2N).
Complex L_chi_series(const DirichletChar& chi, int digits);

}  // namespace eis
