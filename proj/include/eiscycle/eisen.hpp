#pragma once

#include <optional>

#include "eiscycle/characters.hpp"
#include "eiscycle/hecke.hpp"
#include "eiscycle/lseries.hpp"
#include "eiscycle/msym.hpp"

namespace eis {

using EisChain = ManinChain<CycloElem>;
using EisDivisor = CuspDivisor<CycloElem>;

// E_P = sum_gamma F(gamma^{-1} P) xi(gamma), coefficients in `field`
// (any field containing Q(zeta_2N)). Rejects P of order < N unless
// allow_low_order: the structural statements quantify over order-N
// classes only, though the sum itself is defined for every P.
EisChain eisenstein_cycle(const PointClass& P, const LevelContext& ctx,
                          const FieldPtr& field, bool allow_low_order = false);

inline EisChain eisenstein_cycle(const PointClass& P, const LevelContext& ctx,
                                 bool allow_low_order = false) {
  return eisenstein_cycle(P, ctx, ctx.field2N(), allow_low_order);
}

// reduce(T_l E_P) == (l+1) reduce(E_P), exact; l must be an odd prime
// congruent to 1 mod N
bool verify_hecke_eigen(const PointClass& P, long l, const LevelContext& ctx,
                        const RelationBasis& basis);

// delta(E_P) computed both as the boundary of the chain and as the
// collapsed single sum 2 sum_gamma F(gamma^{-1} P) (gamma Pinf); the
// two must agree (internal assertion).
EisDivisor boundary_eisenstein_direct(const PointClass& P, const LevelContext& ctx);

enum class MuDomain { full, half };

// The closed form of delta(E_P): each unit class mu contributes
// 2N (F(mu Pinf) + 1/4) at the cusp class (mu^{-1} P), minus (N/2)
// at every cusp. `mu_domain` selects whether mu runs over all of
// (Z/NZ)^* or over (Z/NZ)^*/{±1}; only the half domain can produce a
// degree-zero divisor. The coefficient is attached to (mu^{-1} P): the
// term-collapse computation pins the coefficient at Q to the unit
// carrying P to mu Q, and the two readings differ once some unit is not
// ±self-inverse (first at N = 7).
EisDivisor boundary_eisenstein_theorem(const PointClass& P, const LevelContext& ctx,
                                       MuDomain mu_domain);

struct LValue {
  DirichletChar chi;
  CycloElem exact;  // in Q(zeta_lcm(2N, e))
};

// L(chi) = (1/2) sum_mu chi(mu) / (1 - cos(pi mu0 / N)), mu0 the odd
// representative (mu in [1,N], plus N if even); exact in the compositum
// field of order lcm(2N, e).
LValue L_chi_exact(const DirichletChar& chi, const LevelContext& ctx);

// field holding both Q(zeta_2N) and all character values
FieldPtr compositum_field(const LevelContext& ctx);

// normalization * sum_alpha sum_chi (chi(alpha)/L(chi))
//   (E_{alpha g Pinf} - E_{alpha g P0}),
// coefficients in the compositum field.
EisChain retraction_closed(const GroupElem& g, const LevelContext& ctx,
                           const Rat& normalization);

struct RetractionReport {
  bool pass = false;
  Rat normalization;             // determined scalar c
  std::string constant_relation; // c vs 1/(2 N phi(N))
  bool boundary_killed = false;  // delta(R(xi(g))) == 0 for all g
  bool fixes_kernel = false;     // R(x) == x on chains with delta(x) = 0
  std::string detail;
};

// Solves for the scalar c with delta(retraction_closed(g, c)) =
// delta(xi(g)) for every generator, asserts consistency, then checks
// R(xi(g)) = xi(g) - E_c(g) has zero boundary and that R fixes
// zero-boundary chains. Throws VerifyError when no consistent c exists.
RetractionReport verify_retraction(const LevelContext& ctx);

struct SpanReport {
  bool pass = false;
  int rank_reduced = 0;       // rank { reduce(E_P) : P in C_N }
  int rank_boundary = 0;      // rank { delta(E_P) }
  bool sum_reduces_to_zero = false;
  int expected_rank = 0;      // |C_N| - 1
};

SpanReport span_checks(const LevelContext& ctx, const RelationBasis& basis);

}  // namespace eis
