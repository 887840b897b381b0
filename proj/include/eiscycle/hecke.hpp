#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eiscycle/eisfun.hpp"
#include "eiscycle/msym.hpp"

namespace eis {

struct IntMat2 {
  mpz_class a, b, c, d;

  mpz_class det() const { return a * d - b * c; }
  IntMat2 adjugate() const { return {d, -b, -c, a}; }
  IntMat2 operator*(const IntMat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  // representative of {M, -M}: sign fixed by the first nonzero entry
  IntMat2 canon_pm() const;
  bool operator==(const IntMat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator<(const IntMat2& o) const;
  bool congruent_identity_mod2() const {
    return a % 2 != 0 && d % 2 != 0 && b % 2 == 0 && c % 2 == 0;
  }
  std::string str() const;
};

// Weighted family of integer matrices of a common positive determinant m.
struct HeckeFamily {
  mpz_class m;
  std::vector<std::pair<Rat, IntMat2>> terms;
  bool satisfies_Cm = false;
  bool commutes_with_c = false;

  Rat weight_total() const {
    Rat acc = 0;
    for (const auto& [w, M] : terms) acc += w;
    return acc;
  }
};

struct CmReport {
  bool pass = false;
  int num_classes = 0;
  long expected_classes = 0;  // sigma(m) = number of index-m sublattices
  std::string failure;        // offending class / divisor on failure
};

// All integer matrices of determinant l with a > b >= 0 and d > c >= 0,
// each with weight 1. Construction verifies the coset condition and
// aborts on failure.
HeckeFamily heilbronn_family(long l);

// identity family at m = 1
HeckeFamily identity_family();

// Groups terms by right SL2(Z) coset (column Hermite normal form of the
// column lattice) and checks, in the free module on P^1(Q), that each
// class satisfies sum u_M (M(inf) - M(0)) = (inf) - (0); also checks
// that the number of classes equals the number of index-m sublattices.
CmReport verify_Cm(const HeckeFamily& fam);

// (1/2) sum u_M ([M] + [cMc]) with c = diag(-1, 1), collected as a
// weighted multiset mod ±1. Idempotent; re-verifies C_m and
// c-commutation.
HeckeFamily symmetrize_c(const HeckeFamily& fam);

// whether sum u_M [Mc] == sum u_M [cM] as weighted multisets mod ±1
bool commutes_with_c(const HeckeFamily& fam);

inline long residue(const mpz_class& x, int N) {
  return (long)mpz_fdiv_ui(x.get_mpz_t(), (unsigned long)N);
}

// T_m xi(g) = sum u_M xi(g (M mod N)); requires m == 1 mod N so the
// reductions land in SL2(Z/NZ)
template <class F>
ManinChain<F> hecke_act(const HeckeFamily& fam, const ManinChain<F>& chain,
                        const LevelContext& ctx) {
  if (residue(fam.m, ctx.N()) != 1)
    throw UsageError("hecke_act: determinant " + fam.m.get_str() +
                     " is not 1 mod " + std::to_string(ctx.N()));
  std::vector<int> reduced;  // group index of each family matrix
  reduced.reserve(fam.terms.size());
  for (const auto& [w, M] : fam.terms) {
    GroupElem g = ctx.canon_mat(residue(M.a, ctx.N()), residue(M.b, ctx.N()),
                                residue(M.c, ctx.N()), residue(M.d, ctx.N()));
    reduced.push_back(ctx.group_index(g));
  }
  ManinChain<F> out;
  out.level = chain.level;
  for (const auto& [gi, coeff] : chain.v.c) {
    const GroupElem& g = ctx.group()[(size_t)gi];
    for (size_t t = 0; t < fam.terms.size(); ++t) {
      const GroupElem& gm = ctx.group()[(size_t)reduced[t]];
      out.v.add(ctx.group_index(ctx.mul(g, gm)), coeff * fam.terms[t].first);
    }
  }
  return out;
}

// Outcome of a pointwise identity sweep: grid points where the identity
// fails, split by whether any Bernoulli argument hit an integer there.
struct IdentityReport {
  bool pass = false;              // no failures off the jump set
  int points_checked = 0;
  std::vector<std::pair<int, int>> failures_off_jump_set;
  std::vector<std::pair<int, int>> failures_on_jump_set;
};

// sum_L u_L f(sL) = l f(s) + f(ls) for s on the grid (1/2N)Z^2 mod 1,
// row-vector action s -> sL
IdentityReport check_function_identity_f(const HeckeFamily& fam, const LevelContext& ctx);

// sum_L u_L fhat(adj(L) P) = l fhat(lP) + fhat(P) for P the odd-odd
// lifts of (Z/NZ)^2
IdentityReport check_function_identity_fhat(const HeckeFamily& fam, const LevelContext& ctx);

struct ThetaReport {
  bool c_commutes = false;
  // X = theta H - H adj(theta) is invariant under left multiplication
  // by S (equivalently, X is a left multiple of [1] + [S])
  bool h_relation = false;
  bool support_identity_mod2 = false;
  bool pass() const { return c_commutes && h_relation && support_identity_mod2; }
  std::string detail;
};

ThetaReport check_theta_relations(const HeckeFamily& fam);

// sum_L u_L F(L P) = F(P) + l F(l P) over all P in (Z/NZ)^2, L acting
// mod N on columns. Returns failing points.
struct FIdentityReport {
  bool pass = false;
  std::vector<PointClass> failures;
};
FIdentityReport check_F_identity(const HeckeFamily& theta, const LevelContext& ctx);

// Candidate theta family file: one term per line, "weight a b c d",
// weight a rational string. The determinant must be positive and common
// to all lines.
HeckeFamily load_theta_file(const std::string& path);
void save_theta_file(const HeckeFamily& fam, const std::string& path);

// Searches for a family of determinant l supported on matrices
// congruent to the identity mod 2 with entries bounded by `bound`,
// satisfying C_l, c-commutation and the S-invariance of
// theta H - H adj(theta) (a linear system over Q). Returns nullopt when
// the system is infeasible at this bound.
std::optional<HeckeFamily> search_theta_family(long l, long bound);

}  // namespace eis
