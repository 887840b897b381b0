#include "eiscycle/eisen.hpp"

#include <numeric>
#include <sstream>

#include "eiscycle/kernels.hpp"

namespace eis {

EisChain eisenstein_cycle(const PointClass& P, const LevelContext& ctx,
                          const FieldPtr& field, bool allow_low_order) {
  if (!allow_low_order && ctx.point_order(P) != ctx.N())
    throw UsageError("eisenstein_cycle: point (" + std::to_string(P.u) + "," +
                     std::to_string(P.v) + ") has order " +
                     std::to_string(ctx.point_order(P)) + " < N; pass allow_low_order");
  const auto& ftab = f_closed_class_table(ctx);
  EisChain out;
  out.level = ctx.N();
  for (int i = 0; i < ctx.group_size(); ++i) {
    PointClass q = ctx.act(ctx.inverse(ctx.group()[(size_t)i]), P);
    const CycloElem& val = ftab[(size_t)(q.u * ctx.N() + q.v)];
    if (val.is_zero()) continue;
    out.v.add(i, field->order() == ctx.field2N()->order() ? val : val.embedded(field));
  }
  return out;
}

bool verify_hecke_eigen(const PointClass& P, long l, const LevelContext& ctx,
                        const RelationBasis& basis) {
  if (l % 2 == 0 || l % ctx.N() != 1)
    throw UsageError("verify_hecke_eigen: need an odd prime l == 1 mod N, got " +
                     std::to_string(l));
  HeckeFamily fam = heilbronn_family(l);
  EisChain e = eisenstein_cycle(P, ctx);
  EisChain te = hecke_act(fam, e, ctx);
  CycloElem zero = CycloElem::zero(ctx.field2N());
  std::vector<CycloElem> lhs = basis.reduce(te, zero);
  std::vector<CycloElem> rhs = basis.reduce(e, zero);
  for (size_t i = 0; i < lhs.size(); ++i)
    if (!(lhs[i] == rhs[i] * Rat(l + 1))) return false;
  return true;
}

EisDivisor boundary_eisenstein_direct(const PointClass& P, const LevelContext& ctx) {
  EisChain e = eisenstein_cycle(P, ctx, ctx.field2N(), true);
  EisDivisor via_chain = boundary(e, ctx);

  const auto& ftab = f_closed_class_table(ctx);
  EisDivisor single;
  single.level = ctx.N();
  for (int i = 0; i < ctx.group_size(); ++i) {
    const GroupElem& g = ctx.group()[(size_t)i];
    PointClass q = ctx.act(ctx.inverse(g), P);
    const CycloElem& val = ftab[(size_t)(q.u * ctx.N() + q.v)];
    if (val.is_zero()) continue;
    single.v.add(ctx.cusp_index(ctx.cusp_of_column(g, Column::first)), val + val);
  }
  if (!(single.v == via_chain.v))
    throw InternalError("boundary of E_P: chain boundary and collapsed sum disagree");
  return via_chain;
}

EisDivisor boundary_eisenstein_theorem(const PointClass& P, const LevelContext& ctx,
                                       MuDomain mu_domain) {
  int N = ctx.N();
  const FieldPtr& f = ctx.field2N();
  EisDivisor out;
  out.level = N;

  std::vector<long> units;
  for (long mu = 1; mu < N; ++mu)
    if (std::gcd(mu, (long)N) == 1) units.push_back(mu);
  if (mu_domain == MuDomain::half) {
    std::vector<long> half;
    for (long mu : units)
      if (mu <= N - mu) half.push_back(mu);
    units = half;
  }

  Rat quarter(1, 4);
  for (long mu : units) {
    CycloElem coef = (F_closed(ctx.canon((int)mu, 0), ctx) + CycloElem::from_rat(f, quarter)) *
                     Rat(2 * N);
    long mu_inv = 0;
    for (long t = 1; t < N; ++t)
      if (t * mu % N == 1) {
        mu_inv = t;
        break;
      }
    out.v.add(ctx.cusp_index(ctx.scalar_mul(mu_inv, P)), coef);
  }
  CycloElem half_n = CycloElem::from_rat(f, Rat(-N, 2));
  for (int i = 0; i < ctx.cusp_count(); ++i) out.v.add(i, half_n);
  return out;
}

FieldPtr compositum_field(const LevelContext& ctx) {
  long e = unit_group_exponent(ctx.N());
  return CycloField::of((unsigned)std::lcm(2L * ctx.N(), e));
}

LValue L_chi_exact(const DirichletChar& chi, const LevelContext& ctx) {
  if (!chi.is_even()) throw UsageError("L_chi_exact: character must be even");
  int N = ctx.N();
  FieldPtr big = compositum_field(ctx);
  CycloElem acc = CycloElem::zero(big);
  CycloElem one2N = CycloElem::one(ctx.field2N());
  for (long mu = 1; mu < N; ++mu) {
    if (std::gcd(mu, (long)N) != 1) continue;
    long mu0 = mu % 2 == 1 ? mu : mu + N;
    CycloElem den = (one2N - cos_pi_over(ctx.field2N(), mu0)).inv();
    acc += chi.value(mu, big) * den.embedded(big);
  }
  LValue out{chi, acc * Rat(1, 2)};
  if (out.exact.is_zero()) throw VerifyError("L(chi) vanished");
  return out;
}

namespace {

// Phi(Q) = sum_alpha sum_chi (chi(alpha)/L(chi)) E_{alpha Q}, one entry
// per cusp class. The closed retraction combination for g is then
// Phi(g Pinf) - Phi(g P0), so the table turns the per-generator sweep
// into two lookups.
std::vector<EisChain> retraction_phi_table(const LevelContext& ctx) {
  int N = ctx.N();
  FieldPtr big = compositum_field(ctx);
  auto chars = enumerate_even_chars(N);
  std::vector<CycloElem> inv_L;
  inv_L.reserve(chars.size());
  for (const auto& chi : chars) inv_L.push_back(L_chi_exact(chi, ctx).exact.inv());

  std::vector<EisChain> cycles(ctx.cusps().size());
  for (size_t i = 0; i < ctx.cusps().size(); ++i)
    cycles[i] = eisenstein_cycle(ctx.cusps()[i], ctx, big);

  std::vector<EisChain> phi(ctx.cusps().size());
#pragma omp parallel for schedule(dynamic)
  for (size_t qi = 0; qi < ctx.cusps().size(); ++qi) {
    EisChain acc;
    acc.level = N;
    for (long alpha = 1; alpha < N; ++alpha) {
      if (std::gcd(alpha, (long)N) != 1) continue;
      int target = ctx.cusp_index(ctx.scalar_mul(alpha, ctx.cusps()[qi]));
      CycloElem w = CycloElem::zero(big);
      for (size_t ci = 0; ci < chars.size(); ++ci)
        w += chars[ci].value(alpha, big) * inv_L[ci];
      acc.v.add_scaled(cycles[(size_t)target].v, w);
    }
    phi[qi] = std::move(acc);
  }
  return phi;
}

EisChain retraction_from_phi(const GroupElem& g, const LevelContext& ctx,
                             const std::vector<EisChain>& phi, const Rat& normalization) {
  EisChain out;
  out.level = ctx.N();
  out.v = phi[(size_t)ctx.cusp_index(ctx.cusp_of_column(g, Column::first))].v;
  out.v -= phi[(size_t)ctx.cusp_index(ctx.cusp_of_column(g, Column::second))].v;
  if (normalization != 1) {
    EisChain scaled;
    scaled.level = out.level;
    for (auto& [k, v] : out.v.c) scaled.v.add(k, v * normalization);
    return scaled;
  }
  return out;
}

}  // namespace

EisChain retraction_closed(const GroupElem& g, const LevelContext& ctx,
                           const Rat& normalization) {
  return retraction_from_phi(g, ctx, retraction_phi_table(ctx), normalization);
}

RetractionReport verify_retraction(const LevelContext& ctx) {
  int N = ctx.N();
  FieldPtr big = compositum_field(ctx);
  RetractionReport rep;
  std::vector<EisChain> phi = retraction_phi_table(ctx);

  std::optional<Rat> c;
  std::ostringstream detail;
  for (int gi = 0; gi < ctx.group_size(); ++gi) {
    const GroupElem& g = ctx.group()[(size_t)gi];
    EisChain raw = retraction_from_phi(g, ctx, phi, Rat(1));
    EisDivisor db = boundary(raw, ctx);
    // target: (g Pinf) - (g P0)
    int k_inf = ctx.cusp_index(ctx.cusp_of_column(g, Column::first));
    int k_0 = ctx.cusp_index(ctx.cusp_of_column(g, Column::second));
    if (k_inf == k_0) throw InternalError("column cusps of a group element coincide");
    auto it = db.v.c.find(k_inf);
    if (it == db.v.c.end() || it->second.is_zero())
      throw VerifyError("retraction: boundary misses the target cusp at g=" + g.str());
    CycloElem lambda = it->second;  // c = 1/lambda must be rational
    if (!lambda.is_rational())
      throw VerifyError("retraction: scale factor is irrational at g=" + g.str());
    Rat cg = Rat(1) / lambda.rat_value();
    // check c * delta(raw) == (gPinf) - (gP0) in full
    EisDivisor target;
    target.level = N;
    target.v.add(k_inf, CycloElem::one(big));
    target.v.add(k_0, -CycloElem::one(big));
    LinComb<CycloElem> scaled;
    for (const auto& [k, v] : db.v.c) scaled.add(k, v * cg);
    if (!(scaled == target.v))
      throw VerifyError("retraction: no scalar matches the full boundary at g=" + g.str());
    if (!c) {
      c = cg;
    } else if (*c != cg) {
      throw VerifyError("retraction: inconsistent normalization " + rat_str(*c) + " vs " +
                        rat_str(cg) + " at g=" + g.str());
    }
  }
  rep.normalization = *c;
  {
    Rat paper(1, 2L * N * (long)(enumerate_even_chars(N).size() * 2));
    paper.canonicalize();
    Rat ratio = *c / paper;
    detail << "c = " << rat_str(*c) << " = " << rat_str(ratio) << " * 1/(2N phi(N))";
    rep.constant_relation = detail.str();
  }

  // R(xi(g)) = xi(g) - E_c(g): zero boundary, and reduce-consistency of
  // the two descriptions is implied; check boundary vanishing per
  // generator
  rep.boundary_killed = true;
  for (int gi = 0; gi < ctx.group_size(); ++gi) {
    const GroupElem& g = ctx.group()[(size_t)gi];
    EisChain r = retraction_from_phi(g, ctx, phi, *c);
    EisChain x;
    x.level = N;
    x.v.add(gi, CycloElem::one(big));
    x.v -= r.v;
    EisDivisor d = boundary(x, ctx);
    if (!d.v.empty()) {
      rep.boundary_killed = false;
      break;
    }
  }

  // R extends linearly; on a chain with zero boundary the subtracted
  // part is the retraction image of the zero divisor, hence zero. Check
  // on xi(g) + xi(gS) chains.
  rep.fixes_kernel = true;
  auto apply_R = [&](const EisChain& x) {
    EisChain out = x;
    for (const auto& [gi, coeff] : x.v.c) {
      EisChain r = retraction_from_phi(ctx.group()[(size_t)gi], ctx, phi, *c);
      for (auto& [k, v] : r.v.c) out.v.add(k, -(v * coeff));
    }
    return out;
  };
  for (int trial = 0; trial < 4 && rep.fixes_kernel; ++trial) {
    int gi = (trial * 7919) % ctx.group_size();
    const GroupElem& g = ctx.group()[(size_t)gi];
    EisChain x;
    x.level = N;
    x.v.add(gi, CycloElem::one(big));
    x.v.add(ctx.group_index(ctx.mul(g, ctx.S())), CycloElem::one(big));
    if (!boundary(x, ctx).v.empty()) throw InternalError("xi(g)+xi(gS) has boundary");
    EisChain rx = apply_R(x);
    if (!(rx.v == x.v)) rep.fixes_kernel = false;
  }

  rep.pass = rep.boundary_killed && rep.fixes_kernel;
  return rep;
}

SpanReport span_checks(const LevelContext& ctx, const RelationBasis& basis) {
  SpanReport rep;
  rep.expected_rank = ctx.cusp_count() - 1;
  CycloElem zero = CycloElem::zero(ctx.field2N());

  std::vector<LinComb<CycloElem>> reduced_rows, boundary_rows;
  EisChain total;
  total.level = ctx.N();
  for (const PointClass& P : ctx.cusps()) {
    EisChain e = eisenstein_cycle(P, ctx);
    total.v += e.v;
    std::vector<CycloElem> coords = basis.reduce(e, zero);
    LinComb<CycloElem> row;
    for (int i = 0; i < (int)coords.size(); ++i)
      if (!coords[i].is_zero()) row.c.emplace(i, coords[i]);
    reduced_rows.push_back(std::move(row));
    boundary_rows.push_back(boundary(e, ctx).v);
  }
  rep.rank_reduced = rank_of(reduced_rows);
  rep.rank_boundary = rank_of(boundary_rows);

  std::vector<CycloElem> tot = basis.reduce(total, zero);
  rep.sum_reduces_to_zero = true;
  for (const auto& x : tot)
    if (!x.is_zero()) rep.sum_reduces_to_zero = false;

  rep.pass = rep.rank_reduced == rep.expected_rank &&
             rep.rank_boundary == rep.expected_rank && rep.sum_reduces_to_zero;
  return rep;
}

}  // namespace eis
