#include "eiscycle/kernels.hpp"

#include <map>
#include <mutex>

namespace eis {

namespace {

std::vector<PointClass> canonical_classes(const LevelContext& ctx) {
  std::vector<PointClass> out;
  int N = ctx.N();
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) {
      PointClass p = ctx.canon(u, v);
      if (p.u == u && p.v == v) out.push_back(p);
    }
  return out;
}

}  // namespace

std::vector<CycloElem> f_closed_table_serial(const LevelContext& ctx) {
  int N = ctx.N();
  std::vector<CycloElem> table((size_t)(N * N), CycloElem::zero(ctx.field2N()));
  for (const PointClass& p : canonical_classes(ctx))
    table[(size_t)(p.u * N + p.v)] = F_closed(p, ctx);
  return table;
}

std::vector<CycloElem> f_closed_table_parallel(const LevelContext& ctx) {
  int N = ctx.N();
  std::vector<PointClass> classes = canonical_classes(ctx);
  std::vector<CycloElem> table((size_t)(N * N), CycloElem::zero(ctx.field2N()));
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < classes.size(); ++i) {
    const PointClass& p = classes[i];
    table[(size_t)(p.u * N + p.v)] = F_closed(p, ctx);
  }
  return table;
}

std::vector<CycloElem> f_fourier_table_serial(const LevelContext& ctx) {
  int N = ctx.N();
  std::vector<CycloElem> table((size_t)(N * N), CycloElem::zero(ctx.field2N()));
  for (const PointClass& p : canonical_classes(ctx))
    table[(size_t)(p.u * N + p.v)] = F_fourier(p, ctx);
  return table;
}

std::vector<CycloElem> f_fourier_table_parallel(const LevelContext& ctx) {
  int N = ctx.N();
  std::vector<PointClass> classes = canonical_classes(ctx);
  std::vector<CycloElem> table((size_t)(N * N), CycloElem::zero(ctx.field2N()));
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < classes.size(); ++i) {
    const PointClass& p = classes[i];
    table[(size_t)(p.u * N + p.v)] = F_fourier(p, ctx);
  }
  return table;
}

const std::vector<CycloElem>& f_closed_class_table(const LevelContext& ctx) {
  static std::mutex mu;
  static std::map<int, std::vector<CycloElem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(ctx.N());
  if (it == cache.end())
    it = cache.emplace(ctx.N(), f_closed_table_parallel(ctx)).first;
  return it->second;
}

namespace {

ManinChain<CycloElem> cycle_for(const PointClass& P, const LevelContext& ctx,
                                const std::vector<CycloElem>& ftab) {
  ManinChain<CycloElem> out;
  out.level = ctx.N();
  for (int i = 0; i < ctx.group_size(); ++i) {
    PointClass q = ctx.act(ctx.inverse(ctx.group()[(size_t)i]), P);
    const CycloElem& val = ftab[(size_t)(q.u * ctx.N() + q.v)];
    if (!val.is_zero()) out.v.add(i, val);
  }
  return out;
}

}  // namespace

std::vector<ManinChain<CycloElem>> eisenstein_cycles_serial(const LevelContext& ctx) {
  const auto& ftab = f_closed_class_table(ctx);
  std::vector<ManinChain<CycloElem>> out(ctx.cusps().size());
  for (size_t i = 0; i < ctx.cusps().size(); ++i)
    out[i] = cycle_for(ctx.cusps()[i], ctx, ftab);
  return out;
}

std::vector<ManinChain<CycloElem>> eisenstein_cycles_parallel(const LevelContext& ctx) {
  const auto& ftab = f_closed_class_table(ctx);
  std::vector<ManinChain<CycloElem>> out(ctx.cusps().size());
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < ctx.cusps().size(); ++i)
    out[i] = cycle_for(ctx.cusps()[i], ctx, ftab);
  return out;
}

ConsistencySweep f_consistency_sweep(const LevelContext& ctx, bool parallel) {
  ConsistencySweep sweep;
  std::vector<CycloElem> closed = parallel ? f_closed_table_parallel(ctx)
                                           : f_closed_table_serial(ctx);
  std::vector<CycloElem> fourier = parallel ? f_fourier_table_parallel(ctx)
                                            : f_fourier_table_serial(ctx);
  int N = ctx.N();
  for (const PointClass& p : canonical_classes(ctx)) {
    ++sweep.points;
    size_t k = (size_t)(p.u * N + p.v);
    if (!(closed[k] == fourier[k])) sweep.fourier_mismatches.push_back(p);
    // F(P) + F(SP) == 0, and F evaluated at the negated representative
    // (not re-canonicalized) equals F(P)
    PointClass sp = ctx.act(ctx.S(), p);
    CycloElem sum = closed[k] + closed[(size_t)(sp.u * N + sp.v)];
    PointClass neg{(N - p.u) % N, (N - p.v) % N};
    if (!sum.is_zero() || !(F_closed(neg, ctx) == closed[k]))
      sweep.symmetry_failures.push_back(p);
  }
  sweep.pass = sweep.fourier_mismatches.empty() && sweep.symmetry_failures.empty();
  return sweep;
}

}  // namespace eis
