#pragma once

#include <vector>

#include "eiscycle/lincomb.hpp"
#include "eiscycle/modgroup.hpp"

namespace eis {

// Formal combination of Manin generators xi(g), keyed by the group
// enumeration index of the level.
template <class F>
struct ManinChain {
  int level = 0;
  LinComb<F> v;
};

// Combination of cusp classes, keyed by cusp enumeration index.
template <class F>
struct CuspDivisor {
  int level = 0;
  LinComb<F> v;

  F degree(const F& zero) const {
    F acc = zero;
    for (const auto& [k, x] : v.c) acc += x;
    return acc;
  }
};

// The quotient of the free module on the Manin generators by the
// two-term and three-term relations xi(g) + xi(gS) and
// xi(g) + xi(gU) + xi(gU^2). Provides canonical coordinates on the
// quotient: generator index -> rational combination of the free
// (basis) generators.
class RelationBasis {
 public:
  explicit RelationBasis(const LevelContext& ctx);

  // direct construction from precomputed data (cache load)
  RelationBasis(int level, int num_generators, std::vector<int> basis_columns,
                std::vector<LinComb<Rat>> coords);

  int level() const { return level_; }
  int dim() const { return (int)basis_cols_.size(); }
  int num_generators() const { return num_gens_; }
  const std::vector<int>& basis_columns() const { return basis_cols_; }
  // coordinates of xi(g) in the quotient, indexed by position in
  // basis_columns()
  const LinComb<Rat>& coords(int generator_index) const { return coords_[generator_index]; }

  // canonical coordinate vector of a chain; linear, kills exactly the
  // relation submodule
  template <class F>
  std::vector<F> reduce(const ManinChain<F>& chain, const F& zero) const {
    if (chain.level != level_)
      throw UsageError("reduce: chain level " + std::to_string(chain.level) +
                       " does not match basis level " + std::to_string(level_));
    std::vector<F> out((size_t)dim(), zero);
    for (const auto& [g, coeff] : chain.v.c)
      for (const auto& [col, r] : coords_[g].c) out[(size_t)col] += coeff * r;
    return out;
  }

 private:
  int level_;
  int num_gens_;
  std::vector<int> basis_cols_;          // free generator indices, ascending
  std::vector<LinComb<Rat>> coords_;     // per generator, keyed by basis position
};

// linear extension of xi(g) -> (first column of g) - (second column)
template <class F>
CuspDivisor<F> boundary(const ManinChain<F>& chain, const LevelContext& ctx) {
  CuspDivisor<F> out;
  out.level = chain.level;
  for (const auto& [gi, coeff] : chain.v.c) {
    const GroupElem& g = ctx.group()[(size_t)gi];
    out.v.add(ctx.cusp_index(ctx.cusp_of_column(g, Column::first)), coeff);
    out.v.add(ctx.cusp_index(ctx.cusp_of_column(g, Column::second)), -coeff);
  }
  return out;
}

// rank of the boundary map on the relation quotient (= cusps - 1)
int boundary_rank(const LevelContext& ctx, const RelationBasis& basis);

}  // namespace eis
