#include "eiscycle/msym.hpp"

#include <set>

namespace eis {

RelationBasis::RelationBasis(const LevelContext& ctx) : level_(ctx.N()) {
  num_gens_ = ctx.group_size();

  Echelon<Rat> ech;
  std::set<std::vector<std::pair<int, Rat>>> seen;
  auto insert_row = [&](LinComb<Rat> row) {
    std::vector<std::pair<int, Rat>> key(row.c.begin(), row.c.end());
    if (!seen.insert(key).second) return;
    ech.insert(std::move(row));
  };

  for (int i = 0; i < num_gens_; ++i) {
    const GroupElem& g = ctx.group()[(size_t)i];
    LinComb<Rat> two;
    two.add(i, 1);
    two.add(ctx.group_index(ctx.mul(g, ctx.S())), 1);
    insert_row(std::move(two));

    GroupElem gU = ctx.mul(g, ctx.U());
    GroupElem gUU = ctx.mul(gU, ctx.U());
    LinComb<Rat> three;
    three.add(i, 1);
    three.add(ctx.group_index(gU), 1);
    three.add(ctx.group_index(gUU), 1);
    insert_row(std::move(three));
  }
  ech.finalize();

  for (int col = 0; col < num_gens_; ++col)
    if (!ech.is_pivot(col)) basis_cols_.push_back(col);

  std::vector<int> pos(num_gens_, -1);
  for (int i = 0; i < (int)basis_cols_.size(); ++i) pos[basis_cols_[i]] = i;

  coords_.resize((size_t)num_gens_);
  for (int g = 0; g < num_gens_; ++g) {
    if (pos[g] >= 0) {
      coords_[g].add(pos[g], 1);
    } else {
      // pivot row (finalized): x_g = -sum over free columns
      const LinComb<Rat>& row = ech.pivot_rows().at(g);
      for (const auto& [col, r] : row.c) {
        if (col == g) continue;
        if (pos[col] < 0) throw InternalError("non-free column survived RREF");
        coords_[g].add(pos[col], -r);
      }
    }
  }

  if ((long)dim() != ctx.expected_dim())
    throw InternalError("relation quotient dimension " + std::to_string(dim()) +
                        " != 2g + c - 1 = " + std::to_string(ctx.expected_dim()));
}

RelationBasis::RelationBasis(int level, int num_generators, std::vector<int> basis_columns,
                             std::vector<LinComb<Rat>> coords)
    : level_(level),
      num_gens_(num_generators),
      basis_cols_(std::move(basis_columns)),
      coords_(std::move(coords)) {
  if ((int)coords_.size() != num_gens_)
    throw UsageError("relation basis data: coordinate table size mismatch");
}

int boundary_rank(const LevelContext& ctx, const RelationBasis& basis) {
  std::vector<LinComb<Rat>> rows;
  rows.reserve((size_t)basis.dim());
  for (int col : basis.basis_columns()) {
    ManinChain<Rat> chain;
    chain.level = ctx.N();
    chain.v.add(col, 1);
    rows.push_back(boundary(chain, ctx).v);
  }
  return rank_of(rows);
}

}  // namespace eis
