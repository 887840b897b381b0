#pragma once

#include <json.hpp>

#include "eiscycle/eisen.hpp"

namespace eis {

using nlohmann::json;

json to_json(const CycloElem& x);
CycloElem cyclo_from_json(const json& j);

inline json to_json(const Rat& q) { return rat_str(q); }

inline json to_json(const PointClass& p) { return json::array({p.u, p.v}); }
inline json to_json(const GroupElem& g) {
  return json::array({json::array({g.a, g.b}), json::array({g.c, g.d})});
}

// chain as [{"g": [[a,b],[c,d]], "coeff": ...}] in enumeration order;
// when `dense`, every group element appears (zeros included)
template <class F>
json chain_to_json(const ManinChain<F>& chain, const LevelContext& ctx, bool dense,
                   const F& zero) {
  json out = json::array();
  if (dense) {
    for (int i = 0; i < ctx.group_size(); ++i) {
      auto it = chain.v.c.find(i);
      out.push_back({{"g", to_json(ctx.group()[(size_t)i])},
                     {"coeff", to_json(it == chain.v.c.end() ? zero : it->second)}});
    }
  } else {
    for (const auto& [i, v] : chain.v.c)
      out.push_back({{"g", to_json(ctx.group()[(size_t)i])}, {"coeff", to_json(v)}});
  }
  return out;
}

template <class F>
json divisor_to_json(const CuspDivisor<F>& div, const LevelContext& ctx) {
  json out = json::array();
  for (const auto& [i, v] : div.v.c)
    out.push_back({{"cusp", to_json(ctx.cusps()[(size_t)i])}, {"coeff", to_json(v)}});
  return out;
}

// relation-basis cache, keyed by level and code version
json relation_basis_to_json(const RelationBasis& basis, const std::string& version);
RelationBasis relation_basis_from_json(const json& j, int expect_level,
                                       const std::string& expect_version);

// write-temp-then-rename
void atomic_write(const std::string& path, const std::string& contents);

// loads the cached basis when present and valid, otherwise builds and
// caches it; empty cache_dir disables caching
RelationBasis load_or_build_basis(const LevelContext& ctx, const std::string& cache_dir);

extern const char* const kCodeVersion;

}  // namespace eis
