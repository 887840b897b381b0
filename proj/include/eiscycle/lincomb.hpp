#pragma once

#include <map>
#include <optional>
#include <vector>

#include "eiscycle/cyclotomic.hpp"

namespace eis {

// Sparse linear combination over an exact field F (Rat or CycloElem),
// keyed by an integer index. No explicit zeros are stored.
template <class F>
struct LinComb {
  std::map<int, F> c;

  bool empty() const { return c.empty(); }

  void add(int k, const F& v) {
    auto it = c.find(k);
    if (it == c.end()) {
      if (!lin_is_zero(v)) c.emplace(k, v);
    } else {
      it->second += v;
      if (lin_is_zero(it->second)) c.erase(it);
    }
  }

  // this += s * o
  void add_scaled(const LinComb& o, const F& s) {
    if (lin_is_zero(s)) return;
    for (const auto& [k, v] : o.c) add(k, s * v);
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, v] : o.c) add(k, v);
    return *this;
  }

  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, v] : o.c) add(k, -v);
    return *this;
  }

  LinComb scaled(const F& s) const {
    LinComb out;
    if (!lin_is_zero(s))
      for (const auto& [k, v] : c) out.c.emplace(k, s * v);
    return out;
  }

  bool operator==(const LinComb& o) const { return c == o.c; }
};

// Row echelon store over F with incremental insertion and full
// back-substitution on demand. Pivot columns are the smallest index of
// each inserted row after reduction.
template <class F>
class Echelon {
 public:
  // returns false when the row reduced to zero (was dependent)
  bool insert(LinComb<F> row) {
    reduce(row);
    if (row.empty()) return false;
    int p = row.c.begin()->first;
    F inv = lin_inv(row.c.begin()->second);
    row = row.scaled(inv);
    pivots_.emplace(p, std::move(row));
    rref_done_ = false;
    return true;
  }

  // reduces row in place against the current pivot rows
  void reduce(LinComb<F>& row) const {
    while (!row.empty()) {
      auto it = pivots_.find(row.c.begin()->first);
      if (it == pivots_.end()) {
        // the leading term survives; later terms may still reduce, but
        // leaving them does not change membership tests, so for full
        // reduction callers use reduce_full after finalize()
        break;
      }
      F s = -row.c.begin()->second;
      row.add_scaled(it->second, s);
    }
  }

  // eliminates every pivot column from row, not only the leading one
  void reduce_full(LinComb<F>& row) const {
    LinComb<F> out;
    while (!row.empty()) {
      auto [k, v] = *row.c.begin();
      auto it = pivots_.find(k);
      if (it == pivots_.end()) {
        out.c.emplace(k, v);
        row.c.erase(row.c.begin());
      } else {
        row.add_scaled(it->second, -v);
      }
    }
    row = std::move(out);
  }

  // back-substitute so every pivot row contains no other pivot column;
  // sweeps pivots in decreasing order, so substituted rows are already
  // final and contribute free columns only
  void finalize() {
    if (rref_done_) return;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      auto& row = it->second;
      std::vector<std::pair<int, F>> hits;
      for (auto jt = std::next(row.c.begin()); jt != row.c.end(); ++jt)
        if (pivots_.count(jt->first)) hits.emplace_back(jt->first, jt->second);
      for (auto& [col, coef] : hits) row.add_scaled(pivots_.at(col), -coef);
    }
    rref_done_ = true;
  }

  int rank() const { return (int)pivots_.size(); }
  const std::map<int, LinComb<F>>& pivot_rows() const { return pivots_; }
  bool is_pivot(int col) const { return pivots_.count(col) != 0; }

 private:
  std::map<int, LinComb<F>> pivots_;
  bool rref_done_ = false;
};

// Rank of a family of sparse vectors over F.
template <class F>
int rank_of(const std::vector<LinComb<F>>& rows) {
  Echelon<F> e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

// Solves sum_i x_i rows[i] = target exactly, tracking row operations on
// an identity block. Returns one solution (free variables zero) or
// nullopt when target is outside the span.
template <class F>
std::optional<std::vector<F>> solve_combination(const std::vector<LinComb<F>>& rows,
                                                const LinComb<F>& target, const F& zero,
                                                const F& one) {
  struct Tracked {
    LinComb<F> row;
    LinComb<F> coeffs;  // combination of input rows producing `row`
  };
  std::map<int, Tracked> pivots;
  auto reduce_tracked = [&](Tracked& t) {
    while (!t.row.empty()) {
      auto it = pivots.find(t.row.c.begin()->first);
      if (it == pivots.end()) break;
      F s = -t.row.c.begin()->second;
      t.row.add_scaled(it->second.row, s);
      t.coeffs.add_scaled(it->second.coeffs, s);
    }
  };
  for (int i = 0; i < (int)rows.size(); ++i) {
    Tracked t;
    t.row = rows[i];
    t.coeffs.add(i, one);
    reduce_tracked(t);
    if (t.row.empty()) continue;
    F inv = lin_inv(t.row.c.begin()->second);
    Tracked norm;
    norm.row = t.row.scaled(inv);
    norm.coeffs = t.coeffs.scaled(inv);
    pivots.emplace(norm.row.c.begin()->first, std::move(norm));
  }
  Tracked tgt;
  tgt.row = target;
  reduce_tracked(tgt);
  if (!tgt.row.empty()) return std::nullopt;
  std::vector<F> out((size_t)rows.size(), zero);
  for (const auto& [i, v] : tgt.coeffs.c) out[(size_t)i] = -v;
  return out;
}

}  // namespace eis
