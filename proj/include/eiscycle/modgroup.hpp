#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "eiscycle/cyclotomic.hpp"
#include "eiscycle/numbers.hpp"

namespace eis {

// Point of (Z/NZ)^2, column-vector convention: group elements act on
// the left.
struct PointN {
  int u = 0, v = 0;
  bool operator==(const PointN& o) const { return u == o.u && v == o.v; }
};

// Canonical representative of {P, -P}: the lexicographically smaller of
// the two coordinate pairs.
struct PointClass {
  int u = 0, v = 0;
  bool operator==(const PointClass& o) const { return u == o.u && v == o.v; }
  bool operator<(const PointClass& o) const {
    return u != o.u ? u < o.u : v < o.v;
  }
};

// Element of SL2(Z/NZ)/{±1}, stored as the lexicographically smaller of
// the two sign choices of (a, b, c, d).
struct GroupElem {
  int a = 1, b = 0, c = 0, d = 1;
  bool operator==(const GroupElem& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator<(const GroupElem& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    if (c != o.c) return c < o.c;
    return d < o.d;
  }
  std::string str() const;
};

// The unique lift of a point to (Z/2NZ)^2 that is congruent to it mod N
// and to (1,1) mod 2 (N odd).
struct Lift0 {
  int u = 0, v = 0;  // residues mod 2N, both odd
};

enum class Column { first, second };

// Everything enumerated once per level: the projective group, the cusp
// set, and the ambient cyclotomic field of order 2N. Immutable after
// construction; lookups are pure.
class LevelContext {
 public:
  explicit LevelContext(int N);

  int N() const { return N_; }
  const FieldPtr& field2N() const { return f2N_; }

  const std::vector<GroupElem>& group() const { return group_; }
  int group_size() const { return (int)group_.size(); }
  int group_index(const GroupElem& g) const;

  const std::vector<PointClass>& cusps() const { return cusps_; }
  int cusp_count() const { return (int)cusps_.size(); }
  // -1 when the class has order < N
  int cusp_index(const PointClass& p) const;

  PointClass canon(int u, int v) const;
  PointClass canon(const PointN& p) const { return canon(p.u, p.v); }
  GroupElem canon_mat(long a, long b, long c, long d) const;

  GroupElem mul(const GroupElem& g, const GroupElem& h) const;
  GroupElem inverse(const GroupElem& g) const;
  PointClass act(const GroupElem& g, const PointClass& p) const;
  PointClass scalar_mul(long s, const PointClass& p) const;

  // additive order of the class, a divisor of N
  int point_order(const PointClass& p) const;

  // gamma * infinity ~ first column, gamma * 0 ~ second column
  PointClass cusp_of_column(const GroupElem& g, Column which) const;

  GroupElem S() const { return S_; }
  GroupElem T() const { return T_; }
  GroupElem U() const { return U_; }

  // genus of the level-N curve: 1 + d (N-6) / (12 N) with d the group size
  long genus() const;
  // expected dim of the relation quotient: 2 genus + cusps - 1
  long expected_dim() const;

 private:
  long key(const GroupElem& g) const;

  int N_;
  FieldPtr f2N_;
  std::vector<GroupElem> group_;
  std::unordered_map<long, int> group_idx_;
  std::vector<PointClass> cusps_;
  std::unordered_map<int, int> cusp_idx_;  // key u*N+v of canonical rep
  GroupElem S_, T_, U_;
};

Lift0 lift0(const PointN& p, int N);
Lift0 lift0(const PointClass& p, int N);

}  // namespace eis
