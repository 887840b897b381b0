#include "eiscycle/modgroup.hpp"

#include <algorithm>
#include <numeric>

namespace eis {

namespace {

int mod(long x, int N) {
  long r = x % N;
  return (int)(r < 0 ? r + N : r);
}

// extended gcd over Z: returns g, sets s,t with s*a + t*b = g
long egcd(long a, long b, long& s, long& t) {
  if (b == 0) {
    s = a >= 0 ? 1 : -1;
    t = 0;
    return a >= 0 ? a : -a;
  }
  long s1, t1;
  long g = egcd(b, a % b, s1, t1);
  s = t1;
  t = s1 - (a / b) * t1;
  return g;
}

long inv_mod(long a, int N) {
  long s, t;
  long g = egcd(mod(a, N), N, s, t);
  if (g != 1) throw InternalError("non-invertible residue");
  return mod(s, N);
}

}  // namespace

std::string GroupElem::str() const {
  return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
         std::to_string(c) + "," + std::to_string(d) + "]]";
}

LevelContext::LevelContext(int N) : N_(N) {
  if (N < 3 || N % 2 == 0)
    throw UsageError("unsupported level: N must be odd and at least 3, got " +
                     std::to_string(N));
  f2N_ = CycloField::of(2 * (unsigned)N);

  // one canonical representative per {g, -g}; for each first column
  // (a, c) with gcd(a, c, N) = 1 the second columns form a coset
  // (b0 + k a, d0 + k c), k mod N
  for (int a = 0; a < N; ++a) {
    for (int c = 0; c < N; ++c) {
      long s, t;
      long g = egcd(a, c, s, t);
      if (std::gcd(g, (long)N) != 1) continue;
      long gi = inv_mod(g, N);
      int d0 = mod(s * gi, N);
      int b0 = mod(-t * gi, N);
      for (int k = 0; k < N; ++k) {
        GroupElem m = canon_mat(a, mod(b0 + (long)k * a, N), c, mod(d0 + (long)k * c, N));
        if (group_idx_.emplace(key(m), (int)group_.size()).second) group_.push_back(m);
      }
    }
  }
  std::sort(group_.begin(), group_.end());
  group_idx_.clear();
  for (int i = 0; i < (int)group_.size(); ++i) group_idx_[key(group_[i])] = i;

  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v)
      if (std::gcd(std::gcd(u, v), N) == 1) {
        PointClass p = canon(u, v);
        if (cusp_idx_.emplace(p.u * N + p.v, (int)cusps_.size()).second)
          cusps_.push_back(p);
      }
  std::sort(cusps_.begin(), cusps_.end());
  cusp_idx_.clear();
  for (int i = 0; i < (int)cusps_.size(); ++i)
    cusp_idx_[cusps_[i].u * N + cusps_[i].v] = i;

  S_ = canon_mat(0, -1, 1, 0);
  T_ = canon_mat(1, 1, 0, 1);
  U_ = canon_mat(0, -1, 1, 1);
  if (!(mul(S_, T_) == U_)) throw InternalError("U != S*T");
}

long LevelContext::key(const GroupElem& g) const {
  return (((long)g.a * N_ + g.b) * N_ + g.c) * N_ + g.d;
}

PointClass LevelContext::canon(int u, int v) const {
  u = mod(u, N_);
  v = mod(v, N_);
  int nu = mod(-u, N_), nv = mod(-v, N_);
  if (nu < u || (nu == u && nv < v)) return {nu, nv};
  return {u, v};
}

GroupElem LevelContext::canon_mat(long a, long b, long c, long d) const {
  GroupElem g{mod(a, N_), mod(b, N_), mod(c, N_), mod(d, N_)};
  GroupElem h{mod(-a, N_), mod(-b, N_), mod(-c, N_), mod(-d, N_)};
  return g < h ? g : h;
}

int LevelContext::group_index(const GroupElem& g) const {
  auto it = group_idx_.find(key(g));
  if (it == group_idx_.end()) throw UsageError("matrix not in SL2(Z/NZ)/±1");
  return it->second;
}

int LevelContext::cusp_index(const PointClass& p) const {
  auto it = cusp_idx_.find(p.u * N_ + p.v);
  return it == cusp_idx_.end() ? -1 : it->second;
}

GroupElem LevelContext::mul(const GroupElem& g, const GroupElem& h) const {
  return canon_mat((long)g.a * h.a + g.b * h.c, (long)g.a * h.b + g.b * h.d,
                   (long)g.c * h.a + g.d * h.c, (long)g.c * h.b + g.d * h.d);
}

GroupElem LevelContext::inverse(const GroupElem& g) const {
  return canon_mat(g.d, -g.b, -g.c, g.a);
}

PointClass LevelContext::act(const GroupElem& g, const PointClass& p) const {
  return canon((int)(((long)g.a * p.u + g.b * p.v) % N_),
               (int)(((long)g.c * p.u + g.d * p.v) % N_));
}

PointClass LevelContext::scalar_mul(long s, const PointClass& p) const {
  return canon(mod(s * p.u, N_), mod(s * p.v, N_));
}

int LevelContext::point_order(const PointClass& p) const {
  return N_ / (int)std::gcd(std::gcd((long)p.u, (long)p.v), (long)N_);
}

PointClass LevelContext::cusp_of_column(const GroupElem& g, Column which) const {
  return which == Column::first ? canon(g.a, g.c) : canon(g.b, g.d);
}

long LevelContext::genus() const {
  long d = group_size();
  long num = d * ((long)N_ - 6);
  if (num % (12L * N_) != 0) throw InternalError("genus formula not integral");
  return 1 + num / (12L * N_);
}

long LevelContext::expected_dim() const { return 2 * genus() + cusp_count() - 1; }

Lift0 lift0(const PointN& p, int N) {
  int u = mod(p.u, N), v = mod(p.v, N);
  return {u % 2 == 1 ? u : u + N, v % 2 == 1 ? v : v + N};
}

Lift0 lift0(const PointClass& p, int N) { return lift0(PointN{p.u, p.v}, N); }

}  // namespace eis
