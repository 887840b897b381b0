#include "eiscycle/hecke.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace eis {

namespace {

const IntMat2 kS{0, -1, 1, 0};
const IntMat2 kH{1, 1, -1, 1};
const IntMat2 kC{-1, 0, 0, 1};

// point of P^1(Q) as a reduced pair (p, q), q > 0 or (1, 0) = infinity
struct ProjPt {
  mpz_class p, q;
  bool operator<(const ProjPt& o) const {
    return p != o.p ? p < o.p : q < o.q;
  }
  bool operator==(const ProjPt& o) const { return p == o.p && q == o.q; }
};

ProjPt proj(mpz_class p, mpz_class q) {
  if (p == 0 && q == 0) throw InternalError("projective point (0,0)");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

ProjPt mobius_inf(const IntMat2& M) { return proj(M.a, M.c); }
ProjPt mobius_zero(const IntMat2& M) { return proj(M.b, M.d); }

// Column Hermite form invariant (e, f, g) of the column lattice:
// basis [[e,0],[f,g]], eg = det, 0 <= f < g. Right multiplication by
// SL2(Z) preserves the lattice, so this classifies right cosets.
struct HnfKey {
  mpz_class e, f, g;
  bool operator<(const HnfKey& o) const {
    if (e != o.e) return e < o.e;
    if (f != o.f) return f < o.f;
    return g < o.g;
  }
};

HnfKey hnf_class(const IntMat2& M) {
  mpz_class det = M.det();
  if (det <= 0) throw UsageError("family matrix with non-positive determinant");
  mpz_class e, s, t;
  mpz_gcdext(e.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), M.a.get_mpz_t(), M.b.get_mpz_t());
  mpz_class g = det / e;
  // (e, f) = s * (a, c) + t * (b, d) is in the lattice; f is then
  // well-defined mod g
  mpz_class f = s * M.c + t * M.d;
  mpz_fdiv_r(f.get_mpz_t(), f.get_mpz_t(), g.get_mpz_t());
  return {e, f, g};
}

long sigma_divisors(const mpz_class& m) {
  long mv = mpz_get_si(m.get_mpz_t());
  long s = 0;
  for (long d = 1; d <= mv; ++d)
    if (mv % d == 0) s += d;
  return s;
}

using Multiset = std::map<IntMat2, Rat>;

void multiset_add(Multiset& ms, const IntMat2& M, const Rat& w) {
  IntMat2 k = M.canon_pm();
  auto it = ms.find(k);
  if (it == ms.end()) {
    if (w != 0) ms.emplace(k, w);
  } else {
    it->second += w;
    if (it->second == 0) ms.erase(it);
  }
}

Multiset family_multiset(const HeckeFamily& fam, const IntMat2* left, const IntMat2* right) {
  Multiset ms;
  for (const auto& [w, M] : fam.terms) {
    IntMat2 x = M;
    if (left) x = (*left) * x;
    if (right) x = x * (*right);
    multiset_add(ms, x, w);
  }
  return ms;
}

}  // namespace

IntMat2 IntMat2::canon_pm() const {
  for (const mpz_class* x : {&a, &b, &c, &d}) {
    if (*x > 0) return *this;
    if (*x < 0) return {-a, -b, -c, -d};
  }
  return *this;
}

bool IntMat2::operator<(const IntMat2& o) const {
  if (a != o.a) return a < o.a;
  if (b != o.b) return b < o.b;
  if (c != o.c) return c < o.c;
  return d < o.d;
}

std::string IntMat2::str() const {
  return "[" + a.get_str() + " " + b.get_str() + "; " + c.get_str() + " " + d.get_str() + "]";
}

HeckeFamily heilbronn_family(long l) {
  if (l < 2) throw UsageError("heilbronn_family: l must be a prime >= 2");
  for (long d = 2; d * d <= l; ++d)
    if (l % d == 0)
      throw UsageError("heilbronn_family: " + std::to_string(l) + " is composite");
  HeckeFamily fam;
  fam.m = l;
  for (long a = 1; a <= l; ++a) {
    for (long b = 0; b < a; ++b) {
      // d > c forces c (a - b) < l
      for (long c = 0; c * (a - b) < l; ++c) {
        long num = l + b * c;
        if (num % a != 0) continue;
        long d = num / a;
        if (d > c) fam.terms.push_back({Rat(1), IntMat2{a, b, c, d}});
      }
    }
  }
  CmReport rep = verify_Cm(fam);
  if (!rep.pass)
    throw InternalError("heilbronn_family(" + std::to_string(l) +
                        ") failed the coset condition: " + rep.failure);
  fam.satisfies_Cm = true;
  fam.commutes_with_c = commutes_with_c(fam);
  return fam;
}

HeckeFamily identity_family() {
  HeckeFamily fam;
  fam.m = 1;
  fam.terms.push_back({Rat(1), IntMat2{1, 0, 0, 1}});
  fam.satisfies_Cm = true;
  fam.commutes_with_c = true;
  return fam;
}

CmReport verify_Cm(const HeckeFamily& fam) {
  CmReport rep;
  rep.expected_classes = sigma_divisors(fam.m);
  std::map<HnfKey, std::map<ProjPt, Rat>> classes;
  for (const auto& [w, M] : fam.terms) {
    if (M.det() != fam.m) {
      rep.failure = "matrix " + M.str() + " has determinant " + M.det().get_str() +
                    " != " + fam.m.get_str();
      return rep;
    }
    auto& dv = classes[hnf_class(M)];
    auto bump = [&dv](const ProjPt& pt, const Rat& x) {
      auto it = dv.find(pt);
      if (it == dv.end()) {
        if (x != 0) dv.emplace(pt, x);
      } else {
        it->second += x;
        if (it->second == 0) dv.erase(it);
      }
    };
    bump(mobius_inf(M), w);
    bump(mobius_zero(M), -w);
  }
  rep.num_classes = (int)classes.size();
  if (rep.num_classes != rep.expected_classes) {
    rep.failure = "touched " + std::to_string(rep.num_classes) + " cosets, expected " +
                  std::to_string(rep.expected_classes);
    return rep;
  }
  ProjPt inf{1, 0}, zero{0, 1};
  for (const auto& [key, dv] : classes) {
    bool ok = dv.size() == 2 && dv.count(inf) && dv.count(zero) &&
              dv.at(inf) == 1 && dv.at(zero) == -1;
    if (!ok) {
      std::ostringstream os;
      os << "class (" << key.e.get_str() << "," << key.f.get_str() << "," << key.g.get_str()
         << ") sums to {";
      for (const auto& [pt, x] : dv)
        os << " " << pt.p.get_str() << "/" << pt.q.get_str() << ":" << rat_str(x);
      os << " }";
      rep.failure = os.str();
      return rep;
    }
  }
  rep.pass = true;
  return rep;
}

bool commutes_with_c(const HeckeFamily& fam) {
  return family_multiset(fam, &kC, nullptr) == family_multiset(fam, nullptr, &kC);
}

HeckeFamily symmetrize_c(const HeckeFamily& fam) {
  Multiset ms;
  for (const auto& [w, M] : fam.terms) {
    multiset_add(ms, M, w / 2);
    multiset_add(ms, kC * M * kC, w / 2);
  }
  HeckeFamily out;
  out.m = fam.m;
  for (const auto& [M, w] : ms) out.terms.push_back({w, M});
  CmReport rep = verify_Cm(out);
  if (!rep.pass)
    throw InternalError("c-symmetrization broke the coset condition: " + rep.failure);
  out.satisfies_Cm = true;
  out.commutes_with_c = commutes_with_c(out);
  if (!out.commutes_with_c)
    throw InternalError("c-symmetrization did not commute with c");
  return out;
}

namespace {

bool on_jump_set(std::initializer_list<Rat> args) {
  for (const Rat& a : args)
    if (is_integer(a)) return true;
  return false;
}

}  // namespace

IdentityReport check_function_identity_f(const HeckeFamily& fam, const LevelContext& ctx) {
  int N = ctx.N();
  long l = mpz_get_si(fam.m.get_mpz_t());
  IdentityReport rep;
  for (int i = 0; i < 2 * N; ++i) {
    for (int j = 0; j < 2 * N; ++j) {
      Rat s1(i, 2 * N), s2(j, 2 * N);
      s1.canonicalize();
      s2.canonicalize();
      bool jump = on_jump_set({s1, s2, l * s1, l * s2});
      Rat lhs = 0;
      for (const auto& [w, M] : fam.terms) {
        Rat u1 = s1 * Rat(M.a) + s2 * Rat(M.c);
        Rat u2 = s1 * Rat(M.b) + s2 * Rat(M.d);
        if (on_jump_set({u1, u2})) jump = true;
        lhs += w * f2(u1, u2);
      }
      Rat rhs = Rat(l) * f2(s1, s2) + f2(l * s1, l * s2);
      ++rep.points_checked;
      if (lhs != rhs) {
        (jump ? rep.failures_on_jump_set : rep.failures_off_jump_set).push_back({i, j});
      }
    }
  }
  rep.pass = rep.failures_off_jump_set.empty();
  return rep;
}

IdentityReport check_function_identity_fhat(const HeckeFamily& fam, const LevelContext& ctx) {
  int N = ctx.N();
  long l = mpz_get_si(fam.m.get_mpz_t());
  IdentityReport rep;
  // memoized fhat over (Z/2NZ)^2
  std::vector<CycloElem> table((size_t)(4 * N * N));
  std::vector<bool> have((size_t)(4 * N * N), false);
  auto fh = [&](long p1, long p2) -> const CycloElem& {
    long q1 = ((p1 % (2 * N)) + 2 * N) % (2 * N);
    long q2 = ((p2 % (2 * N)) + 2 * N) % (2 * N);
    size_t k = (size_t)(q1 * 2 * N + q2);
    if (!have[k]) {
      table[k] = fhat((int)q1, (int)q2, ctx);
      have[k] = true;
    }
    return table[k];
  };
  for (int u = 0; u < N; ++u) {
    for (int v = 0; v < N; ++v) {
      Lift0 P = lift0(PointN{u, v}, N);
      CycloElem lhs = CycloElem::zero(ctx.field2N());
      for (const auto& [w, M] : fam.terms) {
        IntMat2 A = M.adjugate();
        long q1 = mpz_get_si(mpz_class(A.a * P.u + A.b * P.v).get_mpz_t());
        long q2 = mpz_get_si(mpz_class(A.c * P.u + A.d * P.v).get_mpz_t());
        lhs += fh(q1, q2) * w;
      }
      CycloElem rhs = fh(l * P.u, l * P.v) * Rat(l) + fh(P.u, P.v);
      ++rep.points_checked;
      if (!(lhs == rhs)) rep.failures_off_jump_set.push_back({u, v});
    }
  }
  rep.pass = rep.failures_off_jump_set.empty();
  return rep;
}

ThetaReport check_theta_relations(const HeckeFamily& fam) {
  ThetaReport rep;
  rep.c_commutes = commutes_with_c(fam);

  // X = theta H - H adj(theta), as a multiset mod ±1
  Multiset X;
  for (const auto& [w, M] : fam.terms) {
    multiset_add(X, M * kH, w);
    multiset_add(X, kH * M.adjugate(), -w);
  }
  // S-invariance: coefficient of [A] equals coefficient of [S A]
  rep.h_relation = true;
  std::ostringstream os;
  for (const auto& [A, w] : X) {
    IntMat2 SA = (kS * A).canon_pm();
    auto it = X.find(SA);
    Rat other = it == X.end() ? Rat(0) : it->second;
    if (other != w) {
      rep.h_relation = false;
      os << "X[" << A.str() << "]=" << rat_str(w) << " vs X[S.] =" << rat_str(other) << "; ";
    }
  }

  rep.support_identity_mod2 = true;
  for (const auto& [w, M] : fam.terms)
    if (!M.congruent_identity_mod2()) {
      rep.support_identity_mod2 = false;
      os << "support not == 1 mod 2: " << M.str() << "; ";
    }
  rep.detail = os.str();
  return rep;
}

FIdentityReport check_F_identity(const HeckeFamily& theta, const LevelContext& ctx) {
  int N = ctx.N();
  long l = mpz_get_si(theta.m.get_mpz_t());
  FIdentityReport rep;
  rep.pass = true;
  // memoized F over classes
  std::vector<CycloElem> fval((size_t)(N * N));
  std::vector<bool> have((size_t)(N * N), false);
  auto F = [&](int u, int v) -> const CycloElem& {
    PointClass p = ctx.canon(u, v);
    size_t k = (size_t)(p.u * N + p.v);
    if (!have[k]) {
      fval[k] = F_closed(p, ctx);
      have[k] = true;
    }
    return fval[k];
  };
  for (int u = 0; u < N; ++u) {
    for (int v = 0; v < N; ++v) {
      CycloElem lhs = CycloElem::zero(ctx.field2N());
      for (const auto& [w, M] : theta.terms)
        lhs += F((int)residue(M.a * u + M.b * v, N), (int)residue(M.c * u + M.d * v, N)) * w;
      CycloElem rhs = F(u, v) + F((int)((l % N) * u % N), (int)((l % N) * v % N)) * Rat(l);
      if (!(lhs == rhs)) {
        rep.pass = false;
        rep.failures.push_back(ctx.canon(u, v));
      }
    }
  }
  return rep;
}

HeckeFamily load_theta_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open theta family file: " + path);
  HeckeFamily fam;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line.substr(0, line.find('#'));
    std::istringstream is(trimmed);
    std::string wstr;
    if (!(is >> wstr)) continue;  // blank / comment line
    std::string a, b, c, d;
    if (!(is >> a >> b >> c >> d))
      throw UsageError("theta file " + path + ": line " + std::to_string(lineno) +
                       " is not 'weight a b c d'");
    IntMat2 M{mpz_class(a), mpz_class(b), mpz_class(c), mpz_class(d)};
    Rat w = parse_rat(wstr);
    if (fam.terms.empty()) {
      fam.m = M.det();
      if (fam.m <= 0)
        throw UsageError("theta file " + path + ": non-positive determinant " +
                         fam.m.get_str());
    } else if (M.det() != fam.m) {
      throw UsageError("theta file " + path + ": determinant " + M.det().get_str() +
                       " on line " + std::to_string(lineno) + " differs from " +
                       fam.m.get_str());
    }
    fam.terms.push_back({w, M});
  }
  if (fam.terms.empty()) throw UsageError("theta file " + path + " is empty");
  return fam;
}

void save_theta_file(const HeckeFamily& fam, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write theta family file: " + path);
  for (const auto& [w, M] : fam.terms)
    out << rat_str(w) << " " << M.a.get_str() << " " << M.b.get_str() << " "
        << M.c.get_str() << " " << M.d.get_str() << "\n";
}

std::optional<HeckeFamily> search_theta_family(long l, long bound) {
  // candidate support: det l, congruent to identity mod 2, entries
  // bounded, one representative per ±-pair
  std::vector<IntMat2> cand;
  std::map<IntMat2, int> cidx;
  for (long a = -bound; a <= bound; ++a) {
    if ((a % 2 + 2) % 2 != 1) continue;
    for (long d = -bound; d <= bound; ++d) {
      if ((d % 2 + 2) % 2 != 1) continue;
      for (long b = -bound; b <= bound; ++b) {
        if (b % 2 != 0) continue;
        for (long c = -bound; c <= bound; ++c) {
          if (c % 2 != 0) continue;
          if (a * d - b * c != l) continue;
          IntMat2 M = IntMat2{a, b, c, d}.canon_pm();
          if (cidx.emplace(M, (int)cand.size()).second) cand.push_back(M);
        }
      }
    }
  }
  if (cand.empty()) return std::nullopt;

  // linear constraints over the weights; constraint rows are indexed
  // densely, variables are columns
  int next_row = 0;
  std::vector<LinComb<Rat>> cols(cand.size());
  LinComb<Rat> rhs;
  auto new_row = [&]() { return next_row++; };

  // (1) coset condition: per HNF class and per P^1 point
  std::map<HnfKey, std::vector<int>> classes;
  for (int i = 0; i < (int)cand.size(); ++i) classes[hnf_class(cand[i])].push_back(i);
  if ((long)classes.size() < sigma_divisors(mpz_class(l))) return std::nullopt;
  for (const auto& [key, members] : classes) {
    std::map<ProjPt, int> point_row;
    auto row_of = [&](const ProjPt& pt) {
      auto it = point_row.find(pt);
      if (it != point_row.end()) return it->second;
      int r = new_row();
      point_row.emplace(pt, r);
      return r;
    };
    // make sure the target points always have rows, so the class must
    // actually produce (inf) - (0)
    ProjPt inf{1, 0}, zero{0, 1};
    rhs.add(row_of(inf), 1);
    rhs.add(row_of(zero), -1);
    for (int i : members) {
      cols[(size_t)i].add(row_of(mobius_inf(cand[(size_t)i])), 1);
      cols[(size_t)i].add(row_of(mobius_zero(cand[(size_t)i])), -1);
    }
  }

  // (2) c-commutation as multisets mod ±1
  {
    std::map<IntMat2, int> row_of_mat;
    auto row_of = [&](const IntMat2& M) {
      auto it = row_of_mat.find(M);
      if (it != row_of_mat.end()) return it->second;
      int r = new_row();
      row_of_mat.emplace(M, r);
      return r;
    };
    for (int i = 0; i < (int)cand.size(); ++i) {
      cols[(size_t)i].add(row_of((cand[(size_t)i] * kC).canon_pm()), 1);
      cols[(size_t)i].add(row_of((kC * cand[(size_t)i]).canon_pm()), -1);
    }
  }

  // (3) S-invariance of X = theta H - H adj(theta): for every matrix A
  // in the possible support of X, coeff(A) - coeff(S A) = 0
  {
    std::map<IntMat2, LinComb<Rat>> xcoeff;
    for (int i = 0; i < (int)cand.size(); ++i) {
      xcoeff[(cand[(size_t)i] * kH).canon_pm()].add(i, 1);
      xcoeff[(kH * cand[(size_t)i].adjugate()).canon_pm()].add(i, -1);
    }
    std::vector<IntMat2> support;
    for (const auto& [A, unused] : xcoeff) support.push_back(A);
    for (const IntMat2& A : support) {
      IntMat2 SA = (kS * A).canon_pm();
      LinComb<Rat> diff = xcoeff[A];
      auto it = xcoeff.find(SA);
      if (it != xcoeff.end()) diff -= it->second;
      if (diff.empty()) continue;
      int r = new_row();
      for (const auto& [i, w] : diff.c) cols[(size_t)i].add(r, w);
    }
  }

  auto sol = solve_combination(cols, rhs, Rat(0), Rat(1));
  if (!sol) return std::nullopt;

  HeckeFamily fam;
  fam.m = l;
  for (size_t i = 0; i < cand.size(); ++i)
    if ((*sol)[i] != 0) fam.terms.push_back({(*sol)[i], cand[i]});
  CmReport rep = verify_Cm(fam);
  if (!rep.pass) throw InternalError("theta search produced a non-C_m family");
  fam.satisfies_Cm = true;
  fam.commutes_with_c = commutes_with_c(fam);
  return fam;
}

}  // namespace eis
