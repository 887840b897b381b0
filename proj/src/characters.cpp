#include "eiscycle/characters.hpp"

#include <numeric>

namespace eis {

namespace {

struct Component {
  long q;      // prime power
  long gen;    // primitive root mod q
  long order;  // phi(q)
  std::vector<int> dlog;  // discrete log base gen, indexed by residue (-1 non-unit)
};

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

long primitive_root(long q, long phi) {
  auto fac = factorize(phi);
  for (long g = 2; g < q; ++g) {
    if (std::gcd(g, q) != 1) continue;
    bool ok = true;
    for (auto& [p, e] : fac) {
      long x = 1, b = g, k = phi / p;
      while (k) {
        if (k & 1) x = x * b % q;
        b = b * b % q;
        k >>= 1;
      }
      if (x == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InternalError("no primitive root mod " + std::to_string(q));
}

std::vector<Component> components_of(int N) {
  std::vector<Component> comps;
  for (auto& [p, e] : factorize(N)) {
    Component c;
    c.q = 1;
    for (int i = 0; i < e; ++i) c.q *= p;
    c.order = c.q / p * (p - 1);
    c.gen = primitive_root(c.q, c.order);
    c.dlog.assign((size_t)c.q, -1);
    long x = 1;
    for (long k = 0; k < c.order; ++k) {
      c.dlog[(size_t)x] = (int)k;
      x = x * c.gen % c.q;
    }
    comps.push_back(std::move(c));
  }
  return comps;
}

}  // namespace

int unit_group_exponent(int N) {
  long e = 1;
  for (const auto& c : components_of(N)) e = std::lcm(e, c.order);
  return (int)e;
}

bool DirichletChar::is_trivial() const {
  for (int t : gen_exps_)
    if (t != 0) return false;
  return true;
}

int DirichletChar::exponent_at(long u) const {
  long r = ((u % N_) + N_) % N_;
  int k = exp_[(size_t)r];
  if (k < 0) throw UsageError("character evaluated at a non-unit");
  return k;
}

CycloElem DirichletChar::value(long u, const FieldPtr& f) const {
  if (f->order() % (unsigned)e_ != 0)
    throw UsageError("character value needs a field of order divisible by " +
                     std::to_string(e_));
  long r = ((u % N_) + N_) % N_;
  int k = exp_[(size_t)r];
  if (k < 0) return CycloElem::zero(f);
  return CycloElem::root_of_unity(f, (long)k * (f->order() / e_));
}

Complex DirichletChar::value_numeric(long u, mpfr_prec_t prec) const {
  long r = ((u % N_) + N_) % N_;
  int k = exp_[(size_t)r];
  if (k < 0) return Complex(prec);
  Real ang = Real::pi(prec) * Real::of(2 * k, prec) / Real::of(e_, prec);
  return Complex(ang.cos(), ang.sin());
}

DirichletChar DirichletChar::conjugate() const {
  DirichletChar out = *this;
  for (auto& k : out.exp_)
    if (k > 0) k = e_ - k;
  for (size_t i = 0; i < gen_exps_.size(); ++i)
    out.gen_exps_[i] = gen_exps_[i] == 0 ? 0 : gen_orders_[i] - gen_exps_[i];
  return out;
}

DirichletChar DirichletChar::times(const DirichletChar& o) const {
  if (N_ != o.N_) throw UsageError("character product across different moduli");
  DirichletChar out = *this;
  for (size_t i = 0; i < exp_.size(); ++i) {
    if (exp_[i] < 0) continue;
    out.exp_[i] = (exp_[i] + o.exp_[i]) % e_;
  }
  out.even_ = out.exp_[(size_t)(N_ - 1)] == 0;
  for (size_t i = 0; i < gen_exps_.size(); ++i)
    out.gen_exps_[i] = (gen_exps_[i] + o.gen_exps_[i]) % gen_orders_[i];
  return out;
}

std::vector<DirichletChar> all_chars(int N) {
  if (N < 3 || N % 2 == 0) throw UsageError("characters: N must be odd and >= 3");
  auto comps = components_of(N);
  long e = 1;
  for (const auto& c : comps) e = std::lcm(e, c.order);

  std::vector<DirichletChar> out;
  std::vector<int> ts(comps.size(), 0);
  for (;;) {
    DirichletChar chi;
    chi.N_ = N;
    chi.e_ = (int)e;
    chi.gen_exps_.assign(ts.begin(), ts.end());
    chi.gen_orders_.clear();
    for (const auto& c : comps) chi.gen_orders_.push_back((int)c.order);
    chi.exp_.assign((size_t)N, -1);
    for (long u = 0; u < N; ++u) {
      if (std::gcd(u, (long)N) != 1) continue;
      long k = 0;
      for (size_t i = 0; i < comps.size(); ++i) {
        const auto& c = comps[i];
        long lg = c.dlog[(size_t)(u % c.q)];
        k = (k + (long)ts[i] * lg % e * (e / c.order)) % e;
      }
      chi.exp_[(size_t)u] = (int)k;
    }
    chi.even_ = chi.exp_[(size_t)(N - 1)] == 0;
    out.push_back(std::move(chi));

    size_t i = 0;
    while (i < comps.size()) {
      if (++ts[i] < comps[i].order) break;
      ts[i] = 0;
      ++i;
    }
    if (i == comps.size()) break;
  }
  return out;
}

std::vector<DirichletChar> enumerate_even_chars(int N) {
  std::vector<DirichletChar> out;
  for (auto& chi : all_chars(N))
    if (chi.is_even()) out.push_back(chi);
  return out;
}

}  // namespace eis
