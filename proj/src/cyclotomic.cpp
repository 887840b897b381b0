#include "eiscycle/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace eis {

namespace {

// quotient of exact division (x^K - 1) / d, both with integer coefficients
std::vector<mpz_class> exact_div(std::vector<mpz_class> num,
                                 const std::vector<mpz_class>& den) {
  int dn = (int)num.size() - 1;
  int dd = (int)den.size() - 1;
  std::vector<mpz_class> q(dn - dd + 1);
  for (int i = dn; i >= dd; --i) {
    if (num[i] == 0) continue;
    mpz_class c = num[i] / den[dd];  // den is monic here, but keep the division
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const auto& r : num)
    if (r != 0) throw InternalError("cyclotomic division left a remainder");
  return q;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

std::vector<mpz_class> cyclotomic_poly(unsigned K) {
  if (K == 0) throw UsageError("cyclotomic_poly: K must be positive");
  // (x^K - 1) / prod_{d | K, d < K} Phi_d
  std::vector<mpz_class> num(K + 1);
  num[0] = -1;
  num[K] = 1;
  std::vector<mpz_class> poly = num;
  for (unsigned d = 1; d < K; ++d) {
    if (K % d != 0) continue;
    poly = exact_div(std::move(poly), cyclotomic_poly(d));
  }
  return poly;
}

CycloField::CycloField(unsigned K) : K_(K) {
  phi_ = cyclotomic_poly(K);
  deg_ = (unsigned)phi_.size() - 1;
  if (deg_ != euler_phi(K)) throw InternalError("deg Phi_K != phi(K)");

  unsigned need = std::max(K, 2 * deg_ > 0 ? 2 * deg_ - 1 : 1);
  powers_.resize(need);
  for (unsigned m = 0; m < need; ++m) {
    powers_[m].assign(deg_, mpz_class(0));
    if (m < deg_) {
      powers_[m][m] = 1;
    } else {
      // x^m = x * x^(m-1), then reduce the overflow term via
      // x^deg = -(phi_0 + ... + phi_{deg-1} x^{deg-1})  (Phi monic)
      const auto& prev = powers_[m - 1];
      std::vector<mpz_class> cur(deg_, mpz_class(0));
      for (unsigned i = 0; i + 1 < deg_; ++i) cur[i + 1] = prev[i];
      const mpz_class& top = prev[deg_ - 1];
      if (top != 0)
        for (unsigned i = 0; i < deg_; ++i) cur[i] -= top * phi_[i];
      powers_[m] = std::move(cur);
    }
  }
}

FieldPtr CycloField::of(unsigned K) {
  static std::mutex mu;
  static std::map<unsigned, FieldPtr> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(K);
  if (it != registry.end()) return it->second;
  FieldPtr f(new CycloField(K));
  registry.emplace(K, f);
  return f;
}

CycloElem CycloElem::zero(const FieldPtr& f) {
  return CycloElem(f, std::vector<Rat>(f->degree()));
}

CycloElem CycloElem::one(const FieldPtr& f) { return from_rat(f, Rat(1)); }

CycloElem CycloElem::from_rat(const FieldPtr& f, const Rat& q) {
  std::vector<Rat> c(f->degree());
  if (f->degree() == 0) throw InternalError("degree-zero cyclotomic field");
  c[0] = q;
  // K = 1: x = 1, K = 2: x = -1; constants are still index 0 since
  // Phi reduces x^0 to 1 in all cases
  return CycloElem(f, std::move(c));
}

CycloElem CycloElem::root_of_unity(const FieldPtr& f, long a) {
  long K = (long)f->order();
  long m = ((a % K) + K) % K;
  const auto& pw = f->power((unsigned)m);
  std::vector<Rat> c(f->degree());
  for (unsigned i = 0; i < f->degree(); ++i) c[i] = Rat(pw[i]);
  return CycloElem(f, std::move(c));
}

bool CycloElem::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool CycloElem::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat CycloElem::rat_value() const {
  if (!is_rational()) throw UsageError("cyclotomic element is not rational");
  return c_[0];
}

void CycloElem::check_same_field(const CycloElem& o) const {
  if (!f_ || !o.f_ || f_->order() != o.f_->order())
    throw UsageError("mixing cyclotomic elements of different orders");
}

CycloElem CycloElem::operator-() const {
  std::vector<Rat> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return CycloElem(f_, std::move(c));
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  check_same_field(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
  check_same_field(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  a.check_same_field(b);
  unsigned deg = a.f_->degree();
  std::vector<Rat> conv(2 * deg - 1);
  for (unsigned i = 0; i < deg; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j < deg; ++j) {
      if (b.c_[j] == 0) continue;
      conv[i + j] += a.c_[i] * b.c_[j];
    }
  }
  std::vector<Rat> out(conv.begin(), conv.begin() + deg);
  for (unsigned m = deg; m < 2 * deg - 1; ++m) {
    if (conv[m] == 0) continue;
    const auto& pw = a.f_->power(m);
    for (unsigned i = 0; i < deg; ++i)
      if (pw[i] != 0) out[i] += conv[m] * Rat(pw[i]);
  }
  return CycloElem(a.f_, std::move(out));
}

CycloElem operator*(const CycloElem& a, const Rat& q) {
  std::vector<Rat> c(a.c_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] * q;
  return CycloElem(a.f_, std::move(c));
}

bool CycloElem::operator==(const CycloElem& o) const {
  check_same_field(o);
  return c_ == o.c_;
}

namespace {

using Poly = std::vector<Rat>;  // dense, may have leading zeros

int pdeg(const Poly& p) {
  for (int i = (int)p.size() - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// a mod b (b nonzero), also accumulating the quotient action on the
// Bezout track: (r0,s0),(r1,s1) -> (r1, r0 - q r1), ...
void divmod(Poly a, const Poly& b, Poly& quo, Poly& rem) {
  int db = pdeg(b);
  int da = pdeg(a);
  quo.assign(std::max(0, da - db + 1), Rat(0));
  while (da >= db && da >= 0) {
    Rat c = a[da] / b[db];
    quo[da - db] = c;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= c * b[j];
    da = pdeg(a);
  }
  rem = std::move(a);
}

Poly psub_scaled(const Poly& a, const Poly& q, const Poly& b) {
  // a - q*b
  Poly out = a;
  int dq = pdeg(q), db = pdeg(b);
  if (dq >= 0 && db >= 0) {
    if ((int)out.size() < dq + db + 1) out.resize(dq + db + 1);
    for (int i = 0; i <= dq; ++i) {
      if (q[i] == 0) continue;
      for (int j = 0; j <= db; ++j) out[i + j] -= q[i] * b[j];
    }
  }
  return out;
}

}  // namespace

CycloElem CycloElem::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic element");
  unsigned deg = f_->degree();
  // extended Euclid: track s with  s * this == r  (mod Phi)
  Poly r0(f_->modulus().size());
  for (size_t i = 0; i < f_->modulus().size(); ++i) r0[i] = Rat(f_->modulus()[i]);
  Poly r1(c_.begin(), c_.end());
  Poly s0 = {Rat(0)};
  Poly s1 = {Rat(1)};
  while (pdeg(r1) > 0) {
    Poly q, rem;
    divmod(r0, r1, q, rem);
    Poly s2 = psub_scaled(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (pdeg(r1) != 0)
    throw InternalError("element shares a factor with Phi_K");  // impossible: Phi_K irreducible
  Rat lead = r1[0];
  std::vector<Rat> out(deg);
  for (size_t i = 0; i < s1.size() && i < (size_t)deg; ++i) out[i] = s1[i] / lead;
  // s1 has degree < deg Phi - ... guard: anything above deg-1 must be zero
  for (size_t i = deg; i < s1.size(); ++i)
    if (s1[i] != 0) throw InternalError("Bezout coefficient degree overflow");
  return CycloElem(f_, std::move(out));
}

CycloElem CycloElem::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycloElem acc = one(f_);
  CycloElem base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

CycloElem CycloElem::conj() const {
  unsigned K = f_->order();
  CycloElem out = zero(f_);
  for (unsigned i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    out += root_of_unity(f_, (long)((K - i % K) % K)) * c_[i];
  }
  return out;
}

CycloElem CycloElem::embedded(const FieldPtr& target) const {
  unsigned K = f_->order(), L = target->order();
  if (L % K != 0) throw UsageError("cyclotomic embedding requires K | L");
  unsigned step = L / K;
  CycloElem out = zero(target);
  for (unsigned i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    out += root_of_unity(target, (long)(i * step)) * c_[i];
  }
  return out;
}

Complex CycloElem::embed_complex(int digits) const {
  if (digits < 10) throw UsageError("embed_complex needs at least 10 digits");
  mpfr_prec_t prec = prec_for_digits(digits);
  Real two_pi_over_K = Real::pi(prec) * Real::of(2, prec) / Real::of((long)f_->order(), prec);
  Complex acc(prec);
  for (unsigned i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Real ang = two_pi_over_K * Real::of((long)i, prec);
    Real c = Real::of(c_[i], prec);
    acc += Complex(c * ang.cos(), c * ang.sin());
  }
  return acc;
}

CycloElem cos_pi_over(const FieldPtr& f2N, long a) {
  CycloElem z = CycloElem::root_of_unity(f2N, a) + CycloElem::root_of_unity(f2N, -a);
  return z * Rat(1, 2);
}

}  // namespace eis
