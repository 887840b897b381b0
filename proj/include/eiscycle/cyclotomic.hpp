#pragma once

#include <memory>
#include <vector>

#include "eiscycle/bigfloat.hpp"
#include "eiscycle/numbers.hpp"

namespace eis {

// Phi_K as integer coefficients, constant term first, monic.
std::vector<mpz_class> cyclotomic_poly(unsigned K);

// Q(zeta_K) presented as Q[x]/Phi_K(x). Fields are immutable and shared
// through a registry so elements can be combined cheaply; equality of
// elements is coefficient-wise because representatives mod Phi_K are
// unique.
class CycloField {
 public:
  static std::shared_ptr<const CycloField> of(unsigned K);

  unsigned order() const { return K_; }
  unsigned degree() const { return deg_; }
  const std::vector<mpz_class>& modulus() const { return phi_; }

  // x^m reduced mod Phi_K, valid for 0 <= m < max(K, 2 deg - 1)
  const std::vector<mpz_class>& power(unsigned m) const { return powers_[m]; }

 private:
  explicit CycloField(unsigned K);

  unsigned K_;
  unsigned deg_;
  std::vector<mpz_class> phi_;
  std::vector<std::vector<mpz_class>> powers_;
};

using FieldPtr = std::shared_ptr<const CycloField>;

class CycloElem {
 public:
  CycloElem() = default;  // invalid; assign before use

  static CycloElem zero(const FieldPtr& f);
  static CycloElem one(const FieldPtr& f);
  static CycloElem from_rat(const FieldPtr& f, const Rat& q);
  // zeta_K^a, a arbitrary (reduced mod K)
  static CycloElem root_of_unity(const FieldPtr& f, long a);

  const FieldPtr& field() const { return f_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // requires is_rational()
  Rat rat_value() const;

  CycloElem operator-() const;
  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator*(const CycloElem& a, const Rat& q);
  friend CycloElem operator*(const Rat& q, const CycloElem& a) { return a * q; }
  bool operator==(const CycloElem& o) const;
  bool operator!=(const CycloElem& o) const { return !(*this == o); }

  // multiplicative inverse by extended Euclid against Phi_K over Q;
  // throws DivisionByZero on zero
  CycloElem inv() const;
  CycloElem pow(long e) const;

  // the automorphism zeta -> zeta^{-1} (complex conjugation)
  CycloElem conj() const;

  // image in Q(zeta_L) for K | L, via zeta_K = zeta_L^{L/K}
  CycloElem embedded(const FieldPtr& target) const;

  // numeric value at zeta_K = e^{2 pi i / K}; error stays below
  // 10^(2-digits): every monomial is rounded at prec_for_digits(digits)
  // (>= 64 guard bits) and there are deg <= K summands
  Complex embed_complex(int digits) const;

 private:
  CycloElem(FieldPtr f, std::vector<Rat> c) : f_(std::move(f)), c_(std::move(c)) {}
  void check_same_field(const CycloElem& o) const;

  FieldPtr f_;
  std::vector<Rat> c_;
};

// (zeta_{2N}^a + zeta_{2N}^{-a}) / 2 in the field of order 2N
CycloElem cos_pi_over(const FieldPtr& f2N, long a);

// free-function aliases used by generic elimination code
inline bool lin_is_zero(const Rat& q) { return q == 0; }
inline bool lin_is_zero(const CycloElem& x) { return x.is_zero(); }
inline Rat lin_inv(const Rat& q) {
  if (q == 0) throw DivisionByZero("rational inverse of zero");
  return Rat(1) / q;
}
inline CycloElem lin_inv(const CycloElem& x) { return x.inv(); }

}  // namespace eis
