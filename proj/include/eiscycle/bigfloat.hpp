#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "eiscycle/numbers.hpp"

namespace eis {

// Thin RAII wrapper over mpfr_t with just the operations the numeric
// cross-checks need. Precision is fixed at construction and inherited
// by results of binary operations (from the left operand).
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  Real& operator=(Real o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  static Real of(const Rat& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  static Real of(long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  friend Real operator+(const Real& a, const Real& b) { Real r(a.prec()); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a, const Real& b) { Real r(a.prec()); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator*(const Real& a, const Real& b) { Real r(a.prec()); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator/(const Real& a, const Real& b) { Real r(a.prec()); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
  Real& operator+=(const Real& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }

  Real abs() const { Real r(prec()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
  Real cos() const { Real r(prec()); mpfr_cos(r.v_, v_, MPFR_RNDN); return r; }
  Real sin() const { Real r(prec()); mpfr_sin(r.v_, v_, MPFR_RNDN); return r; }
  Real sqr() const { Real r(prec()); mpfr_sqr(r.v_, v_, MPFR_RNDN); return r; }

  // this / b^e for integral e >= 0
  Real div_pow(const Real& b, unsigned long e) const {
    Real p(prec());
    mpfr_pow_ui(p.v_, b.v_, e, MPFR_RNDN);
    Real r(prec());
    mpfr_div(r.v_, v_, p.v_, MPFR_RNDN);
    return r;
  }

  // 10^-k with the precision of *this
  static Real pow10(long k, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, 10, MPFR_RNDN);
    if (k >= 0) {
      mpfr_pow_ui(r.v_, r.v_, (unsigned long)k, MPFR_RNDN);
    } else {
      mpfr_pow_si(r.v_, r.v_, k, MPFR_RNDN);
    }
    return r;
  }

  bool operator<(const Real& b) const { return mpfr_cmp(v_, b.v_) < 0; }
  bool operator>(const Real& b) const { return mpfr_cmp(v_, b.v_) > 0; }
  bool is_zero() const { return mpfr_zero_p(v_); }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  std::string str(int digits = 20) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

 private:
  mpfr_t v_;
};

struct Complex {
  Real re, im;

  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Complex& operator+=(const Complex& b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  Real abs2() const { return re.sqr() + im.sqr(); }
  std::string str(int digits = 20) const {
    return re.str(digits) + (im.sign() < 0 ? "" : "+") + im.str(digits) + "i";
  }
};

inline mpfr_prec_t prec_for_digits(int digits) {
  // ~3.33 bits per decimal digit plus guard bits
  return mpfr_prec_t(digits * 10 / 3 + 64);
}

}  // namespace eis
