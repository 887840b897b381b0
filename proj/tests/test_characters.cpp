#include <doctest.h>

#include "eiscycle/eisen.hpp"
#include "eiscycle/lseries.hpp"

using namespace eis;

TEST_CASE("even character counts") {
  CHECK(enumerate_even_chars(3).size() == 1);
  CHECK(enumerate_even_chars(5).size() == 2);
  CHECK(enumerate_even_chars(7).size() == 3);
  CHECK(enumerate_even_chars(9).size() == 3);
  CHECK(enumerate_even_chars(11).size() == 5);
  CHECK(enumerate_even_chars(13).size() == 6);
  CHECK(enumerate_even_chars(15).size() == 4);  // composite modulus
}

TEST_CASE("character structure") {
  for (int N : {7, 15}) {
    auto evens = enumerate_even_chars(N);
    FieldPtr f = CycloField::of((unsigned)unit_group_exponent(N));
    for (const auto& chi : evens) {
      CHECK(chi.value(N - 1, f) == CycloElem::one(f));  // chi(-1) = 1
      // multiplicativity over the whole unit table
      for (long u = 1; u < N; ++u) {
        if (gcd_long(u, N) != 1) continue;
        for (long v = 1; v < N; ++v) {
          if (gcd_long(v, N) != 1) continue;
          CHECK(chi.value(u * v, f) == chi.value(u, f) * chi.value(v, f));
        }
      }
      // conjugate inverts values
      DirichletChar bar = chi.conjugate();
      for (long u = 1; u < N; ++u)
        if (gcd_long(u, N) == 1)
          CHECK(chi.value(u, f) * bar.value(u, f) == CycloElem::one(f));
      CHECK(bar.is_even());
    }
    // closure under product
    for (const auto& a : evens)
      for (const auto& b : evens) {
        DirichletChar ab = a.times(b);
        bool found = false;
        for (const auto& c : evens) found = found || c == ab;
        CHECK(found);
      }
  }
}

TEST_CASE("exact L values") {
  LevelContext c3(3);
  auto evens3 = enumerate_even_chars(3);
  LValue l3 = L_chi_exact(evens3[0], c3);
  CHECK(l3.exact.is_rational());
  CHECK(l3.exact.rat_value() == 2);

  LevelContext c5(5);
  for (const auto& chi : enumerate_even_chars(5)) {
    LValue lv = L_chi_exact(chi, c5);
    CHECK_FALSE(lv.exact.is_zero());
    if (chi.is_trivial()) CHECK(lv.exact == CycloElem::from_rat(lv.exact.field(), Rat(6)));
  }

  // conjugate character gives the conjugate value
  LevelContext c7(7);
  for (const auto& chi : enumerate_even_chars(7)) {
    LValue lv = L_chi_exact(chi, c7);
    LValue lc = L_chi_exact(chi.conjugate(), c7);
    CHECK(lc.exact == lv.exact.conj());
    CHECK_FALSE(lv.exact.is_zero());
  }
}

TEST_CASE("hurwitz zeta") {
  mpfr_prec_t prec = prec_for_digits(45);
  // zeta(2, 1) = pi^2 / 6
  Real z = hurwitz_zeta2(Rat(1), 40);
  Real ref = Real::pi(prec).sqr() / Real::of(6L, prec);
  CHECK(((z - ref).abs() < Real::pow10(-40, prec)));
  // zeta(2, 1/2) = pi^2 / 2
  Real h = hurwitz_zeta2(make_rat(1, 2), 40);
  Real ref2 = Real::pi(prec).sqr() / Real::of(2L, prec);
  CHECK(((h - ref2).abs() < Real::pow10(-40, prec)));
  CHECK_THROWS_AS(hurwitz_zeta2(Rat(2), 40), UsageError);
}

TEST_CASE("L series against the exact value") {
  // trivial character mod 3: exactly 2
  LevelContext c3(3);
  auto triv = enumerate_even_chars(3)[0];
  Complex series = L_chi_series(triv, 40);
  mpfr_prec_t prec = prec_for_digits(40);
  CHECK(((series.re - Real::of(2L, prec)).abs() < Real::pow10(-35, prec)));
  CHECK((series.im.abs() < Real::pow10(-35, prec)));

  // cross-oracle for all even characters at N in {3,5,7}: the exact
  // cyclotomic embedding and the zeta-series route agree to 30 digits
  for (int N : {3, 5, 7}) {
    LevelContext ctx(N);
    for (const auto& chi : enumerate_even_chars(N)) {
      Complex a = L_chi_exact(chi, ctx).exact.embed_complex(45);
      Complex b = L_chi_series(chi, 45);
      CHECK(((a - b).abs2() < Real::pow10(-60, prec)));
      CHECK((b.abs2() > Real::pow10(-10, prec)));  // nonvanishing
    }
  }
}

TEST_CASE("L values at larger levels stay nonzero and match the series") {
  mpfr_prec_t prec = prec_for_digits(40);
  for (int N : {9, 11, 13}) {
    LevelContext ctx(N);
    for (const auto& chi : enumerate_even_chars(N)) {
      LValue lv = L_chi_exact(chi, ctx);  // throws if the exact value is zero
      Complex a = lv.exact.embed_complex(40);
      Complex b = L_chi_series(chi, 40);
      CHECK(((a - b).abs2() < Real::pow10(-60, prec)));
    }
  }
}
