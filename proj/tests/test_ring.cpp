#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skein/cyclotomic.hpp"
#include "skein/poly.hpp"
#include "skein/rings.hpp"

#include <random>

using namespace skein;

namespace {

HalfLaurent q(long long twice) { return HalfLaurent::q_power(twice); }

HalfLaurent random_hl(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expo(-6, 6), coef(-5, 5);
  HalfLaurent x;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i)
    x += HalfLaurent::monomial(Integer(coef(rng)), expo(rng));
  return x;
}

// u^k as a Laurent polynomial, u := q^2 (any invertible element works here)
HalfLaurent upow(long long k) { return q(4 * k); }

HalfLaurent eval_uni(const UniPoly<Integer>& p, const HalfLaurent& v) {
  return p.eval(v, HalfLaurent(), [](const Integer& c) { return HalfLaurent(c); });
}

}  // namespace

TEST_CASE("half laurent basics") {
  CHECK(q(1) * q(1) == q(2));  // q^{1/2} q^{1/2} = q
  std::mt19937 rng(7);
  HalfLaurent x = random_hl(rng);
  CHECK((x + (-x)).is_zero());
  CHECK((q(2) - q(-2)) * (q(2) + q(-2)) == q(4) - q(-4));
}

TEST_CASE("quantum integers") {
  CHECK(HalfLaurent::quantum_int(1) == HalfLaurent::one());
  CHECK(HalfLaurent::quantum_int(2) == q(-4) + q(4));
  CHECK(HalfLaurent::quantum_int(3) == q(-8) + HalfLaurent::one() + q(8));

  CHECK(HalfLaurent::quantum_factorial(0) == HalfLaurent::one());
  CHECK(HalfLaurent::quantum_factorial(2) == q(-4) + q(4));
  CHECK(HalfLaurent::quantum_factorial(3) ==
        HalfLaurent::quantum_int(2) * HalfLaurent::quantum_int(3));

  // closed form [n]_q (q^2 - q^{-2}) = q^{2n} - q^{-2n}
  for (long n = 1; n <= 50; ++n)
    CHECK(HalfLaurent::quantum_int(n) * (q(4) - q(-4)) == q(4 * n) - q(-4 * n));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(42);
  for (int t = 0; t < 200; ++t) {
    HalfLaurent a = random_hl(rng), b = random_hl(rng), c = random_hl(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("chebyshev polynomials") {
  auto x = UniPoly<Integer>::x();
  CHECK(cheb_S(0) == UniPoly<Integer>{Integer(1)});
  CHECK(cheb_S(2) == x * x - UniPoly<Integer>{Integer(1)});
  // oracle for T_2: expand (u + u^{-1})^2 - 2 = u^2 + u^{-2}
  CHECK(cheb_T(2) == x * x - UniPoly<Integer>{Integer(2)});

  HalfLaurent u_plus = upow(1) + upow(-1);
  for (long n = 0; n <= 30; ++n) {
    CHECK(eval_uni(cheb_S(n), u_plus) * (upow(1) - upow(-1)) ==
          upow(n + 1) - upow(-(n + 1)));
    CHECK(eval_uni(cheb_T(n), u_plus) == upow(n) + upow(-n));
  }
}

TEST_CASE("fraction field") {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    HalfLaurent a = random_hl(rng), b = random_hl(rng);
    if (a.is_zero() || b.is_zero()) continue;
    LaurentFrac f(a, b);
    CHECK(f * *f.inverse() == LaurentFrac::one());
    LaurentFrac g(a * b, b);  // must reduce to a
    CHECK(g == LaurentFrac(a));
  }
  // [n-1]/[n] arithmetic stays reduced
  LaurentFrac r(HalfLaurent::quantum_int(2), HalfLaurent::quantum_int(4));
  LaurentFrac s = r * LaurentFrac(HalfLaurent::quantum_int(4));
  CHECK(s == LaurentFrac(HalfLaurent::quantum_int(2)));
}

TEST_CASE("exact division and units") {
  HalfLaurent d = HalfLaurent(1) + q(4);  // 1 + q^2
  HalfLaurent p = d * (q(-1) + q(3));
  auto quo = p.divided_by(d);
  REQUIRE(quo.has_value());
  CHECK(*quo == q(-1) + q(3));
  CHECK_FALSE((HalfLaurent(1) + q(2)).divided_by(d).has_value());
  CHECK(q(3).is_unit());
  CHECK((-q(-5)).inverse().has_value());
  CHECK_FALSE(d.is_unit());
}

TEST_CASE("ord of q^4") {
  CHECK(ord_q4(16) == 2);
  CHECK(ord_q4(8) == 1);
  CHECK(ord_q4(40) == 5);
  CHECK(ord_q4(24) == 3);
  CHECK(ord_q4(1) == 1);
}

TEST_CASE("cyclotomic specialization") {
  auto f16 = CyclotomicField::make(16);
  CHECK(f16->N == 2);
  // [N]_q vanishes whenever N > 1
  CHECK(specialize(HalfLaurent::quantum_int(2), f16).is_zero());
  CHECK_FALSE(specialize(HalfLaurent::quantum_int(1), f16).is_zero());

  auto f1 = CyclotomicField::make(1);
  CHECK(specialize(q(1), f1) == CycloElem::from_rational(f1, 1));

  // 1 + q^2 -> 1 + zeta_16^4 != 0
  CHECK_FALSE(specialize(HalfLaurent(1) + q(4), f16).is_zero());

  for (long m : {16L, 24L, 40L}) {
    auto f = CyclotomicField::make(m);
    CHECK(specialize(HalfLaurent::quantum_int(f->N), f).is_zero());
    for (long k = 1; k < f->N; ++k)
      CHECK_FALSE(specialize(HalfLaurent::quantum_int(k), f).is_zero());
  }
}

TEST_CASE("specialize is a ring homomorphism") {
  auto f = CyclotomicField::make(24);
  std::mt19937 rng(5);
  for (int t = 0; t < 60; ++t) {
    HalfLaurent a = random_hl(rng), b = random_hl(rng);
    CHECK(specialize(a * b, f) == specialize(a, f) * specialize(b, f));
    CHECK(specialize(a + b, f) == specialize(a, f) + specialize(b, f));
  }
}

TEST_CASE("cyclotomic field inverse") {
  auto f = CyclotomicField::make(40);
  CycloRing ring(f);
  CycloElem x = specialize(HalfLaurent(1) + q(4) + q(6), f);
  REQUIRE_FALSE(x.is_zero());
  CHECK(*x.inverse() * x == ring.one());
  CHECK_FALSE(ring.zero().inverse().has_value());
}

TEST_CASE("frobenius epsilon conventions") {
  // both conventions satisfy epsilon^8 = 1 at any specialization with
  // ord(q^4) = N; neither is selected for use anywhere
  for (long m : {16L, 24L, 40L}) {
    auto f = CyclotomicField::make(m);
    long N = f->N;
    for (const HalfLaurent& eps :
         {frobenius_epsilon_whole(N), frobenius_epsilon_half(N)}) {
      CycloElem img = specialize(eps, f);
      CycloElem pow = CycloRing(f).one();
      for (int i = 0; i < 8; ++i) pow = pow * img;
      CHECK(pow == CycloRing(f).one());
    }
  }
}
