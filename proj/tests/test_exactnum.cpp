#include "doctest.h"

#include "bgw/intfun.hpp"
#include "bgw/numeric.hpp"
#include "bgw/pi.hpp"
#include "bgw/rational.hpp"

using namespace bgw;

TEST_CASE("rational basics") {
  Rational a(3, 4), b(1, 6);
  CHECK(a + b == Rational(11, 12));
  CHECK(a - b == Rational(7, 12));
  CHECK(a * b == Rational(1, 8));
  CHECK(a / b == Rational(9, 2));
  CHECK(-a == Rational(-3, 4));
  CHECK(a.inverse() == Rational(4, 3));
  CHECK(Rational(-6, -8) == a);
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0).is_zero());
  CHECK(Rational(7).is_integer());
  CHECK(!a.is_integer());
  CHECK(a.sign() == 1);
  CHECK(Rational(-1, 3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(-5, 7).abs() == Rational(5, 7));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(2, 3).pow(0) == Rational(1));
  CHECK(Rational::from_string("-22/7") == Rational(-22, 7));
  CHECK(Rational(5, 10).num() == 1);
  CHECK(Rational(5, 10).den() == 2);
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(-2).str() == "-2");
  CHECK(a < Rational(4, 5));
  CHECK(Rational(Int(10) * Int(10)) == Rational(100));  // gmp expression ctor
}

TEST_CASE("factorial and double factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(12) == 479001600);
  CHECK_THROWS_AS(factorial(-1), std::domain_error);

  CHECK(double_factorial(-3) == -1);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(1) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(9) == 945);
  CHECK(double_factorial(10) == 3840);
  CHECK_THROWS_AS(double_factorial(-2), std::domain_error);
  CHECK_THROWS_AS(double_factorial(-4), std::domain_error);

  for (long k = 1; k <= 25; ++k)
    CHECK(double_factorial(k) == k * double_factorial(k - 2));
  for (long n = 1; n <= 20; ++n)
    CHECK(factorial(n) == double_factorial(n) * double_factorial(n - 1));
  // (2m+1)!! = (2m+1)!/(2^m m!)
  for (long m = 0; m <= 15; ++m)
    CHECK(double_factorial(2 * m + 1) * ipow(2, m) * factorial(m) ==
          factorial(2 * m + 1));
}

TEST_CASE("powers and binomials") {
  CHECK(ipow(2, 10) == 1024);
  CHECK(ipow(10, 0) == 1);
  CHECK(ipow(-3, 3) == -27);
  CHECK(two_pow(0) == Rational(1));
  CHECK(two_pow(7) == Rational(128));
  CHECK(two_pow(-3) == Rational(1, 8));

  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(10, 10) == 1);
  CHECK(binomial(10, -1) == 0);
  CHECK(binomial(Int(52), 5) == 2598960);
  CHECK(binomial_rat(Rational(1, 2), 3) == Rational(1, 16));
  CHECK(binomial_rat(Rational(-1), 4) == Rational(1));
  CHECK(multinomial(6, {2, 2, 2}) == 90);
  CHECK(multinomial(5, {5}) == 1);
  CHECK_THROWS_AS(multinomial(6, {2, 2}), std::invalid_argument);
}

TEST_CASE("pochhammer and falling factorials") {
  CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(pochhammer(Rational(3), 0) == Rational(1));
  CHECK(pochhammer(Rational(1), 5) == Rational(120));
  CHECK(pochhammer(Rational(-3), 5) == Rational(0));
  CHECK(pochhammer_int(Int(2), 4) == 120);
  CHECK(falling(Rational(7, 2), 2) == Rational(35, 4));
  CHECK(falling(Rational(4), 4) == Rational(24));
  CHECK_THROWS_AS(pochhammer(Rational(1), -1), std::domain_error);
  // (a)_n = Gamma-shift consistency: (a)_{m+n} = (a)_m (a+m)_n
  Rational a(5, 3);
  CHECK(pochhammer(a, 7) == pochhammer(a, 3) * pochhammer(a + Rational(3), 4));
}

TEST_CASE("stirling numbers of the second kind") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 3) == 25);
  CHECK(stirling2(6, 3) == 90);
  CHECK(stirling2(5, 0) == 0);
  CHECK(stirling2(3, 5) == 0);
  // x^n = sum_k S(n,k) x(x-1)...(x-k+1), checked as an identity at several points
  for (long n = 0; n <= 8; ++n) {
    for (Rational x : {Rational(10), Rational(7, 2), Rational(-3, 5)}) {
      Rational lhs = x.pow(n), rhs(0);
      for (long k = 0; k <= n; ++k)
        rhs += Rational(stirling2(n, k)) * falling(x, k);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("pi enclosures") {
  Rational below(311, 99), above(22, 7);
  PiBounds b4 = pi_bounds(4);
  CHECK(below < b4.lower);
  CHECK(b4.upper < above);
  for (int d = 1; d <= 40; ++d) {
    PiBounds b = pi_bounds(d);
    CHECK(b.lower < b.upper);
    Int p = ipow(10, static_cast<unsigned long>(d));
    CHECK(b.upper - b.lower == Rational(Int(1), p));
    if (d > 1) {
      PiBounds prev = pi_bounds(d - 1);
      CHECK(prev.lower <= b.lower);
      CHECK(b.upper <= prev.upper);
    }
  }
  CHECK_THROWS(pi_bounds(0));
  CHECK_THROWS(pi_bounds(pi_digit_limit() + 1));

  int old = pi_digit_limit();
  set_pi_digit_limit(200);
  PiBounds fine = pi_bounds(200);
  CHECK(fine.upper - fine.lower == Rational(Int(1), ipow(10, 200)));
  set_pi_digit_limit(old);
}

TEST_CASE("pi multiples") {
  PiMultiple pi2(Rational(1), 2);
  PiMultiple inv2(Rational(8, 3), -2);
  CHECK((pi2 * inv2).is_rational());
  CHECK((pi2 * inv2).coefficient == Rational(8, 3));
  CHECK((pi2 * Rational(3)).coefficient == Rational(3));
  PiMultiple sum = pi2 + PiMultiple(Rational(1, 2), 2);
  CHECK(sum.coefficient == Rational(3, 2));
  CHECK(sum.pi_power == 2);
  CHECK_THROWS_AS(pi2 + inv2, std::domain_error);
  // zero coefficients are neutral regardless of their nominal power
  CHECK((PiMultiple(Rational(0), 2) + inv2).coefficient == Rational(8, 3));
  CHECK((-pi2).coefficient == Rational(-1));

  PiBounds b = inv2.bounds(30);
  CHECK(b.lower < b.upper);
  // 8/(3 pi^2) = 0.27018982...
  CHECK(Rational(27, 100) < b.lower);
  CHECK(b.upper < Rational(28, 100));
  // negative power of a negative coefficient keeps the enclosure ordered
  PiBounds nb = (-inv2).bounds(30);
  CHECK(nb.lower < nb.upper);
  CHECK(nb.upper < Rational(-27, 100));
}

TEST_CASE("decimal rendering of rationals") {
  CHECK(decimal_sig(Rational(189, 640), 6) == "0.295313");
  CHECK(decimal_sig(Rational(9, 32), 6) == "0.281250");
  CHECK(decimal_sig(Rational(0), 9) == "0");
  CHECK(decimal_sig(Rational(-189, 640), 6) == "-0.295313");
  CHECK(decimal_sig(Rational(9996, 10000), 3) == "1.00");
  CHECK(decimal_sig(Rational(12345), 3) == "12300");
  CHECK(decimal_sig(Rational(1, 3), 4) == "0.3333");
  CHECK(decimal_sig(Rational(2, 3), 4) == "0.6667");
  CHECK(decimal_sig(Rational(1, 2), 1) == "0.5");
  // half-away-from-zero at the boundary digit
  CHECK(decimal_sig(Rational(25, 1000), 1) == "0.03");
  CHECK(decimal_sig(Rational(-25, 1000), 1) == "-0.03");
  // tiny and huge values switch to scientific notation
  CHECK(decimal_sig(Rational(Int(1), ipow(10, 41)), 3) == "1.00e-41");
  std::string big = decimal_sig(Rational(ipow(10, 60)), 3);
  CHECK(big == "1.00e+60");

  CHECK(decimal_fixed(Rational(1, 8), 4) == "0.1250");
  CHECK(decimal_fixed(Rational(1, 8), 2) == "0.13");
  CHECK(decimal_fixed(Rational(-1, 8), 2) == "-0.13");
  CHECK(decimal_fixed(Rational(5), 0) == "5");
  CHECK(decimal_fixed(Rational(-1, 1000), 2) == "0.00");
}

TEST_CASE("decimal rendering of pi multiples") {
  PiMultiple v(Rational(8, 3), -2);
  CHECK(decimal_sig(v, 10) == "0.2701898230");
  CHECK(decimal_fixed(v, 6) == "0.270190");
  PiMultiple r(Rational(5, 4), 0);
  CHECK(decimal_sig(r, 3) == "1.25");
}

TEST_CASE("sqrt enclosures") {
  SqrtBounds s = sqrt_bounds(Rational(2), 20);
  CHECK(s.lower * s.lower <= Rational(2));
  CHECK(s.upper * s.upper >= Rational(2));
  CHECK(s.upper - s.lower == Rational(Int(2), ipow(10, 20)));
  SqrtBounds s9 = sqrt_bounds(Rational(9), 10);
  CHECK(s9.lower <= Rational(3));
  CHECK(Rational(3) <= s9.upper);
  CHECK_THROWS_AS(sqrt_bounds(Rational(-1), 5), std::domain_error);
}

TEST_CASE("strict rational versus pi comparisons") {
  PiMultiple inv_pi(Rational(1), -1);
  CHECK(rational_below(Rational(3, 10), inv_pi, 20));
  CHECK(!rational_below(Rational(1, 3), inv_pi, 20));
  // 1/pi = 0.318309886...; an interval too coarse to decide must throw
  PiMultiple tight(Rational(1), -1);
  CHECK_THROWS(rational_below(Rational(318, 999), tight, 1));
}

TEST_CASE("rational interval arithmetic") {
  RatInterval a{Rational(1, 2), Rational(3, 4)};
  RatInterval b{Rational(-2), Rational(-1)};
  RatInterval p = a * b;
  CHECK(p.lo == Rational(-3, 2));
  CHECK(p.hi == Rational(-1, 2));
  RatInterval q = a / b;
  CHECK(q.lo == Rational(-3, 4));
  CHECK(q.hi == Rational(-1, 4));
  RatInterval s = a + b;
  CHECK(s.lo == Rational(-3, 2));
  CHECK(s.hi == Rational(-1, 4));
  RatInterval d = a - b;
  CHECK(d.lo == Rational(3, 2));
  CHECK(d.hi == Rational(11, 4));
  CHECK(a.contains(Rational(2, 3)));
  CHECK(!a.contains(Rational(1, 4)));
  RatInterval z{Rational(-1), Rational(1)};
  CHECK_THROWS_AS(a / z, std::domain_error);
  RatInterval pt = RatInterval::point(Rational(5, 7));
  CHECK(pt.lo == pt.hi);
  RatInterval pi_iv = to_interval(pi_bounds(10));
  CHECK(pi_iv.contains(Rational(314159265358LL, 100000000000LL)));
}
