#include "doctest.h"
#include "support.hpp"

using namespace parahull;
using ptest::Rng;

namespace {

Iq half_square() {
  // (n^2 + n)/2
  return Iq(QuasiPoly(IntPoly({Int(0), Int(1), Int(1)})), Int(2));
}

}  // namespace

TEST_CASE("iq ring operations on the worked examples") {
  Iq n = Iq::variable();
  Iq hs = half_square();

  Iq sum = n + hs;  // (n^2 + 3n)/2
  CHECK(sum.denominator() == 2);
  for (Int k = 0; k <= 20; ++k) CHECK(sum(k) == (k * k + 3 * k) / 2);

  Iq prod = hs * Iq(Int(2));
  CHECK(prod.denominator() == 1);
  CHECK(prod == Iq(IntPoly({Int(0), Int(1), Int(1)})));

  QuasiPoly steps(2, {IntPoly::variable(), IntPoly::linear(Int(1), Int(1))});
  Iq q(steps);
  Iq shifted = q + Iq(Int(1));
  CHECK(shifted.numerator().component(Int(0)) == IntPoly::linear(Int(1), Int(1)));
  CHECK(shifted.numerator().component(Int(1)) == IntPoly::linear(Int(1), Int(2)));
}

TEST_CASE("iq ring axioms hold pointwise") {
  Rng rng(20240811);
  for (int iter = 0; iter < 40; ++iter) {
    Iq a = ptest::rand_iq(rng), b = ptest::rand_iq(rng), c = ptest::rand_iq(rng);
    Iq sum = a + b, prod = a * b, dist = a * (b + c);
    Iq dist2 = prod + a * c;
    for (Int n = 0; n <= 200; n += 7) {
      CHECK(sum(n) == a(n) + b(n));
      CHECK(prod(n) == a(n) * b(n));
      CHECK(dist(n) == dist2(n));
    }
    // result period divides the lcm of the input periods
    std::int64_t l = checked_period_lcm(a.period(), b.period());
    CHECK(l % sum.period() == 0);
    CHECK(l % prod.period() == 0);
  }
}

TEST_CASE("iq well-formedness window check is decisive") {
  Rng rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    Iq v = ptest::rand_iq(rng);
    const QuasiPoly& p = v.numerator();
    const Int& c = v.denominator();
    Int window = lcm_of(Int(p.period()), c);
    // forward: window divisibility held at construction; sample far out
    for (Int n = 0; n < window * 10; n += std::max(Int(1), Int(window / 3)))
      CHECK(p(n) % c == 0);
    if (c > 1) {
      // perturb one component: divisibility must now fail somewhere in the window
      std::vector<IntPoly> comps = p.components();
      comps[0] = comps[0] + IntPoly(Int(1));
      QuasiPoly bad(p.period(), std::move(comps));
      bool window_fail = false;
      for (Int n = 0; n < lcm_of(Int(bad.period()), c) && !window_fail; ++n)
        if (bad(n) % c != 0) window_fail = true;
      CHECK(window_fail);
      CHECK_THROWS_AS(Iq(bad, c), std::invalid_argument);
    }
  }
}

TEST_CASE("pass_to_cycle on (n^2+n)/2") {
  Iq hs = half_square();
  CHECK(hs.pass_to_cycle(Int(2), Int(0)) == IntPoly({Int(0), Int(1), Int(2)}));
  CHECK(hs.pass_to_cycle(Int(2), Int(1)) == IntPoly({Int(1), Int(3), Int(2)}));
}

TEST_CASE("pass_to_cycle on floor((2n+1)/4) against the interpolation oracle") {
  Iq f = Iq::floor_div_linear(Int(2), Int(1), Int(4));
  // oracle: evaluate floor((8m+1)/4) at m = 0..10 and interpolate
  std::vector<std::pair<Int, Int>> pts;
  for (Int m = 0; m <= 10; ++m) pts.push_back({m, floor_div(8 * m + 1, Int(4))});
  RatPoly expect = ptest::interpolate({pts.begin(), pts.begin() + 3});
  for (const auto& [m, v] : pts) CHECK(expect(Rat(m)) == Rat(v));

  IntPoly got = f.pass_to_cycle(Int(4), Int(0));
  CHECK(RatPoly(got) == expect);
  CHECK(got == IntPoly({Int(0), Int(2)}));
}

TEST_CASE("pass_to_cycle rejects an invalid cycle") {
  Iq f = Iq::floor_div_linear(Int(1), Int(0), Int(2));  // floor(n/2), period 2
  CHECK_THROWS_AS(f.pass_to_cycle(Int(3), Int(0)), InvalidCycle);
}

TEST_CASE("pass_to_cycle round-trips through evaluation") {
  Rng rng(99);
  for (int iter = 0; iter < 25; ++iter) {
    Iq v = ptest::rand_iq(rng);
    Int pi = v.cycle_modulus();
    for (Int a = 0; a < pi; ++a) {
      IntPoly r = v.pass_to_cycle(pi, a);
      for (Int m = 0; m <= 200; m += 11) CHECK(r(m) == v(pi * m + a));
    }
  }
}

TEST_CASE("floor_div_linear worked examples") {
  Iq a = Iq::floor_div_linear(Int(2), Int(1), Int(4));
  CHECK(a(Int(6)) == 3);
  Iq b = Iq::floor_div_linear(Int(1), Int(0), Int(1));
  CHECK(b == Iq::variable());
  Iq c = Iq::floor_div_linear(Int(3), Int(2), Int(2));
  CHECK(c(Int(5)) == 8);
  // pointwise floor semantics, including negative slopes
  Iq d = Iq::floor_div_linear(Int(-3), Int(2), Int(4));
  for (Int n = 0; n <= 40; ++n) CHECK(d(n) == floor_div(-3 * n + 2, Int(4)));
}

TEST_CASE("iq_divmod on n^2+1 by 2n") {
  Iq a(IntPoly({Int(1), Int(0), Int(1)}));
  Iq b(IntPoly({Int(0), Int(2)}));
  IqDivMod qr = iq_divmod(a, b);
  CHECK(qr.threshold <= 2);
  for (Int n = std::max(Int(2), qr.threshold); n <= 50; ++n) {
    Int av = a(n), bv = b(n);
    CHECK(qr.quot(n) == av / bv);
    CHECK(qr.rem(n) == av % bv);
  }
  // expected closed forms: quot = {even: n/2, odd: (n-1)/2}, rem = {even: 1, odd: n+1}
  CHECK(qr.quot.period() == 2);
  CHECK(qr.quot.denominator() == 2);
  CHECK(qr.rem.numerator().component(Int(0)) == IntPoly(Int(1)));
  CHECK(qr.rem.numerator().component(Int(1)) == IntPoly::linear(Int(1), Int(1)));
}

TEST_CASE("iq_divmod trivial cases") {
  Iq n = Iq::variable();
  Iq np1(IntPoly::linear(Int(1), Int(1)));
  IqDivMod qr = iq_divmod(n, np1);
  CHECK(qr.quot.is_zero());
  CHECK(qr.rem == n);

  IqDivMod qr2 = iq_divmod(Iq(IntPoly::linear(Int(3), Int(0))), n);
  CHECK(qr2.quot == Iq(Int(3)));
  CHECK(qr2.rem.is_zero());
}

TEST_CASE("iq_divmod requires eventual positivity") {
  Iq neg(IntPoly::linear(Int(-1), Int(0)));
  CHECK_THROWS_AS(iq_divmod(neg, Iq::variable()), NotEventuallyPositive);
  CHECK_THROWS_AS(iq_divmod(Iq::variable(), neg), NotEventuallyPositive);
  QuasiPoly mixed(2, {IntPoly::variable(), IntPoly()});
  CHECK_THROWS_AS(iq_divmod(Iq(mixed), Iq::variable()), NotEventuallyPositive);
}

TEST_CASE("iq_divmod identity on random eventually positive pairs") {
  Rng rng(20240812);
  for (int iter = 0; iter < 20; ++iter) {
    Iq a = ptest::rand_iq_positive(rng), b = ptest::rand_iq_positive(rng);
    IqDivMod qr = iq_divmod(a, b);
    Int n0 = qr.threshold;
    for (Int n = n0; n < n0 + 120; ++n) {
      Int av = a(n), bv = b(n);
      Int q = qr.quot(n), r = qr.rem(n);
      CHECK(av == q * bv + r);
      CHECK(r >= 0);
      CHECK(r < bv);
    }
  }
}

TEST_CASE("iq_gcd on n and n+2") {
  IqGcd g = iq_gcd(Iq::variable(), Iq(IntPoly::linear(Int(1), Int(2))));
  CHECK(g.g.period() == 2);
  CHECK(g.g.numerator().component(Int(0)) == IntPoly(Int(2)));
  CHECK(g.g.numerator().component(Int(1)) == IntPoly(Int(1)));
  for (Int n = g.threshold; n < g.threshold + 60; ++n) {
    Int gv = gcd_of(n, n + 2);
    CHECK(g.g(n) == gv);
    CHECK(g.a(n) * n + g.b(n) * (n + 2) == gv);
  }
}

TEST_CASE("iq_gcd on 2n and 3n against the sampled-gcd oracle") {
  Iq a(IntPoly::linear(Int(2), Int(0))), b(IntPoly::linear(Int(3), Int(0)));
  IqGcd g = iq_gcd(a, b);
  // oracle: evaluate gcd at n = 1..50 and interpolate the (linear) answer
  std::vector<std::pair<Int, Int>> pts;
  for (Int n = 1; n <= 50; ++n) pts.push_back({n, gcd_of(2 * n, 3 * n)});
  RatPoly expect = ptest::interpolate({pts.begin(), pts.begin() + 2});
  for (const auto& [n, v] : pts) CHECK(expect(Rat(n)) == Rat(v));
  CHECK(g.g == Iq::variable());
  CHECK(RatPoly(IntPoly::variable()) == expect);
}

TEST_CASE("iq_gcd of equal arguments") {
  IqGcd g = iq_gcd(Iq::variable(), Iq::variable());
  CHECK(g.g == Iq::variable());
  for (Int n = std::max(Int(1), g.threshold); n < 40; ++n)
    CHECK(g.a(n) * n + g.b(n) * n == n);
}

TEST_CASE("iq_gcd properties on random pairs") {
  Rng rng(31337);
  for (int iter = 0; iter < 12; ++iter) {
    Iq s = ptest::rand_iq_linearish(rng), t = ptest::rand_iq_linearish(rng);
    IqGcd g = iq_gcd(s, t);
    for (Int n = g.threshold; n < g.threshold + 80; ++n) {
      Int sv = s(n), tv = t(n), gv = g.g(n);
      CHECK(gv == gcd_of(sv, tv));
      CHECK(sv % gv == 0);
      CHECK(tv % gv == 0);
      CHECK(g.a(n) * sv + g.b(n) * tv == gv);
    }
  }
}

TEST_CASE("eventual_sign worked examples") {
  RatFn a(IntPoly::linear(Int(1), Int(-5)), IntPoly::linear(Int(1), Int(1)));
  EventualSign sa = eventual_sign(a);
  CHECK(sa.sign == 1);
  CHECK(sa.threshold == 6);

  RatFn b(IntPoly::linear(Int(-1), Int(3)));
  EventualSign sb = eventual_sign(b);
  CHECK(sb.sign == -1);
  CHECK(sb.threshold == 4);

  RatFn c(IntPoly({Int(1), Int(-100), Int(1)}), IntPoly::variable());
  EventualSign sc = eventual_sign(c);
  CHECK(sc.sign == 1);
  CHECK(sc.threshold <= 102);
  for (Int n = std::max(sc.threshold, Int(100)); n <= 200; ++n) CHECK(c(n) > 0);

  EventualSign sz = eventual_sign(RatFn());
  CHECK(sz.sign == 0);
  CHECK(sz.threshold == 0);
}

TEST_CASE("eventual_sign certified on random rational functions") {
  Rng rng(4242);
  for (int iter = 0; iter < 100; ++iter) {
    RatFn r(ptest::rand_intpoly(rng, 3, 9, false), ptest::rand_intpoly(rng, 2, 9, true));
    EventualSign s = eventual_sign(r);
    for (Int n = s.threshold; n < s.threshold + 1000; n += 13) {
      Rat v = r(n);
      CHECK(sign_of(v) == s.sign);
    }
  }
}

TEST_CASE("ratfn_split worked examples") {
  {
    RatFn r(IntPoly({Int(1), Int(0), Int(2)}), IntPoly::variable());  // (2n^2+1)/n
    RatFnSplit s = ratfn_split(r);
    CHECK(s.linear == Iq(IntPoly::linear(Int(2), Int(0))));
    CHECK(s.modulus == 1);
    CHECK(s.tails[0] == RatFn(IntPoly(Int(1)), IntPoly::variable()));
  }
  {
    RatFn r(IntPoly({Int(1), Int(1), Int(1)}), IntPoly::linear(Int(1), Int(1)));
    RatFnSplit s = ratfn_split(r);
    CHECK(s.linear == Iq::variable());
    CHECK(s.tails[0] == RatFn(IntPoly(Int(1)), IntPoly::linear(Int(1), Int(1))));
  }
  {
    RatFn r(IntPoly::linear(Int(2), Int(1)), IntPoly(Int(4)));  // (2n+1)/4
    RatFnSplit s = ratfn_split(r);
    CHECK(s.linear == Iq::floor_div_linear(Int(2), Int(1), Int(4)));
    CHECK(s.modulus == 4);
    // tails: even classes 1/4, odd classes 3/4; verify pointwise n = 0..20
    for (Int n = 0; n <= 20; ++n) {
      Rat tail = s.tail(n)(n);
      CHECK(Rat(s.linear(n)) + tail == r(n));
      CHECK(tail == ((n % 2 == 0) ? Rat(1, 4) : Rat(3, 4)));
    }
  }
}

TEST_CASE("ratfn_split rejects superlinear input") {
  RatFn r(IntPoly({Int(0), Int(0), Int(1)}));  // n^2
  CHECK_THROWS_AS(ratfn_split(r), SizeTooLarge);
}

TEST_CASE("ratfn_split identity on random O(n) functions") {
  Rng rng(555);
  int done = 0;
  while (done < 40) {
    IntPoly den = ptest::rand_intpoly(rng, 2, 6, true);
    IntPoly num = ptest::rand_intpoly(rng, den.degree() + 1, 9, false);
    RatFn r(num, den);
    if (!r.is_zero() && r.size_class() > 1) continue;
    ++done;
    RatFnSplit s = ratfn_split(r);
    StableSign sd = stable_sign(r.den());
    for (Int n = std::max(s.threshold, sd.threshold); n < s.threshold + 100; ++n) {
      CHECK(Rat(s.linear(n)) + s.tail(n)(n) == r(n));
      CHECK(s.tail(n).size_class() <= 0);
    }
  }
}
