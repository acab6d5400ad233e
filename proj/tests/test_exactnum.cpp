#include "chernops/exactnum.hpp"

#include <random>

#include "doctest.h"

using namespace chernops;

TEST_CASE("rationals reduce to lowest terms") {
  CHECK(Rat(4, 6) == Rat(2, 3));
  CHECK(Rat(-4, -6) == Rat(2, 3));
  CHECK(Rat(4, -6).str() == "-2/3");
  CHECK(Rat(0, 7).str() == "0");
  CHECK(Rat(0, 7).den() == 1);
  CHECK(Rat(12).str() == "12");
  CHECK_THROWS_AS(Rat(1, 0), MathError);
}

TEST_CASE("rational parsing round-trips the canonical form") {
  for (const char* s : {"-5/4", "3", "0", "7/2", "-1"}) {
    CHECK(Rat::parse(s).str() == s);
  }
  CHECK(Rat::parse("4/6") == Rat(2, 3));
  CHECK_THROWS_AS(Rat::parse("x"), MathError);
  CHECK_THROWS_AS(Rat::parse("1/0"), MathError);
}

TEST_CASE("nu_p on direct factorizations") {
  CHECK(nu_p(Rat(8, 3), 2) == 3);
  CHECK(nu_p(Rat(1, 9), 3) == -2);
  CHECK(nu_p(Rat(0), 5) == std::nullopt);  // +infinity
  CHECK(nu_p(Rat(45), 3) == 2);
  CHECK_THROWS_AS(nu_p(Rat(1), 4), MathError);
}

TEST_CASE("p-integrality") {
  CHECK(is_p_integral(Rat(3, 5), 2));
  CHECK_FALSE(is_p_integral(Rat(1, 2), 2));
  CHECK(is_p_integral(Rat(0), 7));
  CHECK(is_p_unit(Rat(3, 5), 2));
  CHECK_FALSE(is_p_unit(Rat(4), 2));
  CHECK_FALSE(is_p_unit(Rat(0), 2));
}

TEST_CASE("reduction to F_p") {
  CHECK(reduce_mod_p(Rat(3, 5), 2) == Fp(2, 1));
  CHECK(reduce_mod_p(Rat(4), 2) == Fp(2, 0));
  CHECK(reduce_mod_p(Rat(1, 3), 5) == Fp(5, 2));
  CHECK_THROWS_AS(reduce_mod_p(Rat(1, 2), 2), MathError);
  try {
    reduce_mod_p(Rat(1, 2), 2);
  } catch (const MathError& e) {
    CHECK(e.code() == "NotPIntegral");
  }
}

TEST_CASE("valuation laws on random pairs") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> d(-50, 50);
  auto rnd = [&]() {
    long num = d(rng);
    long den = d(rng);
    if (den == 0) den = 1;
    return Rat(num, den);
  };
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (int iter = 0; iter < 200; ++iter) {
      Rat x = rnd(), y = rnd();
      if (x.is_zero() || y.is_zero()) continue;
      auto vx = nu_p(x, p), vy = nu_p(y, p);
      CHECK(nu_p(x * y, p) == *vx + *vy);
      auto vsum = nu_p(x + y, p);
      if (!(x + y).is_zero()) {
        CHECK(*vsum >= std::min(*vx, *vy));
        if (*vx != *vy) CHECK(*vsum == std::min(*vx, *vy));
      }
      CHECK(x * (Rat(1) / x) == Rat(1));
    }
  }
}

TEST_CASE("reduce_mod_p is a ring homomorphism on p-integral inputs") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> d(-60, 60);
  for (unsigned long p : {2ul, 3ul, 7ul}) {
    int done = 0;
    while (done < 150) {
      long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
      if (b == 0 || e == 0) continue;
      Rat x(a, b), y(c, e);
      if (!is_p_integral(x, p) || !is_p_integral(y, p)) continue;
      ++done;
      CHECK(reduce_mod_p(x + y, p) == reduce_mod_p(x, p) + reduce_mod_p(y, p));
      CHECK(reduce_mod_p(x * y, p) == reduce_mod_p(x, p) * reduce_mod_p(y, p));
    }
  }
}

TEST_CASE("prime field arithmetic") {
  Fp a(5, 3), b(5, 4);
  CHECK((a + b).value() == 2);
  CHECK((a - b).value() == 4);
  CHECK((a * b).value() == 2);
  CHECK((a.inv() * a) == Fp(5, 1));
  CHECK((-a).value() == 2);
  CHECK_THROWS_AS(Fp(4, 1), MathError);
  CHECK_THROWS_AS(Fp(5, 0).inv(), MathError);
}
