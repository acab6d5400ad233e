#include "chernops/fgl.hpp"

#include <random>

#include "doctest.h"

using namespace chernops;

namespace {

const Ring Q = Ring::rationals();

// exp(k * log(x)) route, used as the second leg of the dual-route k-series check.
WeightedPoly k_series_via_log(const FormalGroupLaw& F, long k) {
  WeightedPoly kl = F.log().scaled(Rat(k));
  return F.exp().compose(std::span<const WeightedPoly>(&kl, 1));
}

void check_fgl_axioms(const FormalGroupLaw& F) {
  unsigned D = F.trunc();
  auto xyz = make_vars({{"x", 1}, {"y", 1}, {"z", 1}});
  auto x = WeightedPoly::variable(Q, xyz, D, 0);
  auto y = WeightedPoly::variable(Q, xyz, D, 1);
  auto z = WeightedPoly::variable(Q, xyz, D, 2);
  auto zero = WeightedPoly(Q, xyz, D);

  CHECK(F.apply(x, zero) == x);
  CHECK(F.apply(zero, y) == y);
  CHECK(F.apply(x, y) == F.apply(y, x));
  CHECK(F.apply(F.apply(x, y), z) == F.apply(x, F.apply(y, z)));

  // exp(log(x)) = x = log(exp(x))
  auto lg = F.log(), ex = F.exp();
  auto xt = lg.vars();
  auto xv = WeightedPoly::variable(Q, xt, D, 0);
  CHECK(ex.compose(std::span<const WeightedPoly>(&lg, 1)) == xv);
  CHECK(lg.compose(std::span<const WeightedPoly>(&ex, 1)) == xv);
}

}  // namespace

TEST_CASE("additive and multiplicative laws") {
  auto Fa = fgl_additive(2, 8);
  check_fgl_axioms(Fa);
  CHECK(Fa.coeff(1, 1) == Rat(0));

  auto Fm = fgl_multiplicative(2, 8);
  check_fgl_axioms(Fm);
  // F_m(x,y) = x + y + xy exactly
  CHECK(Fm.coeff(1, 0) == Rat(1));
  CHECK(Fm.coeff(0, 1) == Rat(1));
  CHECK(Fm.coeff(1, 1) == Rat(1));
  CHECK(Fm.series().term_count() == 3);
}

TEST_CASE("rejects a logarithm that does not start with x") {
  auto xt = make_vars("x", 1);
  WeightedPoly bad(Q, xt, 4);
  bad.add_term(Expo{1}, Rat(2));
  CHECK_THROWS_AS(FormalGroupLaw::from_log(bad, 2, 4), MathError);
}

TEST_CASE("morava logarithms") {
  // p=2, n=1, Lubin-Tate, D=8: x + x^2/2 + x^4/4 + x^8/8
  auto lg = morava_log(2, 1, {}, 8);
  CHECK(lg.term_count() == 4);
  CHECK(lg.coefficient(Expo{2}) == Rat(1, 2));
  CHECK(lg.coefficient(Expo{4}) == Rat(1, 4));
  CHECK(lg.coefficient(Expo{8}) == Rat(1, 8));

  // p=3, n=2, D=8: no term below weight 9
  auto lg2 = morava_log(3, 2, {}, 8);
  CHECK(lg2.term_count() == 1);
  CHECK(lg2.coefficient(Expo{1}) == Rat(1));

  // p=2, n=2, a=(3): x + (3/2)x^4
  std::vector<Rat> a = {Rat(3)};
  auto lg3 = morava_log(2, 2, a, 4);
  CHECK(lg3.term_count() == 2);
  CHECK(lg3.coefficient(Expo{4}) == Rat(3, 2));

  std::vector<Rat> bad = {Rat(2)};
  CHECK_THROWS_AS(morava_log(2, 1, bad, 4), MathError);
}

TEST_CASE("Lubin-Tate laws satisfy the FGL axioms and are p-integral") {
  for (auto [p, n, D] : {std::tuple<unsigned long, unsigned, unsigned>{2, 1, 8},
                         {3, 1, 9},
                         {2, 2, 8}}) {
    MoravaLaw M(p, n, {}, D);
    check_fgl_axioms(M.fgl());
    auto v = M.fgl().series().min_valuation(p);
    CHECK((!v || *v >= 0));
  }
  // spot value: p=2, n=1 has F = x + y - xy + higher
  MoravaLaw M(2, 1, {}, 4);
  CHECK(M.fgl().coeff(1, 1) == Rat(-1));
}

TEST_CASE("formal sums and inverses") {
  auto Fa = fgl_additive(2, 6);
  auto Fm = fgl_multiplicative(2, 6);
  auto st = make_vars({{"s", 1}, {"t", 1}});
  auto s = WeightedPoly::variable(Q, st, 6, 0);
  auto t = WeightedPoly::variable(Q, st, 6, 1);

  std::vector<WeightedPoly> terms = {s, t};
  CHECK(Fa.formal_sum(terms) == s + t);

  std::vector<WeightedPoly> single = {s};
  CHECK(Fm.formal_sum(single) == s);

  // F_m inverse of x: 1/(1+x) - 1 = -x + x^2 - x^3 + ...
  auto xt = make_vars("x", 1);
  auto x = WeightedPoly::variable(Q, xt, 6, 0);
  auto inv = Fm.formal_inverse(x);
  for (unsigned k = 1; k <= 6; ++k)
    CHECK(inv.coefficient(Expo{k}) == Rat(k % 2 ? -1 : 1));
  CHECK(Fm.apply(x, inv).is_zero());
}

TEST_CASE("k-series by fold and by exp(k log) agree") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> big(4, 9);
  auto Fa = fgl_additive(2, 6);
  auto Fm = fgl_multiplicative(2, 6);
  MoravaLaw M21(2, 1, {}, 6);
  MoravaLaw M31(3, 1, {}, 6);

  auto xt = make_vars("x", 1);
  auto x = WeightedPoly::variable(Q, xt, 6, 0);

  std::vector<const FormalGroupLaw*> laws = {&Fa, &Fm, &M21.fgl(), &M31.fgl()};
  for (const FormalGroupLaw* F : laws) {
    for (long k = -3; k <= 3; ++k)
      CHECK(F->k_series(k) == k_series_via_log(*F, k));
    long k = big(rng);
    CHECK(F->k_series(k) == k_series_via_log(*F, k));
    // homomorphism laws
    for (long k1 = -2; k1 <= 2; ++k1)
      for (long k2 = -2; k2 <= 2; ++k2) {
        CHECK(F->apply(F->k_series(k1), F->k_series(k2)) == F->k_series(k1 + k2));
        auto ks2 = F->k_series(k2);
        CHECK(F->k_series(k1 * k2) ==
              F->k_series(k1).compose(std::span<const WeightedPoly>(&ks2, 1)));
      }
  }
  CHECK(Fa.k_series(5) == x.scaled(Rat(5)));
  // F_m: [2]x = 2x + x^2
  auto two = Fm.k_series(2);
  CHECK(two == x.scaled(Rat(2)) + x * x);
}

TEST_CASE("height checks") {
  MoravaLaw M21(2, 1, {}, 8);
  auto h = check_height(M21.fgl(), 1);
  CHECK(h.ok);
  CHECK(h.unit == Fp(2, 1));

  // [2]x mod 2 starts at x^2 with a unit; below nothing
  auto ps = M21.fgl().k_series(2);
  CHECK(reduce_mod_p(ps.coefficient(Expo{1}), 2).is_zero());

  auto Fa = fgl_additive(2, 8);
  CHECK_FALSE(check_height(Fa, 1).ok);

  auto Fm = fgl_multiplicative(2, 8);
  auto hm = check_height(Fm, 1);
  CHECK(hm.ok);
  CHECK(hm.unit == Fp(2, 1));

  MoravaLaw M31(3, 1, {}, 9);
  auto h31 = check_height(M31.fgl(), 1);
  CHECK(h31.ok);
  CHECK(h31.unit == Fp(3, 1));

  CHECK_THROWS_AS(check_height(MoravaLaw(2, 2, {}, 3).fgl(), 2), MathError);
}

TEST_CASE("morava grading of the coefficient table") {
  MoravaLaw M22(2, 2, {}, 8);
  CHECK(check_morava_grading(M22.fgl(), 2, 2));

  auto Fm = fgl_multiplicative(2, 8);
  CHECK_FALSE(check_morava_grading(Fm, 2, 2));

  auto Fa = fgl_additive(2, 8);
  CHECK(check_morava_grading(Fa, 2, 2));
  CHECK(check_morava_grading(MoravaLaw(2, 1, {}, 8).fgl(), 2, 1));  // modulus 1
}

TEST_CASE("araki generator images") {
  // Lubin-Tate p=2, n=1: v_1 = 2(1-2)(1/2) = -1, and -1 = 1 mod 2
  MoravaLaw M21(2, 1, {}, 8);
  auto v = araki_v(M21, 2);
  CHECK(v[0] == Rat(-1));
  CHECK(reduce_mod_p(v[0], 2) == reduce_mod_p(M21.a(1), 2));

  // n = 2: v_1 = 0
  MoravaLaw M22(2, 2, {}, 8);
  auto v22 = araki_v(M22, 4);
  CHECK(v22[0] == Rat(0));
  CHECK(v22[2] == Rat(0));
  CHECK(reduce_mod_p(v22[1], 2) == reduce_mod_p(M22.a(1), 2));

  // p=3, n=1: v_1 = 1 mod 3
  MoravaLaw M31(3, 1, {}, 9);
  auto v31 = araki_v(M31, 2);
  CHECK(reduce_mod_p(v31[0], 3) == Fp(3, 1));

  // a non-default valid sequence: a = (3, -27/7) comes from choosing v_2 = 0
  // in the Araki recursion, so pi(v) = (-3, 0) and the law stays 2-integral
  std::vector<Rat> a = {Rat(3), Rat(-27, 7)};
  MoravaLaw M(2, 1, a, 7);
  auto vm = araki_v(M, 2);
  CHECK(vm[0] == Rat(-3));
  CHECK(vm[1] == Rat(0));
  auto fv = M.fgl().series().min_valuation(2);
  CHECK((!fv || *fv >= 0));
  for (unsigned k = 1; k <= 2; ++k) {
    Fp lhs = reduce_mod_p(M.a(k), 2);
    Fp rhs = reduce_mod_p(M.a(1), 2);
    for (unsigned s = 1; s < k; ++s) rhs = rhs * reduce_mod_p(M.a(1), 2);
    CHECK(lhs == rhs);
  }

  // an arbitrary unit sequence need not define a law over Z_(p): the Araki
  // recursion flags it
  std::vector<Rat> bad = {Rat(3), Rat(1), Rat(5)};
  MoravaLaw Mbad(2, 1, bad, 8);
  CHECK_THROWS_WITH_AS(araki_v(Mbad, 3), doctest::Contains("ArakiInconsistent"),
                       MathError);
}

TEST_CASE("fgl morphisms") {
  MoravaLaw M21(2, 1, {}, 8);
  auto Fm = fgl_multiplicative(2, 8);
  auto Fa = fgl_additive(2, 8);
  auto xt = make_vars("x", 1);
  auto x = WeightedPoly::variable(Q, xt, 8, 0);

  // identity morphism
  CHECK(fgl_morphism_check(x, M21.fgl(), M21.fgl()));
  // the logarithm is a morphism to the additive law
  CHECK(fgl_morphism_check(M21.fgl().log(), M21.fgl(), Fa));
  // Artin-Hasse composite: K(1) -> F_m, p-integral
  for (unsigned long p : {2ul, 3ul}) {
    MoravaLaw K1(p, 1, {}, 8);
    auto ah = artin_hasse_series(p, 8);
    CHECK(fgl_morphism_check(ah, K1.fgl(), fgl_multiplicative(p, 8)));
    auto v = ah.min_valuation(p);
    CHECK((!v || *v >= 0));
  }
  // a non-morphism
  CHECK_FALSE(fgl_morphism_check(x + x * x, M21.fgl(), M21.fgl()));
}
