#include <doctest.h>

#include "charflow/fricke.hpp"
#include "charflow/sampling.hpp"

using namespace charflow;

namespace {
Character<Rational> rat(long x, long y, long z, Component c = Component::C11) {
  return {Rational(x), Rational(y), Rational(z), c};
}
}  // namespace

TEST_SUITE("fricke") {

TEST_CASE("in_omega0_M") {
  auto v = in_omega0_M(rat(3, 2, -3));
  CHECK(v.member);
  REQUIRE(v.inequalities.size() == 2);
  CHECK(v.inequalities[0].expr == "z < -2");
  CHECK(v.inequalities[1].expr == "zbar < -2");

  CHECK_FALSE(in_omega0_M(rat(1, 1, -1)).member);  // z > -2
  Character<double> u{-0.2, 12, -10, Component::C11};
  CHECK_FALSE(in_omega0_M(u).member);  // zbar = 12.4

  // boundary is excluded: z = -2 exactly
  CHECK_FALSE(in_omega0_M(rat(3, 2, -2)).member);
}

TEST_CASE("in_omega0_K") {
  auto v = in_omega0_K(rat(3, 3, 3));
  CHECK(v.member);  // 9 + 9 - 27 + 4 = -5 < 0
  CHECK(v.inequalities[0].value == Rational(-5));
  CHECK(kappa(rat(3, 3, 3)) == Rational(16));

  CHECK_FALSE(in_omega0_K(rat(0, 0, 0)).member);  // 4 > 0

  auto w = in_omega0_K(rat(3, 3, 3, Component::C01));
  CHECK(w.member);  // y^2 + z^2 - xyz + 4 = -5 < 0

  CHECK_THROWS_AS((void)in_omega0_K(rat(3, 3, 3, Component::C10)), ComponentMismatch);
}

TEST_CASE("pants_pullback") {
  auto p = pants_pullback(rat(5, 3, 3, Component::C01));
  CHECK(p.first == Rational(5));
  CHECK(p.second == Rational(5));
  CHECK(p.third == Rational(-25));  // 9 + 9 - 45 + 2
  CHECK(p.discrete);
  CHECK_THROWS_AS((void)pants_pullback(rat(5, 3, 3)), ComponentMismatch);
}

TEST_CASE("qps_pushforward") {
  auto q = qps_pushforward(rat(3, 2, -3));
  CHECK(q.a == Rational(-3));
  CHECK(q.b == Rational(-3));
  CHECK(q.c_ == Rational(-3));
  CHECK(q.d == Rational(-3));
  CHECK(q.t_ab == Rational(-11));
  CHECK(q.t_bc == Rational(-6));
  CHECK(q.t_ca == Rational(-24));

  auto r = qps_pushforward(rat(0, 0, 7));
  CHECK(r.a == Rational(7));
  CHECK(r.b == Rational(-7));
  CHECK(r.t_ab == Rational(-2));
  CHECK(r.t_bc == Rational(-2));
  CHECK(r.t_ca == Rational(47));  // z^2 - 2
}

TEST_CASE("qps image satisfies the Fricke relation exactly") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    auto u = random_rational_character(rng);
    CHECK(fricke_relation_residual(qps_pushforward(u)) == Rational(0));
  }
}

TEST_CASE("keen_check") {
  CHECK(keen_check(qps_pushforward(rat(3, 2, -3))));
  Character<double> u{0.1, 0.1, 1, Component::C11};
  CHECK_FALSE(keen_check(qps_pushforward(u)));  // a = 1 > -2
}

TEST_CASE("translate_fricke") {
  auto u = rat(3, 2, -3);
  auto w = word_from_string("xzy");
  auto v = apply_word(w, u);
  CHECK_FALSE(in_omega0_M(v).member);
  CHECK(translate_fricke(v, w).member);  // v lies in w * Omega_0^M
}

TEST_CASE("membership via sampled points") {
  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    auto u = sample_omega0_M(-20, rng);
    CHECK(in_omega0_M(u).member);
    CHECK(kappa(u) == doctest::Approx(-20));
  }
}

}  // TEST_SUITE
