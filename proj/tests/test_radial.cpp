#include <cmath>
#include <random>

#include "doctest.h"
#include "ultrawave/radial.hpp"

using namespace ultrawave;

TEST_CASE("shell-sum transform matches the step transform on radial steps") {
  for (int p : {2, 3}) {
    FieldParams fp = FieldParams::make(p, 1);
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
      std::map<int, RealV> w;
      for (int m = -4; m <= 4; ++m) w.emplace(m, RealV(Rat(num(rng))));
      RadialProfile prof(fp, std::move(w), Tail::zero(), Tail::zero());
      StepFunction step = radial_window_to_step(prof);
      StepFunction fhat = step.fourier();
      RadialProfile prof_hat = radial_fourier(prof);
      auto shells = step_shell_values(fhat, -8, 8);
      for (int m = -8; m <= 8; ++m) {
        Cyclo via_radial = Cyclo::from_rat(fp.p, prof_hat.value_at_shell(m).rat());
        CHECK(shells.at(m) == via_radial);
      }
    }
  }
}

TEST_CASE("power profile head values") {
  // q = 2, theta = 1: (1 - 1/2)/(1 - 1/4) = 2/3
  FieldParams f2 = FieldParams::make(2, 1);
  RadialProfile fhat = radial_fourier(make_example_profile(f2, 1, Rat(1)));
  CHECK(fhat.value_at_shell(0).rat() == Rat(2, 3));
  CHECK(fhat.value_at_shell(-3).rat() == Rat(2, 3));

  for (int p : {2, 3}) {
    FieldParams fp = FieldParams::make(p, 1);
    for (const Rat& theta : {Rat(1), Rat(2)}) {
      RadialProfile h = radial_fourier(make_example_profile(fp, 1, theta));
      Rat expect = (Rat(1) - rat_pow(fp.q, -1)) /
                   (Rat(1) - rat_pow(fp.q, -(1 + rat_to_long(theta))));
      CHECK(h.value_at_shell(0).rat() == expect);
    }
    // theta = 1/2 runs in floating arithmetic
    RadialProfile h = radial_fourier(make_example_profile(fp, 1, Rat(1, 2)));
    double q = static_cast<double>(fp.q);
    double expect = (1.0 - 1.0 / q) / (1.0 - std::pow(q, -1.5));
    CHECK(std::abs(h.value_at_shell(0).to_double() - expect) < 1e-12);
  }
}

TEST_CASE("power profile transform has an exact power tail") {
  FieldParams f2 = FieldParams::make(2, 1);
  RadialProfile fhat = radial_fourier(make_example_profile(f2, 1, Rat(1)));
  // value q^{-2m} (head - q) beyond the window; decay order -(1+theta)
  CHECK(fhat.outer_tail().kind == Tail::Kind::Power);
  CHECK(fhat.outer_tail().gamma == Rat(-2));
  for (int m = 2; m <= 10; ++m) {
    Rat v = fhat.value_at_shell(m).rat();
    Rat vn = fhat.value_at_shell(m + 1).rat();
    CHECK(vn == v / 4);
  }
  // theta = 0 collapses to the unit-ball indicator: transform vanishes outside
  RadialProfile flat = radial_fourier(make_example_profile(f2, 1, Rat(0)));
  CHECK(flat.value_at_shell(1).is_zero());
  CHECK(flat.value_at_shell(0).rat() == Rat(1));
}

TEST_CASE("log profile head value") {
  for (int p : {2, 3}) {
    FieldParams fp = FieldParams::make(p, 1);
    RadialProfile fhat = radial_fourier(make_example_profile(fp, 2, Rat(0)));
    double q = static_cast<double>(fp.q);
    double expect = std::log(q) / q / (1.0 - 1.0 / q);
    CHECK(std::abs(fhat.value_at_shell(0).to_double() - expect) < 1e-10);
    // the transform decays like 1/|xi|
    CHECK(fhat.outer_tail().outer_asymptotic_exponent().value() == Rat(-1));
  }
}

TEST_CASE("kappa profiles evaluate exactly at integer orders") {
  FieldParams f2 = FieldParams::make(2, 1);
  CHECK(kappa_profile(f2, Rat(0)).value_at_shell(3).rat() == Rat(1));
  CHECK(kappa_profile(f2, Rat(2)).value_at_shell(1).rat() == Rat(1, 5));
  CHECK(kappa_profile(f2, Rat(-2)).value_at_shell(0).rat() == Rat(2));
  FieldParams f3 = FieldParams::make(3, 1);
  // odd orders leave the rationals: (1+1)^{1/2}
  RealV v = kappa_profile(f3, Rat(-1)).value_at_shell(0);
  CHECK(!v.exact());
  CHECK(v.to_double() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("example constructors enforce their parameter ranges") {
  FieldParams f2 = FieldParams::make(2, 1);
  CHECK_THROWS_AS(make_example_profile(f2, 1, Rat(-1)), DomainError);
  CHECK_THROWS_AS(make_example_profile(f2, 4, Rat(1, 2), Rat(3, 4)), DomainError);
  CHECK_NOTHROW(make_example_profile(f2, 4, Rat(1, 4), Rat(1, 4)));
}

TEST_CASE("transforms of non-integrable profiles are rejected") {
  FieldParams f2 = FieldParams::make(2, 1);
  std::map<int, RealV> w;
  w[0] = RealV(Rat(1));
  RadialProfile diverging(f2, std::move(w), Tail::power(RealV(Rat(1)), Rat(-1)), Tail::zero());
  CHECK(!diverging.is_l1());
  CHECK_THROWS_AS(radial_fourier(diverging), DivergenceError);
  CHECK_THROWS_AS(radial_fourier(kappa_profile(f2, Rat(2))), DomainError);
}

TEST_CASE("profile junction mismatches are rejected") {
  FieldParams f2 = FieldParams::make(2, 1);
  std::map<int, RealV> w;
  w[0] = RealV(Rat(5));  // inner tail value at m = 0 is 1
  CHECK_THROWS_AS(RadialProfile(f2, std::move(w), Tail::power(RealV(Rat(1)), Rat(1)),
                                Tail::zero()),
                  DomainError);
}
