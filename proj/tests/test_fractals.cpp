#include "doctest.h"
#include "ultrawave/fractals.hpp"

using namespace ultrawave;

TEST_CASE("binary fractal truncation values") {
  TruncatedFractal f1 = weierstrass_truncate(1);
  FieldParams fp = f1.approx.params();
  // x_1 = 0 ball carries 0, x_1 = 1 ball carries 1/2
  CHECK(f1.approx.value_at(FieldElement::zero(fp)).is_zero());
  CHECK(f1.approx.value_at(FieldElement::prime_pow(fp, 1)) ==
        Cyclo::from_rat(2, Rat(1, 2)));
  CHECK(f1.sup_error == Rat(1, 2));

  TruncatedFractal f2 = weierstrass_truncate(2);
  FieldElement t = FieldElement::prime_pow(fp, 1);
  FieldElement t2 = FieldElement::prime_pow(fp, 2);
  CHECK(f2.approx.value_at(FieldElement::zero(fp)).is_zero());
  CHECK(f2.approx.value_at(t2) == Cyclo::from_rat(2, Rat(1, 4)));
  CHECK(f2.approx.value_at(t) == Cyclo::from_rat(2, Rat(1, 2)));
  CHECK(f2.approx.value_at(t + t2) == Cyclo::from_rat(2, Rat(3, 4)));

  // value off the support
  CHECK(f2.approx.value_at(FieldElement::one(fp)).is_zero());
}

TEST_CASE("binary fractal integrals increase to 1/4") {
  Rat prev(0);
  for (int J = 1; J <= 8; ++J) {
    TruncatedFractal f = weierstrass_truncate(J);
    Rat v = f.approx.integrate().as_rational();
    CHECK(v == (Rat(1) - rat_pow(2, -J)) / 4);
    CHECK(v >= prev);
    // Cauchy increments bounded by 2^{-J} |P^1|
    if (J > 1) CHECK(v - prev <= rat_pow(2, -(J - 1)) * Rat(1, 2));
    prev = v;
  }
}

TEST_CASE("ternary fractal truncation values") {
  TruncatedFractal f1 = cantor_truncate(1);
  FieldParams fp = f1.approx.params();
  FieldElement t = FieldElement::prime_pow(fp, 1);
  // first digit 0 resolves immediately to 1/2
  CHECK(f1.approx.value_at(FieldElement::zero(fp)) == Cyclo::from_rat(3, Rat(1, 2)));
  // first digit 1 is still pending: truncated prefix plus the 2^{-1} window
  CHECK(f1.approx.value_at(t) == Cyclo::from_rat(3, Rat(1, 2)));
  // first digit 2 contributes (2-1)/2 plus the window
  CHECK(f1.approx.value_at(t.scaled(gf_from_index(fp, 2))) == Cyclo::one(3));
  CHECK(f1.sup_error == Rat(1, 2));

  // depth 2: digits (1,0) resolve with k = 2: (1-1)/2 + 1/4
  TruncatedFractal f2 = cantor_truncate(2);
  CHECK(f2.approx.value_at(t) == Cyclo::from_rat(3, Rat(1, 4)));
  // digits (2,0): (2-1)/2 + 1/4 = 3/4
  CHECK(f2.approx.value_at(t.scaled(gf_from_index(fp, 2))) ==
        Cyclo::from_rat(3, Rat(3, 4)));
}

TEST_CASE("truncations are uniformly Cauchy at the stated rate") {
  for (int J = 1; J <= 6; ++J) {
    TruncatedFractal a = weierstrass_truncate(J);
    TruncatedFractal b = weierstrass_truncate(J + 1);
    StepFunction diff = b.approx - a.approx;
    CHECK(diff.coeffs_rational());
    CHECK(diff.sup_abs_rational() <= rat_pow(2, -J));

    TruncatedFractal c = cantor_truncate(J);
    TruncatedFractal d = cantor_truncate(J + 1);
    StepFunction cdiff = d.approx - c.approx;
    CHECK(cdiff.coeffs_rational());
    CHECK(cdiff.sup_abs_rational() <= rat_pow(2, -J));
  }
}

TEST_CASE("child averages stay within the refinement rate") {
  for (int J = 1; J <= 5; ++J) {
    TruncatedFractal a = cantor_truncate(J);
    TruncatedFractal b = cantor_truncate(J + 1);
    FieldParams fp = a.approx.params();
    for (auto& c : enumerate_subball_centers(Ball::fractional_ideal(fp, 1), J + 1)) {
      Ball parent(c, J + 1);
      Rat parent_val = a.approx.value_at(c).as_rational();
      Rat avg(0);
      for (const auto& ch : parent.children())
        avg += b.approx.value_at(ch.center).as_rational();
      avg /= fp.q;
      Rat dev = avg - parent_val;
      if (dev < 0) dev = -dev;
      CHECK(dev <= rat_pow(2, -J));
    }
  }
}

TEST_CASE("transform report carries exact integrals and bounds") {
  TruncatedFractal f = weierstrass_truncate(6);
  FractalFTReport rep = fractal_ft_profile(f);
  CHECK(rep.value_at_zero == f.approx.integrate().as_rational());
  CHECK(rep.l1_error_bound == f.sup_error * Rat(1, 2));
  CHECK(rep.rows.size() >= 3);

  TruncatedFractal c = cantor_truncate(5);
  FractalFTReport crep = fractal_ft_profile(c);
  CHECK(crep.value_at_zero == c.approx.integrate().as_rational());
  CHECK(crep.l1_error_bound == c.sup_error * Rat(1, 3));
}

TEST_CASE("transform differences shrink at the certified rate") {
  for (int J = 1; J <= 5; ++J) {
    TruncatedFractal a = weierstrass_truncate(J);
    TruncatedFractal b = weierstrass_truncate(J + 1);
    StepFunction diff = b.approx.fourier() - a.approx.fourier();
    Rat bound2 = rat_pow(2, -J) * Rat(1, 2);
    bound2 *= bound2;
    for (const auto& piece : diff.pieces())
      CHECK(piece.coeff.abs2().as_rational() <= bound2);
  }
}

TEST_CASE("depth guards") {
  CHECK_THROWS_AS(weierstrass_truncate(0), DomainError);
  CHECK_THROWS_AS(weierstrass_truncate(21), SizeError);
  CHECK_THROWS_AS(cantor_truncate(14), SizeError);
}

TEST_CASE("packetized examples") {
  SobolevParams sp = SobolevParams::exact(Rat(1));

  // kappa-convolved base-bank packets: deltas exact for every supported q
  for (auto [p, c] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    FieldParams fp = FieldParams::make(p, c);
    ExamplePacketReport rep = example_packets(fp, 8, 0, 1, 4, sp);
    CHECK(rep.all_pass);
    CHECK(rep.exact);
  }

  // fractal mothers: normalized packets, off-diagonal within the bound
  ExamplePacketReport r9 = example_packets(FieldParams::make(2, 1), 9, 1, 3, 4, sp, 7);
  CHECK(r9.all_pass);
  CHECK(r9.truncation_bound > 0.0);
  CHECK(r9.max_offdiag_abs <= r9.truncation_bound);

  ExamplePacketReport r10 = example_packets(FieldParams::make(3, 1), 10, 0, 2, 3, sp, 5);
  CHECK(r10.all_pass);

  CHECK_THROWS_AS(example_packets(FieldParams::make(3, 1), 9, 0, 1, 2, sp), DomainError);
  CHECK_THROWS_AS(example_packets(FieldParams::make(2, 1), 10, 0, 1, 2, sp), DomainError);
}
