#include <random>

#include "doctest.h"
#include "ultrawave/step_function.hpp"

using namespace ultrawave;

namespace {

Cyclo rc(const FieldParams& fp, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> zp(0, fp.p - 1);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  Cyclo c = Cyclo::zeta_pow(fp.p, zp(rng)).scaled(r);
  if (c.is_zero()) c = Cyclo::one(fp.p);
  return c;
}

StepFunction rstep(const FieldParams& fp, std::mt19937& rng) {
  std::uniform_int_distribution<int> npieces(1, 5);
  std::uniform_int_distribution<int> lvl(-3, 3);
  std::uniform_int_distribution<long> coord(0, fp.q - 1);
  std::vector<StepFunction::Piece> raw;
  int n = npieces(rng);
  for (int i = 0; i < n; ++i) {
    int level = lvl(rng);
    FieldElement c(fp);
    for (int e = level - 2; e < level; ++e) {
      long v = coord(rng);
      if (v != 0) c.set_coeff(e, gf_from_index(fp, v));
    }
    raw.push_back({Ball(c, level), rc(fp, rng)});
  }
  return StepFunction::from_pieces(fp, std::move(raw));
}

}  // namespace

TEST_CASE("haar integrals of ball indicators") {
  for (int p : {2, 3}) {
    FieldParams fp = FieldParams::make(p, 1);
    CHECK(StepFunction::indicator(Ball::unit_ball(fp)).integrate() == Cyclo::one(fp.p));
    CHECK(StepFunction::indicator(Ball::fractional_ideal(fp, 1)).integrate() ==
          Cyclo::from_rat(fp.p, rat_pow(fp.q, -1)));
    StepFunction two = StepFunction::indicator(Ball::unit_ball(fp)).scaled(Rat(2));
    CHECK((two - two).integrate() == Cyclo::zero(fp.p));
  }
}

TEST_CASE("translation preserves the integral") {
  FieldParams f2 = FieldParams::make(2, 1);
  StepFunction unit = StepFunction::indicator(Ball::unit_ball(f2));
  CHECK(unit.translated(FieldElement::zero(f2)) == unit);
  StepFunction p1 = StepFunction::indicator(Ball::fractional_ideal(f2, 1));
  CHECK(p1.translated(FieldElement::one(f2)) ==
        StepFunction::indicator(Ball(FieldElement::one(f2), 1)));

  std::mt19937 rng(3);
  for (int p : {2, 3}) {
    FieldParams fp = FieldParams::make(p, 1);
    for (int i = 0; i < 50; ++i) {
      StepFunction f = rstep(fp, rng);
      FieldElement a(fp);
      a.set_coeff(-1, gf_from_index(fp, 1));
      CHECK(f.translated(a).integrate() == f.integrate());
    }
  }
}

TEST_CASE("dilation scales measure by q^j") {
  for (int p : {2, 3}) {
    FieldParams fp = FieldParams::make(p, 1);
    StepFunction unit = StepFunction::indicator(Ball::unit_ball(fp));
    CHECK(unit.dilated(1) == StepFunction::indicator(Ball::fractional_ideal(fp, -1)));
    CHECK(unit.dilated(-1) == StepFunction::indicator(Ball::fractional_ideal(fp, 1)));
    CHECK(unit.dilated(1).integrate() == Cyclo::from_rat(fp.p, Rat(fp.q)));
  }
}

TEST_CASE("ball indicator transforms") {
  for (int p : {2, 3}) {
    FieldParams fp = FieldParams::make(p, 1);
    StepFunction unit = StepFunction::indicator(Ball::unit_ball(fp));
    CHECK(unit.fourier() == unit);
    for (int k = -3; k <= 3; ++k) {
      StepFunction f = StepFunction::indicator(Ball::fractional_ideal(fp, k));
      StepFunction expect = StepFunction::indicator(Ball::fractional_ideal(fp, -k),
                                                    Cyclo::from_rat(fp.p, rat_pow(fp.q, -k)));
      CHECK(f.fourier() == expect);
    }
  }
}

TEST_CASE("transform of a shifted ball splits a shell") {
  FieldParams f2 = FieldParams::make(2, 1);
  StepFunction f = StepFunction::indicator(Ball(FieldElement::one(f2), 1));
  StepFunction fhat = f.fourier();
  Cyclo half = Cyclo::from_rat(2, Rat(1, 2));
  CHECK(fhat.value_at(FieldElement::zero(f2)) == half);
  CHECK(fhat.value_at(FieldElement::one(f2)) == half);
  CHECK(fhat.value_at(FieldElement::prime_pow(f2, -1)) == -half);
  CHECK(fhat.value_at(FieldElement::prime_pow(f2, -2)) == Cyclo::zero(2));
}

TEST_CASE("inner products") {
  FieldParams f2 = FieldParams::make(2, 1);
  StepFunction unit = StepFunction::indicator(Ball::unit_ball(f2));
  CHECK(unit.inner_l2(unit) == Cyclo::one(2));
  StepFunction a = StepFunction::indicator(Ball(FieldElement::zero(f2), 1));
  StepFunction b = StepFunction::indicator(Ball(FieldElement::one(f2), 1));
  CHECK(a.inner_l2(b) == Cyclo::zero(2));
}

TEST_CASE("involution, Parseval, multiplication formula") {
  for (int p : {2, 3}) {
    FieldParams fp = FieldParams::make(p, 1);
    std::mt19937 rng(77);
    for (int i = 0; i < 60; ++i) {
      StepFunction f = rstep(fp, rng);
      StepFunction g = rstep(fp, rng);
      CHECK(f.fourier().fourier() == f.reflected());
      CHECK(f.inner_l2(g) == f.fourier().inner_l2(g.fourier()));
      CHECK(f.fourier().multiplied(g).integrate() == f.multiplied(g.fourier()).integrate());
    }
  }
}

TEST_CASE("canonical form is idempotent and merges siblings") {
  for (int p : {2, 3}) {
    FieldParams fp = FieldParams::make(p, 1);
    // a full set of equal-coefficient children collapses to the parent
    std::vector<StepFunction::Piece> raw;
    for (const auto& ch : Ball::unit_ball(fp).children())
      raw.push_back({ch, Cyclo::from_rat(fp.p, Rat(2, 3))});
    StepFunction f = StepFunction::from_pieces(fp, std::move(raw));
    CHECK(f.piece_count() == 1);
    CHECK(f == StepFunction::indicator(Ball::unit_ball(fp), Cyclo::from_rat(fp.p, Rat(2, 3))));

    std::mt19937 rng(123);
    for (int i = 0; i < 40; ++i) {
      StepFunction g = rstep(fp, rng);
      std::vector<StepFunction::Piece> again(g.pieces().begin(), g.pieces().end());
      CHECK(StepFunction::from_pieces(fp, std::move(again)) == g);
      CHECK(g.integrate() == (g + StepFunction::zero(fp)).integrate());
    }
  }
}

TEST_CASE("dense digit transform agrees with per-piece expansion") {
  for (int p : {2, 3}) {
    FieldParams fp = FieldParams::make(p, 1);
    std::mt19937 rng(55);
    // >= 32 equal-level pieces trigger the dense path; summing the transforms
    // of the individual indicators exercises the per-piece path
    std::vector<StepFunction::Piece> raw;
    for (auto& c : enumerate_subball_centers(Ball::fractional_ideal(fp, 1), 4))
      raw.push_back({Ball(c, 4), rc(fp, rng)});
    StepFunction f = StepFunction::from_pieces(fp, std::vector<StepFunction::Piece>(raw));
    StepFunction sum = StepFunction::zero(fp);
    for (const auto& piece : raw)
      sum = sum + StepFunction::indicator(piece.ball, piece.coeff).fourier();
    CHECK(f.fourier() == sum);
  }
}

TEST_CASE("support metadata") {
  FieldParams f2 = FieldParams::make(2, 1);
  StepFunction f = StepFunction::indicator(Ball(lambda(f2, 3), 0));
  CHECK(*f.support_exponent() == 2);
  CHECK(f.support_ball()->contains_ball(Ball(lambda(f2, 3), 0)));
  CHECK(!StepFunction::zero(f2).support_exponent().has_value());
}
