#include <random>
#include <set>

#include "doctest.h"
#include "ultrawave/field_element.hpp"

using namespace ultrawave;

namespace {

FieldElement rand_elem(const FieldParams& fp, std::mt19937& rng) {
  std::uniform_int_distribution<int> e(-4, 4);
  std::uniform_int_distribution<long> v(0, fp.q - 1);
  FieldElement x(fp);
  int lo = e(rng), hi = e(rng);
  if (lo > hi) std::swap(lo, hi);
  for (int i = lo; i <= hi; ++i) {
    long d = v(rng);
    if (d != 0) x.set_coeff(i, gf_from_index(fp, d));
  }
  return x;
}

}  // namespace

TEST_CASE("laurent arithmetic in characteristic p") {
  FieldParams f2 = FieldParams::make(2, 1);
  FieldElement pm1 = FieldElement::prime_pow(f2, -1);
  CHECK((pm1 + pm1).is_zero());

  FieldParams f3 = FieldParams::make(3, 1);
  FieldElement t = FieldElement::prime_pow(f3, 1);
  CHECK((t + t.scaled(gf_from_index(f3, 2))).is_zero());

  FieldElement one2 = FieldElement::one(f2);
  CHECK(pm1 + one2 + one2 == pm1);

  // inverse powers
  CHECK(FieldElement::prime_pow(f2, 1) * pm1 == one2);

  // Frobenius: (1 + t)^2 = 1 + t^2
  FieldElement t2 = FieldElement::prime_pow(f2, 1);
  FieldElement u = one2 + t2;
  FieldElement sq = u * u;
  CHECK(sq == one2 + FieldElement::prime_pow(f2, 2));
}

TEST_CASE("norm is multiplicative and ultrametric") {
  for (int p : {2, 3}) {
    FieldParams fp = FieldParams::make(p, 1);
    // |t^{-2} t^{-1}| = q^3
    FieldElement a = FieldElement::prime_pow(fp, -2);
    FieldElement b = FieldElement::prime_pow(fp, -1);
    CHECK((a * b).norm() == rat_pow(fp.q, 3));

    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
      FieldElement x = rand_elem(fp, rng), y = rand_elem(fp, rng);
      CHECK((x * y).norm() == x.norm() * y.norm());
      Rat mx = x.norm() > y.norm() ? x.norm() : y.norm();
      CHECK((x + y).norm() <= mx);
      if (x.norm() != y.norm()) CHECK((x + y).norm() == mx);
    }
  }
}

TEST_CASE("translation enumeration") {
  FieldParams f2 = FieldParams::make(2, 1);
  CHECK(lambda(f2, 1) == FieldElement::prime_pow(f2, -1));
  CHECK(lambda(f2, 3) ==
        FieldElement::prime_pow(f2, -1) + FieldElement::prime_pow(f2, -2));
  for (int p : {2, 3}) {
    FieldParams fp = FieldParams::make(p, 1);
    CHECK(lambda(fp, static_cast<unsigned long>(fp.q)) == FieldElement::prime_pow(fp, -2));
  }
}

TEST_CASE("composite rule and injectivity") {
  for (int p : {2, 3}) {
    FieldParams fp = FieldParams::make(p, 1);
    for (unsigned long r = 0; r < 30; ++r)
      for (int k = 0; k <= 3; ++k) {
        unsigned long qk = 1;
        for (int i = 0; i < k; ++i) qk *= static_cast<unsigned long>(fp.q);
        for (unsigned long s = 0; s < qk; ++s)
          CHECK(lambda(fp, r * qk + s) ==
                lambda(fp, r) * FieldElement::prime_pow(fp, -k) + lambda(fp, s));
      }
    std::set<std::string> keys;
    for (unsigned long n = 0; n < 200; ++n) keys.insert(lambda(fp, n).key());
    CHECK(keys.size() == 200);
  }
}

TEST_CASE("additive character values") {
  FieldParams f2 = FieldParams::make(2, 1);
  CHECK(character(FieldElement::zero(f2)) == Cyclo::one(2));
  CHECK(character(FieldElement::prime_pow(f2, -1)) == -Cyclo::one(2));
  CHECK(character(FieldElement::prime_pow(f2, -2)) == Cyclo::one(2));

  // q = 4: the e_1 direction is annihilated
  FieldParams f4 = FieldParams::make(2, 2);
  GFqElem e1;
  e1.u = {0, 1};
  CHECK(character(FieldElement::monomial(f4, e1, -1)) == Cyclo::one(2));

  FieldParams f3 = FieldParams::make(3, 1);
  CHECK(character(FieldElement::prime_pow(f3, -1)) == Cyclo::zeta_pow(3, 1));
}

TEST_CASE("character is an exact homomorphism") {
  for (int p : {2, 3}) {
    FieldParams fp = FieldParams::make(p, 1);
    std::mt19937 rng(17);
    for (int i = 0; i < 300; ++i) {
      FieldElement x = rand_elem(fp, rng), y = rand_elem(fp, rng);
      CHECK(character(x + y) == character(x) * character(y));
    }
  }
}

TEST_CASE("chi_n basics") {
  for (int p : {2, 3}) {
    FieldParams fp = FieldParams::make(p, 1);
    std::mt19937 rng(23);
    for (int i = 0; i < 20; ++i)
      CHECK(chi_n(fp, 0, rand_elem(fp, rng)) == Cyclo::one(fp.p));
    // integral-periodic: chi_k(lambda(l)) = 1
    for (unsigned long k = 0; k < 16; ++k)
      for (unsigned long l = 0; l < 16; ++l)
        CHECK(chi_n(fp, k, lambda(fp, l)) == Cyclo::one(fp.p));
  }
  FieldParams f2 = FieldParams::make(2, 1);
  CHECK(chi_n(f2, 1, FieldElement::prime_pow(f2, 1)) == Cyclo::one(2));
}

TEST_CASE("balls: children, measures, dichotomy") {
  for (int p : {2, 3}) {
    FieldParams fp = FieldParams::make(p, 1);
    Ball unit = Ball::unit_ball(fp);
    auto kids = unit.children();
    CHECK(kids.size() == static_cast<size_t>(fp.q));
    Rat total(0);
    for (const auto& k : kids) total += k.measure();
    CHECK(total == unit.measure());
    // q = 2: children of D are P and 1 + P
    if (p == 2) {
      CHECK(kids[0] == Ball(FieldElement::zero(fp), 1));
      CHECK(kids[1] == Ball(FieldElement::one(fp), 1));
    }

    std::mt19937 rng(31);
    std::uniform_int_distribution<int> lvl(-3, 3);
    for (int i = 0; i < 200; ++i) {
      Ball a(rand_elem(fp, rng), lvl(rng));
      Ball b(rand_elem(fp, rng), lvl(rng));
      bool nested = a.contains_ball(b) || b.contains_ball(a);
      // not nested means disjoint: no point of b lies in a
      if (!nested) {
        CHECK(!a.contains(b.center));
        CHECK(!b.contains(a.center));
      }
    }
  }
}

TEST_CASE("exponent window is enforced") {
  FieldParams fp = FieldParams::make(2, 1);
  CHECK_THROWS_AS(FieldElement::prime_pow(fp, 70), WindowOverflowError);
  FieldElement big = FieldElement::prime_pow(fp, 40);
  CHECK_THROWS_AS(big * big, WindowOverflowError);
}

TEST_CASE("element text syntax round-trips") {
  for (auto [p, c] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    FieldParams fp = FieldParams::make(p, c);
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> v(0, fp.q - 1);
    for (int i = 0; i < 100; ++i) {
      FieldElement x(fp);
      for (int e = -3; e <= 3; ++e) {
        long d = v(rng);
        if (d != 0) x.set_coeff(e, gf_from_index(fp, d));
      }
      CHECK(FieldElement::parse(fp, x.str()) == x);
    }
  }
  FieldParams f2 = FieldParams::make(2, 1);
  CHECK(FieldElement::parse(f2, "1*t^-1 + 1*t^0") ==
        FieldElement::prime_pow(f2, -1) + FieldElement::one(f2));
  CHECK(FieldElement::parse(f2, "0").is_zero());
}

TEST_CASE("mixed field params are rejected") {
  FieldParams f2 = FieldParams::make(2, 1);
  FieldParams f3 = FieldParams::make(3, 1);
  CHECK_THROWS_AS(FieldElement::one(f2) + FieldElement::one(f3), FieldMismatchError);
}
