#include "doctest.h"
#include "ultrawave/gfq.hpp"

using namespace ultrawave;

namespace {

GFqElem el(const FieldParams& fp, long i) { return gf_from_index(fp, i); }

}  // namespace

TEST_CASE("addition in prime fields") {
  FieldParams f2 = FieldParams::make(2, 1);
  CHECK(gf_add(f2, el(f2, 1), el(f2, 1)) == el(f2, 0));

  FieldParams f3 = FieldParams::make(3, 1);
  CHECK(gf_add(f3, el(f3, 2), el(f3, 2)) == el(f3, 1));
}

TEST_CASE("addition in GF(4) is coordinatewise") {
  FieldParams f4 = FieldParams::make(2, 2);
  GFqElem a, b, expect;
  a.u = {1, 1};
  b.u = {0, 1};
  expect.u = {1, 0};
  CHECK(gf_add(f4, a, b) == expect);
}

TEST_CASE("multiplication basics") {
  FieldParams f2 = FieldParams::make(2, 1);
  CHECK(gf_mul(f2, el(f2, 1), el(f2, 1)) == el(f2, 1));

  FieldParams f3 = FieldParams::make(3, 1);
  CHECK(gf_mul(f3, el(f3, 2), el(f3, 2)) == el(f3, 1));

  // GF(4) with modulus x^2 + x + 1: x * x = x + 1
  FieldParams f4 = FieldParams::make(2, 2);
  GFqElem x, expect;
  x.u = {0, 1};
  expect.u = {1, 1};
  CHECK(gf_mul(f4, x, x) == expect);
}

TEST_CASE("e0 component") {
  FieldParams f2 = FieldParams::make(2, 1);
  CHECK(gf_e0_component(el(f2, 1)) == 1);

  GFqElem e1;  // the basis element e_1 of GF(4) over GF(2)
  e1.u = {0, 1};
  CHECK(gf_e0_component(e1) == 0);

  FieldParams f3 = FieldParams::make(3, 1);
  CHECK(gf_e0_component(el(f3, 2)) == 2);
}

TEST_CASE("field axioms hold exhaustively for q <= 9") {
  for (auto [p, c] : {std::pair{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}}) {
    FieldParams fp = FieldParams::make(p, c);
    GFqElem zero = el(fp, 0);
    GFqElem one = el(fp, 1);
    for (long i = 0; i < fp.q; ++i) {
      GFqElem a = el(fp, i);
      CHECK(gf_add(fp, a, zero) == a);
      CHECK(gf_mul(fp, a, one) == a);
      if (i != 0) CHECK(gf_mul(fp, a, gf_inv(fp, a)) == one);
      for (long j = 0; j < fp.q; ++j) {
        GFqElem b = el(fp, j);
        CHECK(gf_add(fp, a, b) == gf_add(fp, b, a));
        CHECK(gf_mul(fp, a, b) == gf_mul(fp, b, a));
        for (long k = 0; k < fp.q; ++k) {
          GFqElem cc = el(fp, k);
          CHECK(gf_add(fp, gf_add(fp, a, b), cc) == gf_add(fp, a, gf_add(fp, b, cc)));
          CHECK(gf_mul(fp, gf_mul(fp, a, b), cc) == gf_mul(fp, a, gf_mul(fp, b, cc)));
          CHECK(gf_mul(fp, a, gf_add(fp, b, cc)) ==
                gf_add(fp, gf_mul(fp, a, b), gf_mul(fp, a, cc)));
        }
      }
    }
  }
}

TEST_CASE("e0 is GF(p)-linear") {
  for (auto [p, c] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    FieldParams fp = FieldParams::make(p, c);
    for (long i = 0; i < fp.q; ++i)
      for (long j = 0; j < fp.q; ++j)
        CHECK(gf_e0_component(gf_add(fp, el(fp, i), el(fp, j))) ==
              (gf_e0_component(el(fp, i)) + gf_e0_component(el(fp, j))) % fp.p);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(FieldParams::make(11, 1), DomainError);
  CHECK_THROWS_AS(FieldParams::make(2, 3), DomainError);
  // x^2 + 1 has the root x = 1 over GF(2)
  CHECK_THROWS_AS(FieldParams::make_with_modulus(2, 2, {1, 0, 1}), DomainError);
  CHECK_NOTHROW(FieldParams::make_with_modulus(2, 2, {1, 1, 1}));
}
