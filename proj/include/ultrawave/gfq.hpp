#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ultrawave/rational.hpp"

namespace ultrawave {

// Parameters of the residue field GF(q), q = p^c.  Supported range:
// p in {2,3,5,7}, c in {1,2}.  The modulus is a monic irreducible polynomial
// of degree c over GF(p) (ignored for c = 1); a built-in table is used unless
// an explicit modulus is supplied.
struct FieldParams {
  int p = 2;
  int c = 1;
  long q = 2;
  std::array<uint8_t, 3> modulus{0, 1, 0};  // coefficients, degree <= 2, monic

  static FieldParams make(int p, int c);
  static FieldParams make_with_modulus(int p, int c, const std::vector<int>& mod);

  bool operator==(const FieldParams& o) const {
    return p == o.p && c == o.c && modulus == o.modulus;
  }
  bool operator!=(const FieldParams& o) const { return !(*this == o); }
};

// Element of GF(q) as coordinates in the basis {e_0 = 1, e_1}.
struct GFqElem {
  std::array<uint8_t, 2> u{0, 0};

  bool operator==(const GFqElem& o) const { return u == o.u; }
  bool operator!=(const GFqElem& o) const { return !(*this == o); }
  bool operator<(const GFqElem& o) const { return u < o.u; }
  bool is_zero() const { return u[0] == 0 && u[1] == 0; }
};

GFqElem gf_from_index(const FieldParams& fp, long i);
long gf_to_index(const FieldParams& fp, const GFqElem& a);

GFqElem gf_add(const FieldParams& fp, const GFqElem& a, const GFqElem& b);
GFqElem gf_sub(const FieldParams& fp, const GFqElem& a, const GFqElem& b);
GFqElem gf_neg(const FieldParams& fp, const GFqElem& a);
GFqElem gf_mul(const FieldParams& fp, const GFqElem& a, const GFqElem& b);

// Multiplicative inverse of a nonzero element.
GFqElem gf_inv(const FieldParams& fp, const GFqElem& a);

// The e_0 coordinate; the only coordinate the additive character sees.
inline int gf_e0_component(const GFqElem& a) { return a.u[0]; }

std::string gf_to_string(const FieldParams& fp, const GFqElem& a);

}  // namespace ultrawave
