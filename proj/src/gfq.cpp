#include "ultrawave/gfq.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ultrawave {

namespace {

bool is_prime_small(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

// Degree-2 polynomials over GF(p) are irreducible iff they have no root.
bool is_irreducible_deg2(int p, const std::array<uint8_t, 3>& m) {
  for (int x = 0; x < p; ++x) {
    int v = (m[0] + m[1] * x + m[2] * x * x) % p;
    if (v == 0) return false;
  }
  return true;
}

std::array<uint8_t, 3> builtin_modulus(int p, int c) {
  if (c == 1) return {0, 1, 0};  // formal: x (unused)
  switch (p) {
    case 2: return {1, 1, 1};  // x^2 + x + 1
    case 3: return {1, 0, 1};  // x^2 + 1
    case 5: return {2, 0, 1};  // x^2 + 2
    case 7: return {1, 0, 1};  // x^2 + 1
    default: throw DomainError("unsupported p");
  }
}

}  // namespace

FieldParams FieldParams::make(int p, int c) {
  if (!is_prime_small(p)) throw DomainError("FieldParams: p must be in {2,3,5,7}");
  if (c != 1 && c != 2) throw DomainError("FieldParams: c must be 1 or 2");
  FieldParams fp;
  fp.p = p;
  fp.c = c;
  fp.q = 1;
  for (int i = 0; i < c; ++i) fp.q *= p;
  fp.modulus = builtin_modulus(p, c);
  return fp;
}

FieldParams FieldParams::make_with_modulus(int p, int c, const std::vector<int>& mod) {
  FieldParams fp = make(p, c);
  if (c == 1) return fp;  // modulus ignored
  if (mod.size() != static_cast<size_t>(c) + 1)
    throw DomainError("FieldParams: modulus must have c+1 coefficients");
  std::array<uint8_t, 3> m{0, 0, 0};
  for (size_t i = 0; i < mod.size(); ++i) {
    if (mod[i] < 0 || mod[i] >= p) throw DomainError("FieldParams: modulus coeff out of range");
    m[i] = static_cast<uint8_t>(mod[i]);
  }
  if (m[2] != 1) throw DomainError("FieldParams: modulus must be monic");
  if (!is_irreducible_deg2(p, m)) throw DomainError("FieldParams: modulus is reducible");
  fp.modulus = m;
  return fp;
}

GFqElem gf_from_index(const FieldParams& fp, long i) {
  if (i < 0 || i >= fp.q) throw DomainError("gf_from_index: out of range");
  GFqElem a;
  a.u[0] = static_cast<uint8_t>(i % fp.p);
  a.u[1] = static_cast<uint8_t>(i / fp.p);
  return a;
}

long gf_to_index(const FieldParams& fp, const GFqElem& a) {
  return a.u[0] + static_cast<long>(fp.p) * a.u[1];
}

GFqElem gf_add(const FieldParams& fp, const GFqElem& a, const GFqElem& b) {
  GFqElem r;
  r.u[0] = static_cast<uint8_t>((a.u[0] + b.u[0]) % fp.p);
  r.u[1] = static_cast<uint8_t>((a.u[1] + b.u[1]) % fp.p);
  return r;
}

GFqElem gf_sub(const FieldParams& fp, const GFqElem& a, const GFqElem& b) {
  GFqElem r;
  r.u[0] = static_cast<uint8_t>((a.u[0] + fp.p - b.u[0]) % fp.p);
  r.u[1] = static_cast<uint8_t>((a.u[1] + fp.p - b.u[1]) % fp.p);
  return r;
}

GFqElem gf_neg(const FieldParams& fp, const GFqElem& a) {
  GFqElem z;
  return gf_sub(fp, z, a);
}

GFqElem gf_mul(const FieldParams& fp, const GFqElem& a, const GFqElem& b) {
  GFqElem r;
  if (fp.c == 1) {
    r.u[0] = static_cast<uint8_t>((a.u[0] * b.u[0]) % fp.p);
    return r;
  }
  // (a0 + a1 x)(b0 + b1 x) mod (x^2 + m1 x + m0), monic
  int p = fp.p;
  int c0 = (a.u[0] * b.u[0]) % p;
  int c1 = (a.u[0] * b.u[1] + a.u[1] * b.u[0]) % p;
  int c2 = (a.u[1] * b.u[1]) % p;
  // x^2 = -m0 - m1 x
  int m0 = fp.modulus[0], m1 = fp.modulus[1];
  c0 = (c0 + c2 * (p - m0)) % p;
  c1 = (c1 + c2 * (p - m1)) % p;
  r.u[0] = static_cast<uint8_t>(c0);
  r.u[1] = static_cast<uint8_t>(c1);
  return r;
}

GFqElem gf_inv(const FieldParams& fp, const GFqElem& a) {
  if (a.is_zero()) throw DomainError("gf_inv: zero has no inverse");
  // q <= 49: exhaustive search is plenty
  for (long i = 1; i < fp.q; ++i) {
    GFqElem b = gf_from_index(fp, i);
    GFqElem one;
    one.u[0] = 1;
    if (gf_mul(fp, a, b) == one) return b;
  }
  throw DomainError("gf_inv: no inverse found (bad field params)");
}

std::string gf_to_string(const FieldParams& fp, const GFqElem& a) {
  if (fp.c == 1) return std::to_string(static_cast<int>(a.u[0]));
  std::ostringstream os;
  os << "(" << static_cast<int>(a.u[0]) << "," << static_cast<int>(a.u[1]) << ")";
  return os.str();
}

}  // namespace ultrawave
