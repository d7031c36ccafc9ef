#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ultrawave/cyclotomic.hpp"
#include "ultrawave/gfq.hpp"

namespace ultrawave {

// Largest exponent magnitude representable; operations leaving this window
// fail loudly instead of truncating.
inline constexpr int kExponentWindow = 64;

// Element of the local field K_q as a finite-support formal Laurent series
// in the prime element t (norm |t| = 1/q).  The map stores only nonzero
// GF(q) coefficients, keyed by exponent.
class FieldElement {
 public:
  explicit FieldElement(const FieldParams& fp) : fp_(fp) {}

  static FieldElement zero(const FieldParams& fp) { return FieldElement(fp); }
  static FieldElement one(const FieldParams& fp);
  // t^k
  static FieldElement prime_pow(const FieldParams& fp, int k);
  // a * t^k for a in GF(q)
  static FieldElement monomial(const FieldParams& fp, const GFqElem& a, int k);

  const FieldParams& params() const { return fp_; }
  const std::map<int, GFqElem>& coeffs() const { return coef_; }

  bool is_zero() const { return coef_.empty(); }
  // least exponent with nonzero coefficient; nullopt for 0
  std::optional<int> valuation() const;
  // |x| = q^m with m = -valuation; is_zero() must be checked by the caller
  int norm_exponent() const;
  Rat norm() const;  // |x| as exact rational; |0| = 0

  GFqElem coeff_at(int e) const;
  void set_coeff(int e, const GFqElem& a);  // canonical: erases zeros

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement scaled(const GFqElem& a) const;

  // Drops all coefficients at exponents >= k (representative mod P^k).
  FieldElement reduced_mod_level(int k) const;

  bool operator==(const FieldElement& o) const {
    return fp_ == o.fp_ && coef_ == o.coef_;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  bool operator<(const FieldElement& o) const { return coef_ < o.coef_; }

  // Compact byte key (exponent, coordinates) for hashing.
  std::string key() const;

  std::string str() const;  // element text syntax, e.g. "1*t^-1 + 1*t^0"
  static FieldElement parse(const FieldParams& fp, const std::string& text);

 private:
  void check(const FieldElement& o) const {
    if (fp_ != o.fp_) throw FieldMismatchError("FieldElement: mixed field params");
  }
  void check_window(int e) const {
    if (e < -kExponentWindow || e > kExponentWindow)
      throw WindowOverflowError("FieldElement: exponent outside window [-64,64]");
  }
  FieldParams fp_;
  std::map<int, GFqElem> coef_;
};

// Ball c + P^k: center reduced mod P^k, radius q^{-k}, Haar measure q^{-k}.
struct Ball {
  FieldElement center;
  int level;

  Ball(const FieldElement& c, int k) : center(c.reduced_mod_level(k)), level(k) {}

  static Ball unit_ball(const FieldParams& fp) { return Ball(FieldElement::zero(fp), 0); }
  static Ball fractional_ideal(const FieldParams& fp, int k) {
    return Ball(FieldElement::zero(fp), k);
  }

  Rat measure() const;
  bool contains(const FieldElement& x) const;
  bool contains_ball(const Ball& b) const;  // nested-or-equal test
  Ball parent() const { return Ball(center, level - 1); }
  std::vector<Ball> children() const;  // the q disjoint level+1 subballs

  bool operator==(const Ball& o) const { return level == o.level && center == o.center; }
  bool operator<(const Ball& o) const {
    if (level != o.level) return level < o.level;
    return center < o.center;
  }
  std::string key() const;
};

// Centers of all level `sub_level` subballs of `b` (q^(sub_level - b.level) of them).
std::vector<FieldElement> enumerate_subball_centers(const Ball& b, int sub_level);

// Translation enumeration: canonical coset representatives of D_q in K_q.
FieldElement lambda(const FieldParams& fp, unsigned long n);

// Number of base-q digits of n (0 for n = 0).
int qadic_digit_count(const FieldParams& fp, unsigned long n);

// Additive character, trivial on D_q, nontrivial on P^{-1}; value is the
// p-th root of unity zeta_p^a with a the e_0 coordinate of the t^{-1} coefficient.
Cyclo character(const FieldElement& x);

// chi_n(x) = character(lambda(n) * x)
Cyclo chi_n(const FieldParams& fp, unsigned long n, const FieldElement& x);

}  // namespace ultrawave
