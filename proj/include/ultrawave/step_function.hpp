#pragma once

#include <optional>
#include <vector>

#include "ultrawave/field_element.hpp"

namespace ultrawave {

// Finite complex linear combination of indicators of disjoint balls — the
// Schwartz–Bruhat class, closed under the exact Fourier transform.
//
// Canonical form: pairwise disjoint balls, no zero coefficients, full sets of
// q equal-coefficient siblings merged into their parent, pieces sorted.  Two
// representations of the same function canonicalize identically, so equality
// of canonical forms is equality of functions.
class StepFunction {
 public:
  struct Piece {
    Ball ball;
    Cyclo coeff;
  };

  explicit StepFunction(const FieldParams& fp) : fp_(fp) {}

  // Canonicalizes `raw` interpreted as sum of coeff * indicator(ball); the
  // balls may overlap or repeat.
  static StepFunction from_pieces(const FieldParams& fp, std::vector<Piece> raw);
  static StepFunction zero(const FieldParams& fp) { return StepFunction(fp); }
  static StepFunction indicator(const Ball& b, const Cyclo& coeff);
  static StepFunction indicator(const Ball& b);

  const FieldParams& params() const { return fp_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  bool is_zero() const { return pieces_.empty(); }
  size_t piece_count() const { return pieces_.size(); }

  Cyclo value_at(const FieldElement& x) const;

  StepFunction operator+(const StepFunction& o) const;
  StepFunction operator-(const StepFunction& o) const;
  StepFunction scaled(const Cyclo& c) const;
  StepFunction scaled(const Rat& r) const;

  // x -> f(x - a)
  StepFunction translated(const FieldElement& a) const;
  // x -> f(t^j x); levels shift by -j, integral scales by q^j
  StepFunction dilated(int j) const;
  // x -> f(-x)
  StepFunction reflected() const;
  // pointwise product
  StepFunction multiplied(const StepFunction& o) const;
  // pointwise multiplication by xi -> character(sign * a * t^{shift} * xi)
  StepFunction multiplied_by_character(const FieldElement& a, int shift, bool conjugate) const;

  Cyclo integrate() const;
  Cyclo inner_l2(const StepFunction& o) const;

  StepFunction fourier() const;
  StepFunction inverse_fourier() const;

  // Smallest k with support contained in P^{-k} (nullopt when zero).
  std::optional<int> support_exponent() const;
  // Smallest ball containing the support (nullopt when zero).
  std::optional<Ball> support_ball() const;

  // All coefficients rational (no proper root-of-unity parts)?
  bool coeffs_rational() const;
  // max |coeff| over pieces for a function with rational coefficients (exact);
  // zero function gives 0
  Rat sup_abs_rational() const;

  // Pieces refined to the given level (must be >= every piece level), sorted
  // by ball key; used for aligned dot products in Gram computations.
  std::vector<std::pair<std::string, Cyclo>> refined_cells(int level) const;

  bool operator==(const StepFunction& o) const;
  bool operator!=(const StepFunction& o) const { return !(*this == o); }

 private:
  void check(const StepFunction& o) const {
    if (fp_ != o.fp_) throw FieldMismatchError("StepFunction: mixed field params");
  }
  FieldParams fp_;
  std::vector<Piece> pieces_;
};

}  // namespace ultrawave
