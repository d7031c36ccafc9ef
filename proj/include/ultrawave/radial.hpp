#pragma once

#include <map>
#include <optional>

#include "ultrawave/step_function.hpp"

namespace ultrawave {

// Symbolic tail of a radial profile as the shell exponent m runs to one of
// the two infinities.  Shell value conventions:
//   Zero       : 0
//   Power      : A * q^(gamma*m)
//   LogLinear  : (a + b*m) * q^(gamma*m)
//   BesselPow  : (1 + q^(2m))^sigma    (used by the kappa kernels)
struct Tail {
  enum class Kind { Zero, Power, LogLinear, BesselPow } kind = Kind::Zero;
  RealV A = RealV(Rat(0));
  RealV a = RealV(Rat(0));
  RealV b = RealV(Rat(0));
  Rat gamma = Rat(0);
  Rat sigma = Rat(0);

  static Tail zero() { return Tail{}; }
  static Tail power(const RealV& A, const Rat& gamma);
  static Tail log_linear(const RealV& a, const RealV& b, const Rat& gamma);
  static Tail bessel_pow(const Rat& sigma);

  RealV value(long q, int m) const;
  // Exponent of the power-law asymptote as m -> +infinity (nullopt for Zero).
  std::optional<Rat> outer_asymptotic_exponent() const;
  // Exponent of the power-law asymptote as m -> -infinity.
  std::optional<Rat> inner_asymptotic_exponent() const;
};

// Radial function f(x) = F(|x|): explicit values on a window of shells plus
// symbolic tails on both sides.  The L1 flag is recomputed from the tails,
// never user-set.
class RadialProfile {
 public:
  RadialProfile(const FieldParams& fp, std::map<int, RealV> window, Tail inner, Tail outer);

  static RadialProfile zero(const FieldParams& fp);

  const FieldParams& params() const { return fp_; }
  const std::map<int, RealV>& window() const { return window_; }
  const Tail& inner_tail() const { return inner_; }
  const Tail& outer_tail() const { return outer_; }
  bool is_l1() const { return is_l1_; }
  bool has_compact_support() const { return outer_.kind == Tail::Kind::Zero; }

  // Value on the sphere |x| = q^m.
  RealV value_at_shell(int m) const;
  // Window bounds (meaningful only when the window is nonempty).
  int window_lo() const;
  int window_hi() const;

 private:
  FieldParams fp_;
  std::map<int, RealV> window_;
  Tail inner_, outer_;
  bool is_l1_ = false;
};

// Exact shell-sum Fourier transform of an integrable, compactly supported
// radial profile.  Window values are evaluated with closed-form tail sums;
// output tails are symbolic.
RadialProfile radial_fourier(const RadialProfile& f);

// Convert a radial profile with zero tails into the equal step function
// (finite combination of shell indicators).  Requires rational window values.
StepFunction radial_window_to_step(const RadialProfile& f);

// Shell values of a step function over [m_lo, m_hi]; throws if the function
// is not radial on that range.
std::map<int, Cyclo> step_shell_values(const StepFunction& f, int m_lo, int m_hi);

// Frequency profile of the Bessel-type kernel: m -> (1 + q^(2m))^(-s/2).
RadialProfile kappa_profile(const FieldParams& fp, const Rat& s);

// Constructors for the worked examples (radial ones).
//   1: |x|^theta on |x| <= 1          (theta > -1)
//   2: ln(1/|x|) on |x| <= 1
//   4: C |x|^(theta+vartheta-1) on |x| <= 1,  0 < theta, vartheta, theta+vartheta < 1
RadialProfile make_example_profile(const FieldParams& fp, int id, const Rat& theta,
                                   const Rat& vartheta = Rat(0));
// Example 3: indicator of P^k.
StepFunction make_example_step(const FieldParams& fp, int k);
// Example 7 is used through its frequency profile (1+|xi|^2)^theta only.
RadialProfile make_example_freq(const FieldParams& fp, const Rat& theta);

}  // namespace ultrawave
