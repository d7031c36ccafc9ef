#pragma once

#include <complex>
#include <optional>

#include "ultrawave/radial.hpp"

namespace ultrawave {

struct SobolevParams {
  Rat s = Rat(0);
  bool exact_backend = true;
  double eps = 1e-9;

  static SobolevParams exact(const Rat& s) { return {s, true, 1e-9}; }
  static SobolevParams floating(const Rat& s, double eps) { return {s, false, eps}; }
};

// Frequency weight evaluated on the sphere |xi| = q^m; a single factor is
// (1 + q^{2(m - level)})^sigma.  Products are kept symbolically so that
// exponents cancel algebraically instead of numerically.
struct WeightFactor {
  Rat sigma;
  int level;
};

class WeightProduct {
 public:
  WeightProduct() = default;
  static WeightProduct trivial() { return WeightProduct(); }
  static WeightProduct single(const Rat& sigma, int level);

  WeightProduct times(const WeightProduct& o) const;
  bool is_trivial() const { return fs_.empty(); }
  bool all_integer() const;
  bool all_nonneg_integer() const;
  const std::vector<WeightFactor>& factors() const { return fs_; }

  // weight on the sphere |xi| = q^m; exact iff every sigma is an integer
  RealV value_at_shell(long q, int m) const;

  // Polynomial coefficients c_t with weight(m) = sum_t c_t q^{2tm}; requires
  // all_nonneg_integer().
  std::vector<Rat> expand_poly(long q) const;

  int min_level() const;
  double sigma_abs_sum() const;

 private:
  void push(const Rat& sigma, int level);
  std::vector<WeightFactor> fs_;  // sorted by level, nonzero sigmas only
};

// step * weight * optional radial multiplier, with an overall factor
// q^{half_scale/2} carried symbolically (dilation normalizations).
struct ShellFunction {
  StepFunction step;
  WeightProduct weight;
  int half_scale = 0;
  std::optional<RadialProfile> radial_extra;

  explicit ShellFunction(StepFunction s) : step(std::move(s)) {}
  ShellFunction(StepFunction s, WeightProduct w, int half = 0)
      : step(std::move(s)), weight(std::move(w)), half_scale(half) {}

  const FieldParams& params() const { return step.params(); }
};

// Exact-or-certified complex value.
struct CValue {
  bool exact = true;
  Cyclo cyc;                       // meaningful when exact
  std::complex<double> approx{0.0, 0.0};
  double err_bound = 0.0;

  static CValue from_cyclo(const Cyclo& c) {
    CValue v;
    v.exact = true;
    v.cyc = c;
    v.approx = c.to_complex();
    return v;
  }
  static CValue from_double(std::complex<double> z, double err) {
    CValue v;
    v.exact = false;
    v.cyc = Cyclo();
    v.approx = z;
    v.err_bound = err;
    return v;
  }
  double abs() const { return std::abs(approx); }
};

// <F, G>_{H^s} = integral of (1+|xi|^2)^s F(xi) conj(G(xi)) dxi, with all
// weight exponents combined symbolically.  Exact whenever the combined weight
// cancels or has nonnegative integer exponents; otherwise certified floating.
CValue hs_inner(const ShellFunction& F, const ShellFunction& G, const SobolevParams& sp);

// sum_k (1 + q^{2j} |xi + lambda(k)|^2)^s F(xi+lambda(k)) conj(G(xi+lambda(k))),
// a finite sum since F, G have bounded support.  k_count = 0 auto-computes the
// range from the supports.
CValue bracket_series(const ShellFunction& F, const ShellFunction& G, const SobolevParams& sp,
                      int j, const FieldElement& xi, unsigned long k_count = 0);

struct MembershipThreshold {
  bool all_s = false;  // compact frequency support: every s works
  Rat s_star = Rat(0);
};

// Largest-s threshold from the decay of the frequency-side profile tail.
MembershipThreshold membership_threshold(const RadialProfile& f_hat);

struct RadialNormResult {
  bool converges = false;
  double value = 0.0;
  double err_bound = 0.0;
  RealV exact_value = RealV(Rat(0));  // meaningful when exact
  bool exact = false;
};

// ||f||^2_{H^s} from the frequency-side radial profile: shell sums with
// symbolic convergence verdict and certified numeric value.
RadialNormResult radial_hs_norm(const RadialProfile& f_hat, const Rat& s, double eps = 1e-12);

}  // namespace ultrawave
