#pragma once

#include "ultrawave/mra.hpp"

namespace ultrawave {

// Depth-J locally constant approximation of a fractal function with a
// certified uniform error bound.
struct TruncatedFractal {
  enum class Kind { Weierstrass, Cantor } kind = Kind::Weierstrass;
  int depth = 1;
  StepFunction approx;
  Rat sup_error = Rat(0);  // certified bound on ||exact - approx||_inf

  TruncatedFractal(Kind k, int J, StepFunction a, Rat e)
      : kind(k), depth(J), approx(std::move(a)), sup_error(std::move(e)) {}
};

// Binary-digit sum function on P^1 of K_2, truncated at depth J (J <= 20).
TruncatedFractal weierstrass_truncate(int J);

// 3-adic Cantor-type function on P^1 of K_3, truncated at depth J (J <= 13).
// Balls whose first J digits contain no zero carry the truncated prefix value
// plus the 2^{-J} continuation constant; the ambiguity is within sup_error.
TruncatedFractal cantor_truncate(int J);

struct FractalFTReport {
  explicit FractalFTReport(StepFunction f) : ft(std::move(f)) {}

  StepFunction ft;
  Rat value_at_zero = Rat(0);     // equals the Haar integral of the truncation
  double claimed_constant = 0.0;  // the constant the transform is compared against
  int claim_shell_max = 0;        // shells m <= this value are compared
  struct ShellRow {
    int m;
    double mean_abs;      // |shell average of the transform|
    double max_dev;       // max |piece value - claimed constant| on the shell
  };
  std::vector<ShellRow> rows;
  Rat l1_error_bound = Rat(0);    // ||FT_exact - FT_J||_inf <= sup_error * |support|
};

// Exact transform of the truncation plus an informational comparison against
// the claimed constant-transform values.
FractalFTReport fractal_ft_profile(const TruncatedFractal& f);

// Packet recursion driven by an arbitrary mother step function (time domain,
// factor q, s = 0 normalization).
StepFunction packet_time_from_mother(const FilterBank& bank, const StepFunction& mother,
                                     unsigned long n);

struct ExamplePacketReport {
  std::vector<CheckItem> items;
  bool all_pass = true;
  bool exact = true;
  double max_offdiag_abs = 0.0;
  double truncation_bound = 0.0;  // propagated bound vs the untruncated object

  void add(CheckItem it) {
    all_pass = all_pass && it.pass;
    items.push_back(std::move(it));
  }
};

// Packetized example systems:
//   id 8  : Haar packets convolved with kappa_{-s/2}, any supported q
//   id 9  : depth-J Weierstrass mother (q = 2), L^2-normalized
//   id 10 : depth-J Cantor mother (q = 3), L^2-normalized
// The Gram over translations k, l < k_range at fixed n is checked against
// delta_{k,l}; for 9/10 the propagated truncation bound is reported.
ExamplePacketReport example_packets(const FieldParams& fp, int id, int j, unsigned long n,
                                    unsigned long k_range, const SobolevParams& sp,
                                    int J_depth = 8);

}  // namespace ultrawave
