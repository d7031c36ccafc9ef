#pragma once

#include <string>

#include "ultrawave/sobolev.hpp"

namespace ultrawave {

// Coefficient bank alpha_{k,l} (l < q subbands) defining the integral-periodic
// filters m_l(xi) = sum_k alpha_{k,l} conj(chi_k(xi)).  Banks here are
// level-independent; the level parameter of filter evaluations is kept in the
// packet operations' signatures.
struct FilterBank {
  FieldParams params;
  std::vector<std::vector<Cyclo>> taps;  // taps[l][k]

  size_t tap_count() const { return taps.empty() ? 0 : taps[0].size(); }
};

// alpha_{k,l} = q^{-1} chi(lambda(l) lambda(k) t) for k, l < q.  The induced
// filters are the coset indicators of P in D and the filter matrix is unitary.
FilterBank make_haar_bank(const FieldParams& fp);

// m_l evaluated at a point.
Cyclo filter_value(const FilterBank& bank, int l, const FieldElement& eta);

// m_l(t^{shift} xi) expanded as an explicit step function on `support`.
StepFunction filter_step_on(const FilterBank& bank, int l, int shift, const Ball& support);

struct CheckItem {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  std::string details;
};

struct FilterBankReport {
  std::vector<CheckItem> items;
  bool all_pass = true;
  double max_residual = 0.0;

  void add(CheckItem it);
};

// Tap-domain orthogonality identities, exact unitarity of the filter matrix
// on all level-`depth` cosets of D, and the row norm/orthogonality conditions.
FilterBankReport check_filter_bank(const FilterBank& bank, int depth);

// Level-dependent scaling function in frequency:
// (1 + q^{2j} |xi|^2)^{-s/2} 1_D(xi), the unique weight making the level-j
// dilated translates orthonormal and saturating the density bound.
ShellFunction sobolev_haar_scaling(const FieldParams& fp, const Rat& s, int j);

class ScalingFamily {
 public:
  ScalingFamily(const FieldParams& fp, const Rat& s) : fp_(fp), s_(s) {}
  const FieldParams& params() const { return fp_; }
  const Rat& s() const { return s_; }
  ShellFunction at_level(int j) const { return sobolev_haar_scaling(fp_, s_, j); }

 private:
  FieldParams fp_;
  Rat s_;
};

std::vector<int> qadic_digits(const FieldParams& fp, unsigned long n);

struct WaveletPacket {
  unsigned long n;
  int j;
  unsigned long k;
  std::vector<int> digits;
  ShellFunction freq;
};

// Frequency-domain step part of the mother packet w_n at level j via the
// truncated filter product; exact because every higher factor acts as the
// identity on the support.
StepFunction packet_mother_step_product(const FilterBank& bank, unsigned long n);
// Same object via the one-step recursion w_n(xi) = m_{mu1}(t xi) w_{n/q}(t xi).
StepFunction packet_mother_step_recursive(const FilterBank& bank, unsigned long n);
// Time-domain recursion with factor q (L^2 normalization, s = 0).
StepFunction packet_mother_time(const FilterBank& bank, unsigned long n);

// w^{(j)}_{j,k,n}: mother packet at level j, dilated by t^{-j}, translated by
// lambda(k) and scaled by q^{j/2}, assembled in frequency domain.
WaveletPacket wavelet_packet(const FilterBank& bank, const ScalingFamily& fam, unsigned long n,
                             int j, unsigned long k, bool check_bank = true);

struct GramResult {
  size_t dim = 0;
  bool exact = true;
  bool is_identity = false;
  double max_deviation = 0.0;  // max |entry - delta|
  std::vector<std::vector<Cyclo>> entries;  // filled when store_entries
};

// Gram matrix of the H^s inner products of w^{(j)}_{j,k,n}, n < N, k < K.
// With the Sobolev-Haar family all weights cancel and entries are exact.
GramResult packet_gram(const FilterBank& bank, const ScalingFamily& fam, int j, unsigned long N,
                       unsigned long K, const SobolevParams& sp, bool store_entries = false);

// <kappa_{-s/2} * w_{n,k}, kappa_{-s/2} * w_{m,l}>_{H^s} computed by
// frequency-domain multiplication with the kappa profile on the L^2 packets.
CValue conv_packet_gram(const FilterBank& bank, int j, unsigned long n, unsigned long m,
                        unsigned long k, unsigned long l, const SobolevParams& sp);

struct SplitResult {
  // phi_{k,l} = q^{1/2} sum_t alpha_{qk-t,l} e_t, returned as coefficient
  // vectors over t (the q^{1/2} factor enters the Gram as a factor q)
  std::vector<std::vector<Cyclo>> sequences;  // indexed (k*q + l)
  bool orthonormal = false;
  double max_residual = 0.0;
};

SplitResult split_sequence_system(const FilterBank& bank, unsigned long k_max);
SplitResult split_sequence_system(const FilterBank& bank, unsigned long k_max,
                                  const std::vector<std::vector<Cyclo>>& e_basis);

// ||P_j h||^2_{H^s} for j in [j_lo, j_hi]; P_j is the orthogonal projection
// onto the span of the level-j scaling translates.
std::vector<RealV> projection_norms(const ScalingFamily& fam, const ShellFunction& h, int j_lo,
                                    int j_hi, const SobolevParams& sp);

}  // namespace ultrawave
