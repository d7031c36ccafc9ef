#pragma once

#include <string>
#include <vector>

#include "ultrawave/fractals.hpp"

namespace ultrawave {

struct VerifyConfig {
  bool exact_backend = true;
  double eps = 1e-9;
};

struct VerificationReport {
  std::string name;
  std::string anchor;  // stable identifier of the verified identity
  enum class Status { Pass, Fail, Info } status = Status::Fail;
  double residual = 0.0;
  std::string details;
  double seconds = 0.0;

  bool failed() const { return status == Status::Fail; }
};

using Reports = std::vector<VerificationReport>;

// The numbered acceptance checks; each returns one or more reports.
Reports verify_character_orthonormality(const VerifyConfig& vc);  // 1
Reports verify_lambda_structure(const VerifyConfig& vc);          // 2
Reports verify_fourier_core(const VerifyConfig& vc);              // 3
Reports verify_ball_transforms(const VerifyConfig& vc);           // 4
Reports verify_power_profile(const VerifyConfig& vc);             // 5
Reports verify_log_and_kappa_profiles(const VerifyConfig& vc);    // 6
Reports verify_sobolev_norm(const VerifyConfig& vc);              // 7
Reports verify_haar_bank(const VerifyConfig& vc);                 // 8
Reports verify_bracket_identity(const VerifyConfig& vc);          // 9
Reports verify_packet_gram(const VerifyConfig& vc);               // 10
Reports verify_convolution_theorem(const VerifyConfig& vc);       // 11
Reports verify_recursion_consistency(const VerifyConfig& vc);     // 12
Reports verify_fractal_truncations(const VerifyConfig& vc);       // 13

struct SuiteResult {
  Reports reports;
  bool all_pass = true;
  double max_residual = 0.0;
  double seconds = 0.0;
};

// Runs every check (criterion 14 is the aggregate itself).
SuiteResult run_full_suite(const VerifyConfig& vc);

}  // namespace ultrawave
