// Empirical drift diagnostics for the walk's potential function
//   f(d, a, a') = d^{3/2} - min(c sqrt(d), a d) - min(c sqrt(d), a' d),
// sampled step by step along simulated walks. Per-step changes are binned
// by (membership in A = {d < d_star}, decade of d, angle bands at the
// epsilon cutoffs); conditional expectations are estimated by these binned
// empirical averages, the standard surrogate for filtration conditioning.

#ifndef RANCHER_LYAPUNOV_HPP
#define RANCHER_LYAPUNOV_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rancher {

struct DriftConfig {
  double c = 1.0 / 6.0;
  double d_star = 30.0;
  double epsilon = 0.39269908169872414;  // pi/8 angle cutoff for the bands

  void validate() const;
};

// f value at one state; throws std::invalid_argument for d < 0.
double f_value(double d, double alpha, double alpha_prime,
               const DriftConfig& cfg);

// Analytic lower bound of f over all states: min_d d^{3/2} - 2c sqrt(d).
double f_lower_bound(const DriftConfig& cfg);

struct DriftSample {
  double d = 0.0;
  double alpha = 0.0;
  double alpha_prime = 0.0;
  double f = 0.0;
  double delta_f = 0.0;
  bool in_A = false;
};

struct SurveyParams {
  std::uint64_t steps = 100000;
  std::uint64_t reps = 50;
  std::uint64_t seed = 0;
  DriftConfig cfg;
  std::uint64_t m = 64;  // lag of the m-step gain check
  int threads = 0;
};

struct DriftBin {
  bool in_A = false;
  int d_decade = 0;     // floor(log10 d), clamped; kDZeroDecade for d ~ 0
  int band_lo = 0;      // angle bands 0:[0,eps) 1:[eps,pi-eps) 2:[pi-eps,pi]
  int band_hi = 0;      // of {alpha, alpha'}, unordered pair as lo <= hi
  std::uint64_t count = 0;
  double mean_delta_f = 0.0;
  double se_delta_f = 0.0;
  double max_delta_f = 0.0;
};

inline constexpr int kDZeroDecade = -100;

struct ConditionReport {
  std::string name;
  bool pass = false;
  std::uint64_t count = 0;
  double estimate = 0.0;
  double se = 0.0;
  std::string note;
};

struct SurveyReport {
  std::vector<DriftBin> bins;
  std::vector<ConditionReport> conditions;
  std::uint64_t samples = 0;           // drift samples (non-degenerate pairs)
  std::uint64_t degenerate_steps = 0;  // steps without diagnostics
  std::uint64_t dx_violations = 0;     // steps with | ||x'|| - ||x|| | > 1
  double min_f = 0.0;
  double max_delta_f_on_A = 0.0;
  double bound_cap = 0.0;  // f_value(d_star + 1, 0, 0) + 10
  double pooled_gain_mean = 0.0;
  std::uint64_t pooled_gain_count = 0;
};

// One pass over reps x steps walk steps computing both the binned drift
// report and the per-condition checks.
SurveyReport run_survey(const SurveyParams& params);

// Binned drift slice of the survey.
SurveyReport drift_survey(const SurveyParams& params);

// Per-condition checks a drift-based escape argument needs (same engine;
// conditions are filled either way).
SurveyReport hypothesis_check(const SurveyParams& params);

std::string d_decade_label(int decade);
std::string band_label(int band);

}  // namespace rancher

#endif
