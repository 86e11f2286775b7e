#pragma once

#include <utility>

#include "stlgc/controller.hpp"
#include "stlgc/core.hpp"
#include "stlgc/dynamics.hpp"

namespace stlgc {

struct PsiOutOfRange : std::runtime_error {
  PsiOutOfRange(double psi, double h1)
      : std::runtime_error("psi " + std::to_string(psi) + " outside (0, h1=" +
                           std::to_string(h1) + ")") {}
};

struct MatrixNotPD : std::runtime_error {
  explicit MatrixNotPD(const std::string& name)
      : std::runtime_error("matrix " + name + " is not positive-definite") {}
};

struct PsiConstants {
  double h1, h2, h3;
  double g1, g2;
  double psi;
};

struct LyapunovConfig {
  double psi_K = 0.05;
  double alpha_psi = 0.7;
  double V1_bar = 0.4;
  Vec3 b_a{1.0, 1.0, 11.0};
  double gamma_c = 0.2;
  double T = 17.0;       // bound horizon, s
  double eval_dt = 0.2;  // metric/evaluation grid step, s
};

struct DecayRates {
  double alpha0, alpha1, alpha2;
  double beta, beta_prime;
};

/// Proposition-1 constants for a diagonal K_R with distinct entries.
PsiConstants psi_constants(const Vec3& kR, double psi);

/// (c1, c2) tuning constants.
std::pair<double, double> c_constants(const GainSet& gains, const QuadParams& params,
                                      const PsiConstants& pc);

// The six symmetric matrices of the Lyapunov chain.
Mat6 M1_of(const GainSet& gains, const QuadParams& params, double c1);
Mat6 W1_of(const GainSet& gains, const QuadParams& params, double c1);
Mat6 M21_of(const GainSet& gains, const QuadParams& params, const PsiConstants& pc, double c2);
Mat6 M22_of(const GainSet& gains, const QuadParams& params, const PsiConstants& pc, double c2);
Mat6 W2_of(const GainSet& gains, const QuadParams& params, double c2);

/// alpha0..alpha2, beta, beta'. Throws MatrixNotPD naming the offender.
DecayRates decay_rates(const GainSet& gains, const QuadParams& params, const PsiConstants& pc,
                       double c1, double c2);

/// Translational Lyapunov value z1' M1 z1 with z1 = [e_p; e_v].
double V1_of(const Vec3& e_p, const Vec3& e_v, const Mat6& M1);

/// Proposition-2 admissibility of an initial state against a reference.
bool initial_admissible(const QuadState& s0, const RefSample& ref0, const GainSet& gains,
                        const QuadParams& params, const LyapunovConfig& cfg);

/// V2 budget as reported by the reference results (mass-denominator
/// convention; reproduces the published 1.46 at the nominal setting).
double v2_bar(const LyapunovConfig& cfg, const QuadParams& params, const PsiConstants& pc,
              double c2);

/// V2 budget with the lambda_min(J) denominator; the valid upper bound on
/// V2(0) under the Proposition-2 conditions. Used by every envelope.
double v2_budget(const LyapunovConfig& cfg, const QuadParams& params, const PsiConstants& pc,
                 double c2);

/// Closed-form L1(V1(0), V2(0), t).
double L1(double t, double V1_0, double V2_0, const DecayRates& rates);

/// Analytic stationary point of L1(V1_bar, V2_bar, .) on [0, T]:
/// returns (t_star, L1(t_star)).
std::pair<double, double> stationary_point(const DecayRates& rates, double V1_bar, double V2_bar,
                                           double T);

struct BoundProfile {
  PsiConstants pc;
  double c1 = 0.0, c2 = 0.0;
  DecayRates rates{};
  double v1_bar = 0.0;
  double v2_bar = 0.0;     // reported convention
  double v2_budget = 0.0;  // envelope convention
  double norm_p = 0.0;     // |[I 0] M1^-1/2|
  double norm_v = 0.0;     // |[0 I] M1^-1/2|
  double t_star = 0.0;
  double l1_max = 0.0;     // continuous-time max of L1
  double l_max_p = 0.0;    // max of Lp over the evaluation grid
  double l_max_v = 0.0;
  double gamma_c = 0.2;
  double T = 0.0;
  double eval_dt = 0.2;
  Mat6 M1 = Mat6::Identity();

  double L1_at(double t) const;
  double Lp(double t) const { return norm_p * L1_at(t); }
  double Lv(double t) const { return norm_v * L1_at(t); }
  /// Lp flattened at the continuous peak; non-increasing by construction.
  double Gamma(double t) const;
  double gamma(double t) const { return Gamma(t) + gamma_c; }
  double Lv_tilde(double t) const;
};

/// Assembles the whole chain for one gain set and configuration.
BoundProfile bound_profile(const GainSet& gains, const QuadParams& params,
                           const LyapunovConfig& cfg);

}  // namespace stlgc
