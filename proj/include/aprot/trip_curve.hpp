#pragma once

#include <optional>

namespace aprot {

/// Expected value of the lowest 100*alpha % tail of N(mu, sigma^2).
double cvar_gaussian(double mu, double sigma, double alpha);

/// General voltage-restrained inverse-time curve.
struct CurveParams {
  double tms = 1.0;
  double lambda_i = 0.14;
  double eta_i = 0.02;
  double l_i = 0.0;
  double lambda_v = 0.0;
  double eta_v = 1.0;
  double l_v = 1.0;
  double i_s = 1.0;  // amps
  double v_s = 0.9;  // pu
};

/// Current-only curve TMS (lambda / ((I/I_S)^eta - 1) + L). nullopt when
/// I <= I_S (no pickup).
std::optional<double> t_op_current(double i_m, double tms, double lambda, double eta, double l, double i_s);

/// Voltage-extended curve. The voltage bracket is only evaluated when
/// lambda_v != 0; otherwise it reduces to L_v. nullopt outside the pickup
/// region.
std::optional<double> t_op_full(double i_m, double v_m, const CurveParams& p);

/// 1 / (((I/I_S)^eta_i - 1) ((V_S/V)^eta_v - 1)), the trip time per unit of
/// zeta. nullopt unless I > I_S and 0 < V < V_S.
std::optional<double> curve_factor(double i_m, double v_m, double eta_i, double eta_v, double i_s, double v_s);

/// zeta-form operating time with L_i = L_v = 0.
std::optional<double> t_op_reduced(double i_m, double v_m, double zeta, double eta_i, double eta_v, double i_s,
                                   double v_s);

}  // namespace aprot
