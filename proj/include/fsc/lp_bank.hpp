#ifndef FSC_LP_BANK_HPP
#define FSC_LP_BANK_HPP

#include "fsc/grid_field.hpp"

namespace fsc {

/// Radial cutoff profile: 1 on [0,1], exp(1 - 1/(1-(t-1)^2)) on (1,2),
/// 0 on [2,oo).
double smooth_profile(double t);

/// phi(xi) = smooth_profile(|xi|): 1 on the unit ball, 0 outside radius 2.
double lp_phi(double xi_norm);

/// psi(xi) = phi(xi) - phi(2 xi), supported on 1/2 <= |xi| <= 2.
double lp_psi(double xi_norm);

enum class LPMode { Band, Lowpass };

/// Band projection P_k (multiplier psi(2^-k xi)) or low-pass P_{<=k}
/// (multiplier phi(2^-k xi)).
GridField lp_project(const GridField& u, int k, LPMode mode);

/// Largest band index with any support on the grid's frequencies.
int lp_max_band(const GridField& u);

}  // namespace fsc

#endif
