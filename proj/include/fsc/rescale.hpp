#ifndef FSC_RESCALE_HPP
#define FSC_RESCALE_HPP

#include <vector>

#include "fsc/grid_field.hpp"
#include "fsc/spaces.hpp"

namespace fsc {

/// u_r(x) = u(rx) for r in (0,1], evaluated through the trigonometric
/// interpolant of u on the same grid.  The evaluation points rx stay inside
/// the box, so no aliasing occurs; SupportTooLarge guards fields whose
/// deviation from the boundary value spreads over more than box/4 per axis.
GridField rescale_field(const GridField& u, double r);

struct RescalingLaw {
  Rational alpha;
  bool vanishing_at_zero = false;
  bool marginal = false;  // exponent only attainable with an epsilon loss
};

/// alpha = min(s - n/p, 0) generically, min(s - n/p, 1) for fields vanishing
/// at the origin (which needs s > n/p).  Marginal exactly at the kink.
RescalingLaw predicted_alpha(const SpaceSpec& sp, bool vanishing_at_zero);

/// The fixed localization bump used by the exponent fit: a tensor product of
/// smooth_profile(|x|/(0.225 L)) per axis, identically 1 on the admissible
/// support scale and 0 before the box edge.
GridField chi_cutoff_field(const GridField& grid_shape);

struct RescaleFit {
  double slope = 0;
  double max_residual = 0;  // worst |log-norm - fit| over the r list
  std::vector<double> r_values;
  std::vector<double> norms;
  RescalingLaw predicted;
};

/// Least-squares slope of log ||chi u_r|| against log r.
RescaleFit fit_rescaling_exponent(const GridField& u, const SpaceSpec& sp,
                                  bool vanishing_at_zero,
                                  const std::vector<double>& r_list);

}  // namespace fsc

#endif
