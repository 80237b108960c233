#include "fsc/lp_bank.hpp"

#include <cmath>

#include "fsc/errors.hpp"

namespace fsc {

double smooth_profile(double t) {
  if (t <= 1.0) return 1.0;
  if (t >= 2.0) return 0.0;
  const double u = t - 1.0;
  return std::exp(1.0 - 1.0 / (1.0 - u * u));
}

double lp_phi(double xi_norm) { return smooth_profile(xi_norm); }

double lp_psi(double xi_norm) { return lp_phi(xi_norm) - lp_phi(2.0 * xi_norm); }

GridField lp_project(const GridField& u, int k, LPMode mode) {
  if (mode == LPMode::Band && k < 0)
    raise(Errc::RangeError, "band projections take k >= 0");
  const double scale = std::ldexp(1.0, -k);  // 2^-k
  if (mode == LPMode::Band)
    return apply_radial_multiplier(u, [scale](double r) { return lp_psi(scale * r); });
  return apply_radial_multiplier(u, [scale](double r) { return lp_phi(scale * r); });
}

int lp_max_band(const GridField& u) {
  // psi(2^-k xi) vanishes unless |xi| > 2^{k-1}.
  const double top = max_frequency(u);
  int k = 0;
  while (std::ldexp(1.0, k) <= top) ++k;  // smallest k with 2^k > top
  return k;                               // band k has support iff 2^{k-1} < top
}

}  // namespace fsc
