#ifndef FSC_TRICHOTOMY_HPP
#define FSC_TRICHOTOMY_HPP

#include "fsc/grid_field.hpp"

namespace fsc {

/// Which band-interaction pattern (k,k',k'') matches:
///   1: k' <= k-4 and k-3 <= k'' <= k+3      (high-low)
///   2: k-3 <= k' <= k+3 and k'' <= k+5      (low-high)
///   3: k' >= k+4 and |k'-k''| <= 2          (high-high)
/// 0 when none applies, in which case P_k((P_{k'}u)(P_{k''}v)) = 0.
int trichotomy_pattern(int k, int kp, int kpp);

struct TrichotomyResult {
  double residual = 0;     // ||P_k((P_k' u)(P_k'' v))||_2 / (||P_k' u||_2 ||P_k'' v||_2)
  int pattern = 0;
  bool allowed = false;
};

/// Computes the normalized band-interaction residual on a 2x oversampled
/// grid (products are aliasing-free there).  Raises AliasingRisk when a
/// factor band would overflow the oversampled Nyquist band and EmptyBand
/// when a factor band carries no energy.
TrichotomyResult trichotomy_residual(const GridField& u, const GridField& v, int k, int kp,
                                     int kpp);

/// Spectral zero-padding to double resolution per axis; values of the same
/// trigonometric interpolant on the finer grid.
GridField oversample2(const GridField& u);

}  // namespace fsc

#endif
