#ifndef FSC_NORMS_HPP
#define FSC_NORMS_HPP

#include "fsc/grid_field.hpp"
#include "fsc/spaces.hpp"

namespace fsc {

/// Grid norm of u in the given space.
///  H: Bessel multiplier (1+|xi|^2)^{s/2}, then L^p.
///  F: l^q-in-k aggregate of 2^{sk} P_k u pointwise, then L^p, plus the
///     low-pass L^p term.
///  B: L^p per band, then the l^q aggregate, plus the low-pass term.
///  W: the F norm with fine exponent 2 for integer s and p otherwise.
double space_norm(const GridField& u, const SpaceSpec& sp);

}  // namespace fsc

#endif
