#ifndef FSC_SVG_HPP
#define FSC_SVG_HPP

#include <string>

#include "fsc/bootstrap.hpp"
#include "fsc/operator_index.hpp"

namespace fsc {

/// Region of compatible indices in the (sigma, 1/a) plane, with the unit
/// strip 0 < 1/a < 1 marked, the canonical L^2 point, and fine-restricted
/// edges dashed.
std::string region_svg(const OperatorClass& op);

/// Region plus the planned path polyline with per-stage markers.
std::string bootstrap_svg(const OperatorClass& op, const BootstrapPath& path);

}  // namespace fsc

#endif
