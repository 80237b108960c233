#ifndef FSC_BOOTSTRAP_HPP
#define FSC_BOOTSTRAP_HPP

#include <string>
#include <vector>

#include "fsc/operator_index.hpp"

namespace fsc {

struct BootstrapStep {
  IndexTriple from;
  IndexTriple to;
  std::string stage;  // initial | lower_lebesgue | raise_sigma_on_line |
                      // raise_sigma_fixed_a | d0_reduction | fine_final
  Decision justification;
};

struct BootstrapPath {
  OperatorClass op;
  IndexTriple target;
  std::vector<BootstrapStep> steps;
};

/// Step-condition check for one regularity upgrade A -> B against the path's
/// final target: hard limits H1-H2, per-step limits H3-H4, the fine-exponent
/// guards H5-H6 (F and B scales) and H7-H8 (B scale), commutator availability
/// at A and membership of B in the compatible set.
Decision check_step(const OperatorClass& op, const IndexTriple& target,
                    const IndexTriple& from, const IndexTriple& to);

/// Builds the explicit index path from the seed (d-s-1, p*, q*) to the
/// target: the initial step, then either Lebesgue lowering followed by
/// derivative raising or the constant-regularity diagonal followed by
/// derivative raising, with the fine exponent pinned to q* until the final
/// step, and one reduction step per active low-order level when d0 > 0.
BootstrapPath plan_bootstrap(const OperatorClass& op, const IndexTriple& target);

/// Re-checks a path step by step, independently of how it was produced:
/// chaining, terminal agreement, H1-H8, commutator and membership.
Decision validate_path(const OperatorClass& op, const BootstrapPath& path);

/// Planner-level step count bound used by tests and documentation:
/// 4 + d0 + ceil(n*|1/p* - 1/a|) + ceil(max(sigma-(d-s),0)) + 1.
long step_count_bound(const OperatorClass& op, const IndexTriple& target);

}  // namespace fsc

#endif
