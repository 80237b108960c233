#ifndef FSC_MULTIPLICATION_HPP
#define FSC_MULTIPLICATION_HPP

#include <functional>
#include <vector>

#include "fsc/decision.hpp"
#include "fsc/spaces.hpp"

namespace fsc {

/// Pointwise multiplication query X^{s1,p1}_{q1} x X^{s2,p2}_{q2} -> X^{s,p}_q
/// on a bounded domain; all three spaces share the scale and the dimension.
struct MultQuery {
  SpaceSpec f1;
  SpaceSpec f2;
  SpaceSpec target;
};

MultQuery make_mult_query(SpaceSpec f1, SpaceSpec f2, SpaceSpec target);

/// Evaluates the five core index conditions, the strictness escalation at
/// the integrability boundary, and the scale's caveat list.  Sufficient
/// conditions only; no closure is attempted.
Decision may_multiply(const MultQuery& query);

/// Verdict-only evaluation sharing the clause logic; used by grid sweeps.
struct MultVerdict {
  bool verdict = false;
  bool marginal = false;
};
MultVerdict may_multiply_verdict(const MultQuery& query);

struct SweepRow {
  Rational s1, s2, s;
  Rational inv_p1, inv_p2, inv_p;
  Rational inv_q1, inv_q2, inv_q;  // effective fine exponents used
  bool verdict = false;
  bool marginal = false;
};

/// Exhaustive deterministic evaluation over the rational grids; fine grids
/// are ignored for the H and W scales.
std::vector<SweepRow> mult_grid_sweep(SpaceKind kind, int n,
                                      const std::vector<Rational>& s_values,
                                      const std::vector<Rational>& inv_p_values,
                                      const std::vector<Rational>& inv_q_values);

}  // namespace fsc

#endif
