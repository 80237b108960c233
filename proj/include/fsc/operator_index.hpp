#ifndef FSC_OPERATOR_INDEX_HPP
#define FSC_OPERATOR_INDEX_HPP

#include <optional>
#include <string>
#include <vector>

#include "fsc/decision.hpp"
#include "fsc/spaces.hpp"

namespace fsc {

/// Differential operator class of order d whose order-|A| coefficients carry
/// s-d+|A| derivatives in the given space, with no terms below order d0.
struct OperatorClass {
  int d = 0;
  int d0 = 0;
  SpaceSpec coeff;
};

OperatorClass make_operator_class(int d, int d0, SpaceSpec coeff);

/// Parses "L[d=2,d0=0]".
std::pair<int, int> parse_operator_params(std::string_view text);
std::string render_operator_params(const OperatorClass& op);

/// A point (sigma, 1/a[, 1/b]) in the index plane; the fine slot is present
/// exactly for the F and B scales.
struct IndexTriple {
  Rational sigma;
  Rational inv_a;
  std::optional<Rational> inv_b;

  bool operator==(const IndexTriple&) const = default;
};

std::string render_triple(const IndexTriple& x);

/// Parses "sigma=RAT,a=RAT[,b=RAT]" with a,b given as exponents in (1,oo).
IndexTriple parse_triple(std::string_view text, bool expect_fine);

/// True when the coefficient space embeds in a Holder space: s > n/p.
bool coefficients_holder(const OperatorClass& op);

/// Membership of x in the compatible index set S^d_{d0}(coeff): sigma and the
/// Lebesgue regularity within their intervals plus the scale's boundary fine
/// conditions (F: two; B: four; W with fractional s: two exponent pins).
Decision mapping_ok(const OperatorClass& op, const IndexTriple& x);

struct IndexSetReport {
  Decision decision;
  std::vector<IndexTriple> canonical;  // (s+d0,p,q), (d-s,p*,q*), ((d+d0)/2,2,2)
};

/// Nonemptiness test for S^d_{d0}: s >= (d-d0)/2 and
/// 1/p - s/n <= 1/2 - ((d-d0)/2)/n, with the scale's marginal fine conditions.
IndexSetReport index_set_nonempty(const OperatorClass& op);

/// Commutator-with-cutoff mapping test: the shifted triple (sigma+1, a, b)
/// lies in S^d_{d0}, or d0 = 0 and x itself lies in S^d_0.
/// Requires Holder-continuous leading coefficients.
Decision commutator_ok(const OperatorClass& op, const IndexTriple& x);

struct RegionEdge {
  std::string label;           // low-regularity, top-order, high-regularity, bottom-order
  std::string fine_condition;  // empty when the edge carries no fine restriction
};

struct RegionPolygon {
  // CCW in the (sigma, 1/a) plane; 4 vertices generically, 2 for a segment,
  // 1 for a point.  Vertices may leave the unit strip 0 < 1/a < 1; the strip
  // bounds are not part of the four cutting inequalities.
  std::vector<std::pair<Rational, Rational>> vertices;
  std::vector<RegionEdge> edges;  // edge i joins vertex i to vertex i+1 (mod size)
};

/// The polygon cut out by the four affine index-set inequalities.
/// Raises EmptyRegion when the set is empty.
RegionPolygon region_polygon(const OperatorClass& op);

}  // namespace fsc

#endif
