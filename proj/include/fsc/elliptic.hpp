#ifndef FSC_ELLIPTIC_HPP
#define FSC_ELLIPTIC_HPP

#include <string>
#include <vector>

#include "fsc/decision.hpp"
#include "fsc/grid_field.hpp"

namespace fsc {

/// Homogeneous constant-coefficient operator sum_{|A|=d} a^A d_A acting on
/// k-component fields over R^n; coefficients are real k x k matrices keyed
/// by the multi-index A.
struct ConstCoeffOperator {
  int n = 1;
  int k = 1;
  int d = 1;
  std::vector<std::pair<std::vector<int>, Eigen::MatrixXd>> coeffs;
};

ConstCoeffOperator make_const_coeff_operator(
    int n, int k, int d, std::vector<std::pair<std::vector<int>, Eigen::MatrixXd>> coeffs);

ConstCoeffOperator operator_from_json_text(const std::string& text);
std::string operator_to_json_text(const ConstCoeffOperator& opr);

/// Fourier symbol i^d sum_A a^A xi^A: the multiplier of the operator under
/// the transform convention F[d_j u] = i xi_j F[u].  Ellipticity tests use
/// only |det|, which does not depend on the i^d factor.
Eigen::MatrixXcd symbol(const ConstCoeffOperator& opr, const Eigen::VectorXd& xi);

struct EllipticityReport {
  Decision decision;
  double min_abs_det = 0;
  Eigen::VectorXd argmin;
};

/// Minimum of |det symbol| over a deterministic unit-sphere scan (axes,
/// diagonals and a low-discrepancy fill) against tol relative to the largest
/// coefficient norm to the k-th power.
EllipticityReport is_elliptic(const ConstCoeffOperator& opr, int samples = 256,
                              double tol = 1e-9);

/// k-component fields on one grid.
using FieldSet = std::vector<GridField>;

FieldSet apply_operator(const ConstCoeffOperator& opr, const FieldSet& u);

/// Parametrix Q: multiplier (1-chi(xi)) symbol(xi)^{-1} with chi the smooth
/// radial cutoff scaled to cutoff_radius (1 inside, 0 beyond twice it).
FieldSet apply_parametrix(const ConstCoeffOperator& opr, const FieldSet& u,
                          double cutoff_radius = 1.0);

/// Smoothing remainder T := Q L - I, the multiplier -chi(xi).  With this
/// normalization Q(Lu) = u + Tu holds exactly at the multiplier level.
FieldSet apply_smoothing(const ConstCoeffOperator& opr, const FieldSet& u,
                         double cutoff_radius = 1.0);

/// ||Q(Lu) - u - Tu||_2 / ||u||_2 with L applied spectrally.
double parametrix_identity_residual(const ConstCoeffOperator& opr, const FieldSet& u,
                                    double cutoff_radius = 1.0);

double fieldset_l2_norm(const FieldSet& u);

}  // namespace fsc

#endif
