#include "fsc/elliptic.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include <nlohmann/json.hpp>

#include "fsc/errors.hpp"
#include "fsc/lp_bank.hpp"

namespace fsc {

namespace {

std::complex<double> i_power(int d) {
  switch (((d % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

double max_coeff_norm(const ConstCoeffOperator& opr) {
  double m = 0;
  for (const auto& [alpha, mat] : opr.coeffs) m = std::max(m, mat.norm());
  return m;
}

std::vector<Eigen::VectorXd> sphere_scan(int n, int samples) {
  std::vector<Eigen::VectorXd> points;
  auto push = [&](std::initializer_list<double> coords) {
    Eigen::VectorXd v(n);
    int i = 0;
    for (double c : coords) v(i++) = c;
    const double len = v.norm();
    if (len > 0) points.push_back(v / len);
  };

  if (n == 1) {
    push({1.0});
    push({-1.0});
    return points;
  }
  if (n == 2) {
    // Axes and diagonals catch axis-degenerate symbols exactly.
    push({1, 0});
    push({-1, 0});
    push({0, 1});
    push({0, -1});
    push({1, 1});
    push({1, -1});
    push({-1, 1});
    push({-1, -1});
    const double golden = 0.6180339887498949;
    for (int i = 0; i < samples; ++i) {
      const double theta = 2.0 * M_PI * std::fmod(golden * i, 1.0);
      push({std::cos(theta), std::sin(theta)});
    }
    return points;
  }
  if (n == 3) {
    push({1, 0, 0});
    push({0, 1, 0});
    push({0, 0, 1});
    push({-1, 0, 0});
    push({0, -1, 0});
    push({0, 0, -1});
    for (int sx = -1; sx <= 1; sx += 2)
      for (int sy = -1; sy <= 1; sy += 2)
        for (int sz = -1; sz <= 1; sz += 2) push({double(sx), double(sy), double(sz)});
    for (int i = 0; i < samples; ++i) {
      const double z = 1.0 - 2.0 * (i + 0.5) / samples;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double theta = 2.39996322972865332 * i;  // golden angle
      push({r * std::cos(theta), r * std::sin(theta), z});
    }
    return points;
  }
  raise(Errc::RangeError, "ellipticity scan supports n <= 3");
}

/// Applies a matrix-valued multiplier M(xi) spectrally.
FieldSet apply_matrix_multiplier(
    const ConstCoeffOperator& opr, const FieldSet& u,
    const std::function<Eigen::MatrixXcd(const Eigen::VectorXd&)>& multiplier) {
  if (static_cast<int>(u.size()) != opr.k)
    raise(Errc::DimsMismatch, "field component count differs from the system size");
  for (const GridField& comp : u) {
    if (comp.n != opr.n) raise(Errc::DimsMismatch, "field dimension differs from operator");
    if (!same_grid(comp, u.front())) raise(Errc::DimsMismatch, "components on different grids");
  }

  const GridField& shape = u.front();
  std::vector<Eigen::ArrayXcd> spectra;
  spectra.reserve(u.size());
  for (const GridField& comp : u) spectra.push_back(fft_forward(comp));

  std::vector<Eigen::ArrayXcd> out_spectra(u.size(),
                                           Eigen::ArrayXcd::Zero(shape.samples.size()));
  Eigen::VectorXd xi(opr.n);
  Eigen::VectorXcd vec(opr.k), res(opr.k);
  for (std::ptrdiff_t idx = 0; idx < shape.samples.size(); ++idx) {
    if (opr.n == 1) {
      xi(0) = axis_frequency(static_cast<int>(idx), shape.dims[0], shape.box[0]);
    } else {
      xi(0) = axis_frequency(static_cast<int>(idx / shape.dims[1]), shape.dims[0], shape.box[0]);
      xi(1) = axis_frequency(static_cast<int>(idx % shape.dims[1]), shape.dims[1], shape.box[1]);
    }
    const Eigen::MatrixXcd M = multiplier(xi);
    for (int c = 0; c < opr.k; ++c) vec(c) = spectra[c](idx);
    res = M * vec;
    for (int c = 0; c < opr.k; ++c) out_spectra[c](idx) = res(c);
  }

  FieldSet out;
  out.reserve(u.size());
  for (int c = 0; c < opr.k; ++c) {
    GridField comp = u[c];
    comp.samples = fft_inverse(shape, out_spectra[c]);
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

ConstCoeffOperator make_const_coeff_operator(
    int n, int k, int d, std::vector<std::pair<std::vector<int>, Eigen::MatrixXd>> coeffs) {
  if (n < 1) raise(Errc::RangeError, "operator dimension must be >= 1");
  if (k < 1) raise(Errc::RangeError, "system size must be >= 1");
  if (d < 1) raise(Errc::RangeError, "operator order must be >= 1");
  if (coeffs.empty()) raise(Errc::RangeError, "operator needs at least one coefficient");
  bool any_nonzero = false;
  for (const auto& [alpha, mat] : coeffs) {
    if (static_cast<int>(alpha.size()) != n)
      raise(Errc::RangeError, "multi-index arity differs from the dimension");
    int total = 0;
    for (int a : alpha) {
      if (a < 0) raise(Errc::RangeError, "multi-index entries must be >= 0");
      total += a;
    }
    if (total != d) raise(Errc::RangeError, "operator is homogeneous: |alpha| must equal d");
    if (mat.rows() != k || mat.cols() != k)
      raise(Errc::RangeError, "coefficient matrices must be k x k");
    if (mat.norm() > 0) any_nonzero = true;
  }
  if (!any_nonzero) raise(Errc::RangeError, "all coefficients vanish");
  return ConstCoeffOperator{n, k, d, std::move(coeffs)};
}

ConstCoeffOperator operator_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) raise(Errc::ParseError, "malformed operator JSON");
  std::vector<std::pair<std::vector<int>, Eigen::MatrixXd>> coeffs;
  for (const auto& entry : j.at("coeffs")) {
    const auto alpha = entry.at("alpha").get<std::vector<int>>();
    const auto rows = entry.at("matrix").get<std::vector<std::vector<double>>>();
    Eigen::MatrixXd mat(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != rows.front().size())
        raise(Errc::ParseError, "ragged coefficient matrix");
      for (std::size_t c = 0; c < rows[r].size(); ++c) mat(r, c) = rows[r][c];
    }
    coeffs.emplace_back(alpha, std::move(mat));
  }
  return make_const_coeff_operator(j.at("n").get<int>(), j.at("k").get<int>(),
                                   j.at("d").get<int>(), std::move(coeffs));
}

std::string operator_to_json_text(const ConstCoeffOperator& opr) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [alpha, mat] : opr.coeffs) {
    std::vector<std::vector<double>> rows(mat.rows());
    for (Eigen::Index r = 0; r < mat.rows(); ++r)
      for (Eigen::Index c = 0; c < mat.cols(); ++c) rows[r].push_back(mat(r, c));
    coeffs.push_back({{"alpha", alpha}, {"matrix", rows}});
  }
  nlohmann::json j = {{"n", opr.n}, {"k", opr.k}, {"d", opr.d}, {"coeffs", coeffs}};
  return j.dump();
}

Eigen::MatrixXcd symbol(const ConstCoeffOperator& opr, const Eigen::VectorXd& xi) {
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(opr.k, opr.k);
  for (const auto& [alpha, mat] : opr.coeffs) {
    double mono = 1.0;
    for (int axis = 0; axis < opr.n; ++axis)
      for (int rep = 0; rep < alpha[axis]; ++rep) mono *= xi(axis);
    acc += mono * mat;
  }
  return i_power(opr.d) * acc;
}

EllipticityReport is_elliptic(const ConstCoeffOperator& opr, int samples, double tol) {
  if (samples < 64) raise(Errc::RangeError, "ellipticity scan needs at least 64 samples");
  const double scale = std::pow(max_coeff_norm(opr), opr.k);
  const double threshold = tol * scale;

  EllipticityReport report;
  report.min_abs_det = std::numeric_limits<double>::infinity();
  for (const Eigen::VectorXd& xi : sphere_scan(opr.n, samples)) {
    const double det = std::abs(symbol(opr, xi).determinant());
    if (det < report.min_abs_det) {
      report.min_abs_det = det;
      report.argmin = xi;
    }
  }

  DecisionBuilder out;
  out.require("symbol-nonsingular-on-sphere",
              "min |det symbol| = " + std::to_string(report.min_abs_det) + " > " +
                  std::to_string(threshold),
              report.min_abs_det > threshold, false);
  report.decision = std::move(out).take();
  return report;
}

FieldSet apply_operator(const ConstCoeffOperator& opr, const FieldSet& u) {
  return apply_matrix_multiplier(opr, u, [&](const Eigen::VectorXd& xi) {
    return symbol(opr, xi);
  });
}

FieldSet apply_parametrix(const ConstCoeffOperator& opr, const FieldSet& u,
                          double cutoff_radius) {
  if (!(cutoff_radius > 0)) raise(Errc::RangeError, "cutoff radius must be positive");
  if (!is_elliptic(opr).decision.verdict)
    raise(Errc::NotElliptic, "parametrix requires an elliptic symbol");
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(opr.k, opr.k);
  return apply_matrix_multiplier(opr, u, [&](const Eigen::VectorXd& xi) -> Eigen::MatrixXcd {
    const double weight = 1.0 - smooth_profile(xi.norm() / cutoff_radius);
    if (weight == 0.0) return Eigen::MatrixXcd::Zero(opr.k, opr.k);
    return weight * symbol(opr, xi).partialPivLu().solve(id);
  });
}

FieldSet apply_smoothing(const ConstCoeffOperator& opr, const FieldSet& u,
                         double cutoff_radius) {
  if (!(cutoff_radius > 0)) raise(Errc::RangeError, "cutoff radius must be positive");
  if (!is_elliptic(opr).decision.verdict)
    raise(Errc::NotElliptic, "smoothing remainder accompanies an elliptic parametrix");
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(opr.k, opr.k);
  return apply_matrix_multiplier(opr, u, [&](const Eigen::VectorXd& xi) -> Eigen::MatrixXcd {
    return -smooth_profile(xi.norm() / cutoff_radius) * id;
  });
}

double fieldset_l2_norm(const FieldSet& u) {
  double acc = 0;
  for (const GridField& comp : u) {
    const double v = l2_norm(comp);
    acc += v * v;
  }
  return std::sqrt(acc);
}

double parametrix_identity_residual(const ConstCoeffOperator& opr, const FieldSet& u,
                                    double cutoff_radius) {
  const FieldSet lu = apply_operator(opr, u);
  const FieldSet qlu = apply_parametrix(opr, lu, cutoff_radius);
  const FieldSet tu = apply_smoothing(opr, u, cutoff_radius);
  FieldSet diff = qlu;
  for (std::size_t c = 0; c < diff.size(); ++c)
    diff[c].samples = qlu[c].samples - u[c].samples - tu[c].samples;
  const double denom = fieldset_l2_norm(u);
  if (denom == 0) raise(Errc::EmptyBand, "residual of the zero field is undefined");
  return fieldset_l2_norm(diff) / denom;
}

}  // namespace fsc
