#include "fsc/rescale.hpp"

#include <cmath>

#include "fsc/errors.hpp"
#include "fsc/lp_bank.hpp"
#include "fsc/norms.hpp"

namespace fsc {

namespace {

/// Per-axis support extent (in samples) of the deviation from the corner
/// value; the corner is the box boundary, where representable fields vanish
/// or sit at their constant offset.
void check_support(const GridField& u) {
  const std::complex<double> base = u.samples(0);
  Eigen::ArrayXd dev = (u.samples - base).abs();
  const double top = dev.maxCoeff();
  if (top == 0) return;  // constant field rescales exactly
  const double eps = 1e-4 * top;

  auto axis_extent = [&](int axis) {
    const int stride = (u.n == 2 && axis == 0) ? u.dims[1] : 1;
    const int count = u.dims[axis];
    const int other = (u.n == 2) ? u.dims[1 - axis] : 1;
    int lo = count, hi = -1;
    for (int i = 0; i < count; ++i) {
      bool hit = false;
      for (int j = 0; j < other && !hit; ++j) {
        const std::ptrdiff_t idx =
            (u.n == 2 && axis == 0) ? static_cast<std::ptrdiff_t>(i) * stride + j
            : (u.n == 2 ? static_cast<std::ptrdiff_t>(j) * u.dims[1] + i : i);
        hit = dev(idx) > eps;
      }
      if (hit) {
        lo = std::min(lo, i);
        hi = std::max(hi, i);
      }
    }
    return hi < lo ? 0 : hi - lo;
  };

  for (int axis = 0; axis < u.n; ++axis) {
    if (4 * axis_extent(axis) > u.dims[axis])
      raise(Errc::SupportTooLarge,
            "field support exceeds a quarter of the box on axis " + std::to_string(axis));
  }
}

/// Evaluation matrix of the axis interpolant at the scaled grid points:
/// E(m,j) = exp(i xi_j (r x_m + L/2)) / N.
Eigen::MatrixXcd evaluation_matrix(int dim, double box, double r) {
  Eigen::MatrixXcd E(dim, dim);
  const double h = box / dim;
  for (int m = 0; m < dim; ++m) {
    const double x = -box / 2 + m * h;
    const double y = r * x + box / 2;
    for (int j = 0; j < dim; ++j) {
      const double xi = axis_frequency(j, dim, box);
      E(m, j) = std::polar(1.0 / dim, xi * y);
    }
  }
  return E;
}

}  // namespace

GridField rescale_field(const GridField& u, double r) {
  if (!(r > 0.0 && r <= 1.0)) raise(Errc::RangeError, "rescale factor must lie in (0,1]");
  check_support(u);
  if (r == 1.0) return u;

  const Eigen::ArrayXcd spectrum = fft_forward(u);
  GridField out = u;
  if (u.n == 1) {
    const Eigen::MatrixXcd E = evaluation_matrix(u.dims[0], u.box[0], r);
    out.samples = (E * spectrum.matrix()).array();
  } else {
    using RowMat = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>;
    Eigen::Map<const RowMat> U(spectrum.data(), u.dims[0], u.dims[1]);
    const Eigen::MatrixXcd E0 = evaluation_matrix(u.dims[0], u.box[0], r);
    const Eigen::MatrixXcd E1 = evaluation_matrix(u.dims[1], u.box[1], r);
    RowMat result = E0 * U * E1.transpose();
    out.samples = Eigen::Map<const Eigen::ArrayXcd>(result.data(), result.size());
  }
  return out;
}

RescalingLaw predicted_alpha(const SpaceSpec& sp, bool vanishing_at_zero) {
  const Rational gap = sp.s - Rational(sp.n) * sp.inv_p;  // s - n/p
  if (vanishing_at_zero) {
    if (!(gap > 0))
      raise(Errc::NotHolder,
            "vanishing-at-zero rescaling requires s > n/p (Holder continuity)");
    const Rational one{1};
    return RescalingLaw{gap < one ? gap : one, true, gap == one};
  }
  const Rational zero{0};
  return RescalingLaw{gap < zero ? gap : zero, false, gap == zero};
}

GridField chi_cutoff_field(const GridField& grid_shape) {
  GridField chi = grid_shape;
  auto fill = [&](auto&& coord_of) {
    for (std::ptrdiff_t i = 0; i < chi.samples.size(); ++i) chi.samples(i) = coord_of(i);
  };
  if (chi.n == 1) {
    const double h = chi.box[0] / chi.dims[0];
    const double scale = 0.225 * chi.box[0];
    fill([&](std::ptrdiff_t i) {
      const double x = -chi.box[0] / 2 + i * h;
      return smooth_profile(std::abs(x) / scale);
    });
  } else {
    const double h0 = chi.box[0] / chi.dims[0];
    const double h1 = chi.box[1] / chi.dims[1];
    const double s0 = 0.225 * chi.box[0];
    const double s1 = 0.225 * chi.box[1];
    fill([&](std::ptrdiff_t i) {
      const double x0 = -chi.box[0] / 2 + static_cast<double>(i / chi.dims[1]) * h0;
      const double x1 = -chi.box[1] / 2 + static_cast<double>(i % chi.dims[1]) * h1;
      return smooth_profile(std::abs(x0) / s0) * smooth_profile(std::abs(x1) / s1);
    });
  }
  return chi;
}

RescaleFit fit_rescaling_exponent(const GridField& u, const SpaceSpec& sp,
                                  bool vanishing_at_zero,
                                  const std::vector<double>& r_list) {
  if (r_list.size() < 4)
    raise(Errc::RangeError, "rescaling fit needs at least four factors");
  for (std::size_t i = 0; i < r_list.size(); ++i) {
    if (!(r_list[i] > 0 && r_list[i] <= 1))
      raise(Errc::RangeError, "rescale factors must lie in (0,1]");
    if (i > 0 && !(r_list[i] < r_list[i - 1]))
      raise(Errc::RangeError, "rescale factors must decrease");
  }

  RescaleFit fit;
  fit.predicted = predicted_alpha(sp, vanishing_at_zero);
  fit.r_values = r_list;

  const GridField chi = chi_cutoff_field(u);
  std::vector<double> xs, ys;
  for (double r : r_list) {
    GridField v = rescale_field(u, r);
    v.samples *= chi.samples;
    const double norm = space_norm(v, sp);
    fit.norms.push_back(norm);
    if (!(norm > 0)) raise(Errc::RangeError, "vanishing norm in rescaling fit");
    xs.push_back(std::log(r));
    ys.push_back(std::log(norm));
  }

  const double m = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  fit.slope = sxy / sxx;
  const double intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < xs.size(); ++i)
    fit.max_residual =
        std::max(fit.max_residual, std::abs(ys[i] - (intercept + fit.slope * xs[i])));
  return fit;
}

}  // namespace fsc
