#include "fsc/norms.hpp"

#include <cmath>

#include "fsc/errors.hpp"
#include "fsc/lp_bank.hpp"

namespace fsc {

namespace {

double band_aggregate_norm(const GridField& u, double s, double p, double q, bool besov) {
  const Eigen::ArrayXcd spectrum = fft_forward(u);
  const int kmax = lp_max_band(u);

  GridField low = u;
  {
    Eigen::ArrayXcd spec = spectrum;
    for (std::ptrdiff_t i = 0; i < spec.size(); ++i) spec(i) *= lp_phi(frequency_norm(u, i));
    low.samples = fft_inverse(u, spec);
  }
  const double low_term = lp_norm(low, p);

  if (besov) {
    double acc = 0;
    for (int k = 1; k <= kmax; ++k) {
      Eigen::ArrayXcd spec = spectrum;
      const double scale = std::ldexp(1.0, -k);
      for (std::ptrdiff_t i = 0; i < spec.size(); ++i)
        spec(i) *= lp_psi(scale * frequency_norm(u, i));
      GridField band = u;
      band.samples = fft_inverse(u, spec);
      acc += std::pow(std::exp2(s * k) * lp_norm(band, p), q);
    }
    return low_term + std::pow(acc, 1.0 / q);
  }

  Eigen::ArrayXd agg = Eigen::ArrayXd::Zero(u.samples.size());
  for (int k = 1; k <= kmax; ++k) {
    Eigen::ArrayXcd spec = spectrum;
    const double scale = std::ldexp(1.0, -k);
    for (std::ptrdiff_t i = 0; i < spec.size(); ++i)
      spec(i) *= lp_psi(scale * frequency_norm(u, i));
    const Eigen::ArrayXcd band = fft_inverse(u, spec);
    const double w = std::exp2(s * k);
    agg += (w * band.abs()).pow(q);
  }
  GridField fine = u;
  fine.samples = agg.pow(1.0 / q).cast<std::complex<double>>();
  return low_term + lp_norm(fine, p);
}

}  // namespace

double space_norm(const GridField& u, const SpaceSpec& sp) {
  if (sp.n != u.n) raise(Errc::DimsMismatch, "space and field dimensions differ");
  const double s = to_double(sp.s);
  const double p = 1.0 / to_double(sp.inv_p);

  switch (sp.kind) {
    case SpaceKind::BesselH: {
      GridField v = apply_radial_multiplier(
          u, [s](double r) { return std::pow(1.0 + r * r, s / 2.0); });
      return lp_norm(v, p);
    }
    case SpaceKind::TriebelF:
      return band_aggregate_norm(u, s, p, 1.0 / to_double(*sp.inv_q), false);
    case SpaceKind::BesovB:
      return band_aggregate_norm(u, s, p, 1.0 / to_double(*sp.inv_q), true);
    case SpaceKind::SlobodeckijW:
      return band_aggregate_norm(u, s, p, 1.0 / to_double(effective_inv_q(sp)), false);
  }
  raise(Errc::RangeError, "unknown scale");
}

}  // namespace fsc
