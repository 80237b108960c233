#include "fsc/trichotomy.hpp"

#include <cmath>

#include "fsc/errors.hpp"
#include "fsc/lp_bank.hpp"

namespace fsc {

int trichotomy_pattern(int k, int kp, int kpp) {
  if (kp <= k - 4 && k - 3 <= kpp && kpp <= k + 3) return 1;
  if (k - 3 <= kp && kp <= k + 3 && kpp <= k + 5) return 2;
  if (kp >= k + 4 && std::abs(kp - kpp) <= 2) return 3;
  return 0;
}

GridField oversample2(const GridField& u) {
  std::vector<int> dims2 = u.dims;
  for (int& d : dims2) d *= 2;
  GridField fine = make_grid_field(u.n, dims2, u.box);

  const Eigen::ArrayXcd spec = fft_forward(u);
  Eigen::ArrayXcd spec2 = Eigen::ArrayXcd::Zero(fine.samples.size());
  const double scale = (u.n == 1) ? 2.0 : 4.0;  // DFT size factor per axis

  auto map_index = [](int j, int dim, int dim2) {
    const int signed_j = j < dim / 2 ? j : j - dim;
    return signed_j >= 0 ? signed_j : signed_j + dim2;
  };

  if (u.n == 1) {
    for (int j = 0; j < u.dims[0]; ++j)
      spec2(map_index(j, u.dims[0], dims2[0])) = scale * spec(j);
  } else {
    for (int i = 0; i < u.dims[0]; ++i) {
      const int i2 = map_index(i, u.dims[0], dims2[0]);
      for (int j = 0; j < u.dims[1]; ++j) {
        const int j2 = map_index(j, u.dims[1], dims2[1]);
        spec2(static_cast<std::ptrdiff_t>(i2) * dims2[1] + j2) =
            scale * spec(static_cast<std::ptrdiff_t>(i) * u.dims[1] + j);
      }
    }
  }
  fine.samples = fft_inverse(fine, spec2);
  return fine;
}

TrichotomyResult trichotomy_residual(const GridField& u, const GridField& v, int k, int kp,
                                     int kpp) {
  if (!same_grid(u, v)) raise(Errc::DimsMismatch, "factor fields live on different grids");
  if (k < 0 || kp < 0 || kpp < 0) raise(Errc::RangeError, "band indices must be >= 0");

  const GridField uf = oversample2(u);
  const GridField vf = oversample2(v);

  // Highest full band on the oversampled grid; factor bands two octaves
  // below it keep the product alias-free.
  const int nyquist_band = static_cast<int>(std::floor(std::log2(max_frequency(uf))));
  if (kp + 2 > nyquist_band || kpp + 2 > nyquist_band)
    raise(Errc::AliasingRisk, "factor band too close to the oversampled Nyquist band");

  const GridField a = lp_project(uf, kp, LPMode::Band);
  const GridField b = lp_project(vf, kpp, LPMode::Band);
  const double na = l2_norm(a);
  const double nb = l2_norm(b);
  // Rounding noise from the transforms does not count as band energy.
  if (na <= 1e-12 * l2_norm(uf) || nb <= 1e-12 * l2_norm(vf))
    raise(Errc::EmptyBand, "a factor band carries no energy");

  GridField prod = a;
  prod.samples = a.samples * b.samples;
  const GridField out = lp_project(prod, k, LPMode::Band);

  TrichotomyResult res;
  res.residual = l2_norm(out) / (na * nb);
  res.pattern = trichotomy_pattern(k, kp, kpp);
  res.allowed = res.pattern != 0;
  return res;
}

}  // namespace fsc
