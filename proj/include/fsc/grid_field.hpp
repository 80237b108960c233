#ifndef FSC_GRID_FIELD_HPP
#define FSC_GRID_FIELD_HPP

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace fsc {

/// Complex samples of a function on a uniform periodic grid covering
/// [-L/2, L/2) per axis, row-major.  Dimensions 1 and 2 are supported and
/// per-axis sample counts must be powers of two.
struct GridField {
  int n = 1;
  std::vector<int> dims;
  std::vector<double> box;
  Eigen::ArrayXcd samples;

  std::ptrdiff_t size() const { return samples.size(); }
  double cell_volume() const {
    double v = 1.0;
    for (int i = 0; i < n; ++i) v *= box[i] / dims[i];
    return v;
  }
};

GridField make_grid_field(int n, std::vector<int> dims, std::vector<double> box);

/// Samples f at the grid points (x ordering row-major, x = -L/2 + i*h).
GridField sample_field(int n, std::vector<int> dims, std::vector<double> box,
                       const std::function<std::complex<double>(const double*)>& f);

bool same_grid(const GridField& a, const GridField& b);

/// Forward DFT of the samples (unnormalized, per-axis standard index order).
Eigen::ArrayXcd fft_forward(const GridField& u);
/// Inverse of fft_forward including the 1/N normalization.
Eigen::ArrayXcd fft_inverse(const GridField& grid_shape, const Eigen::ArrayXcd& spectrum);

/// Signed frequency of DFT index j on an axis with N samples and length L.
double axis_frequency(int index, int dim, double box);

/// |xi| at a flat row-major spectrum index.
double frequency_norm(const GridField& u, std::ptrdiff_t flat_index);

/// Largest |xi| representable on the grid.
double max_frequency(const GridField& u);

/// Applies a radial Fourier multiplier m(|xi|).
GridField apply_radial_multiplier(const GridField& u,
                                  const std::function<double(double)>& multiplier);

/// Riemann-sum L^p norm with cell volume weight.
double lp_norm(const GridField& u, double p);
double l2_norm(const GridField& u);

/// "fld1" container: one-line JSON header, newline, raw little-endian
/// interleaved re/im float64 samples.
void write_field(std::ostream& out, const GridField& u);
GridField read_field(std::istream& in);
void write_field_file(const std::string& path, const GridField& u);
GridField read_field_file(const std::string& path);

}  // namespace fsc

#endif
