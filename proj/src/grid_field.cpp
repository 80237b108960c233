#include "fsc/grid_field.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <cstring>
#include <fstream>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fsc/errors.hpp"

namespace fsc {

namespace {

bool power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

void validate_shape(int n, const std::vector<int>& dims, const std::vector<double>& box) {
  if (n != 1 && n != 2) raise(Errc::DimsMismatch, "grid dimension must be 1 or 2");
  if (static_cast<int>(dims.size()) != n || static_cast<int>(box.size()) != n)
    raise(Errc::DimsMismatch, "dims/box arity must match the dimension");
  for (int d : dims)
    if (!power_of_two(d)) raise(Errc::DimsMismatch, "sample counts must be powers of two");
  for (double L : box)
    if (!(L > 0)) raise(Errc::DimsMismatch, "box lengths must be positive");
}

void fft_axis0(Eigen::ArrayXcd& data, int rows, int cols, bool inverse) {
  Eigen::FFT<double> fft;
  Eigen::VectorXcd in(rows), out(rows);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) in(r) = data(static_cast<std::ptrdiff_t>(r) * cols + c);
    if (inverse)
      fft.inv(out, in);
    else
      fft.fwd(out, in);
    for (int r = 0; r < rows; ++r) data(static_cast<std::ptrdiff_t>(r) * cols + c) = out(r);
  }
}

void fft_axis1(Eigen::ArrayXcd& data, int rows, int cols, bool inverse) {
  Eigen::FFT<double> fft;
  Eigen::VectorXcd in(cols), out(cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) in(c) = data(static_cast<std::ptrdiff_t>(r) * cols + c);
    if (inverse)
      fft.inv(out, in);
    else
      fft.fwd(out, in);
    for (int c = 0; c < cols; ++c) data(static_cast<std::ptrdiff_t>(r) * cols + c) = out(c);
  }
}

}  // namespace

GridField make_grid_field(int n, std::vector<int> dims, std::vector<double> box) {
  validate_shape(n, dims, box);
  std::ptrdiff_t total = 1;
  for (int d : dims) total *= d;
  GridField u{n, std::move(dims), std::move(box), Eigen::ArrayXcd::Zero(total)};
  return u;
}

GridField sample_field(int n, std::vector<int> dims, std::vector<double> box,
                       const std::function<std::complex<double>(const double*)>& f) {
  GridField u = make_grid_field(n, std::move(dims), std::move(box));
  double x[2] = {0, 0};
  if (n == 1) {
    const double h = u.box[0] / u.dims[0];
    for (int i = 0; i < u.dims[0]; ++i) {
      x[0] = -u.box[0] / 2 + i * h;
      u.samples(i) = f(x);
    }
  } else {
    const double h0 = u.box[0] / u.dims[0];
    const double h1 = u.box[1] / u.dims[1];
    std::ptrdiff_t idx = 0;
    for (int i = 0; i < u.dims[0]; ++i) {
      x[0] = -u.box[0] / 2 + i * h0;
      for (int j = 0; j < u.dims[1]; ++j, ++idx) {
        x[1] = -u.box[1] / 2 + j * h1;
        u.samples(idx) = f(x);
      }
    }
  }
  return u;
}

bool same_grid(const GridField& a, const GridField& b) {
  return a.n == b.n && a.dims == b.dims && a.box == b.box;
}

Eigen::ArrayXcd fft_forward(const GridField& u) {
  Eigen::ArrayXcd data = u.samples;
  if (u.n == 1) {
    fft_axis1(data, 1, u.dims[0], false);
  } else {
    fft_axis1(data, u.dims[0], u.dims[1], false);
    fft_axis0(data, u.dims[0], u.dims[1], false);
  }
  return data;
}

Eigen::ArrayXcd fft_inverse(const GridField& grid_shape, const Eigen::ArrayXcd& spectrum) {
  Eigen::ArrayXcd data = spectrum;
  if (grid_shape.n == 1) {
    fft_axis1(data, 1, grid_shape.dims[0], true);
  } else {
    fft_axis0(data, grid_shape.dims[0], grid_shape.dims[1], true);
    fft_axis1(data, grid_shape.dims[0], grid_shape.dims[1], true);
  }
  return data;
}

double axis_frequency(int index, int dim, double box) {
  const int signed_index = index < dim / 2 ? index : index - dim;
  return 2.0 * M_PI * signed_index / box;
}

double frequency_norm(const GridField& u, std::ptrdiff_t flat_index) {
  if (u.n == 1) {
    const double f = axis_frequency(static_cast<int>(flat_index), u.dims[0], u.box[0]);
    return std::abs(f);
  }
  const int j = static_cast<int>(flat_index % u.dims[1]);
  const int i = static_cast<int>(flat_index / u.dims[1]);
  const double f0 = axis_frequency(i, u.dims[0], u.box[0]);
  const double f1 = axis_frequency(j, u.dims[1], u.box[1]);
  return std::hypot(f0, f1);
}

double max_frequency(const GridField& u) {
  double m2 = 0;
  for (int axis = 0; axis < u.n; ++axis) {
    const double f = M_PI * u.dims[axis] / u.box[axis];  // |signed index| up to N/2
    m2 += f * f;
  }
  return std::sqrt(m2);
}

GridField apply_radial_multiplier(const GridField& u,
                                  const std::function<double(double)>& multiplier) {
  Eigen::ArrayXcd spec = fft_forward(u);
  for (std::ptrdiff_t i = 0; i < spec.size(); ++i) spec(i) *= multiplier(frequency_norm(u, i));
  GridField out = u;
  out.samples = fft_inverse(u, spec);
  return out;
}

double lp_norm(const GridField& u, double p) {
  const double dv = u.cell_volume();
  double acc = 0;
  for (std::ptrdiff_t i = 0; i < u.samples.size(); ++i)
    acc += std::pow(std::abs(u.samples(i)), p);
  return std::pow(acc * dv, 1.0 / p);
}

double l2_norm(const GridField& u) {
  return std::sqrt(u.samples.abs2().sum() * u.cell_volume());
}

void write_field(std::ostream& out, const GridField& u) {
  nlohmann::json header = {{"n", u.n},
                           {"dims", u.dims},
                           {"box", u.box},
                           {"dtype", "c128"},
                           {"layout", "row-major"}};
  out << header.dump() << '\n';
  static_assert(sizeof(std::complex<double>) == 16);
  out.write(reinterpret_cast<const char*>(u.samples.data()),
            static_cast<std::streamsize>(u.samples.size() * sizeof(std::complex<double>)));
  if (!out) raise(Errc::IoError, "failed writing field payload");
}

GridField read_field(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) raise(Errc::IoError, "missing field header");
  nlohmann::json header = nlohmann::json::parse(line, nullptr, false);
  if (header.is_discarded()) raise(Errc::IoError, "malformed field header");
  if (header.value("dtype", "") != "c128" || header.value("layout", "") != "row-major")
    raise(Errc::IoError, "unsupported field encoding");
  GridField u = make_grid_field(header.at("n").get<int>(),
                                header.at("dims").get<std::vector<int>>(),
                                header.at("box").get<std::vector<double>>());
  in.read(reinterpret_cast<char*>(u.samples.data()),
          static_cast<std::streamsize>(u.samples.size() * sizeof(std::complex<double>)));
  if (in.gcount() != static_cast<std::streamsize>(u.samples.size() * 16))
    raise(Errc::IoError, "truncated field payload");
  for (std::ptrdiff_t i = 0; i < u.samples.size(); ++i) {
    const auto v = u.samples(i);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      raise(Errc::IoError, "non-finite sample in field payload");
  }
  return u;
}

void write_field_file(const std::string& path, const GridField& u) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::IoError, "cannot open '" + path + "' for writing");
  write_field(out, u);
}

GridField read_field_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::IoError, "cannot open '" + path + "'");
  return read_field(in);
}

}  // namespace fsc
