#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fsc/cli.hpp"
#include "fsc/elliptic.hpp"
#include "fsc/grid_field.hpp"

using namespace fsc;
using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json payload_of(const RunResult& r) {
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.at("status") == "ok");
  return j.at("payload");
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/fsc_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("check-mult verdicts use exit code zero either way") {
  const RunResult ok = run({"check-mult", "--f1", "H[s=1,p=2;n=3]", "--f2", "H[s=1,p=2;n=3]",
                            "--target", "H[s=0,p=2;n=3]"});
  CHECK(payload_of(ok).at("verdict") == true);

  const RunResult no = run({"check-mult", "--f1", "H[s=1,p=2;n=3]", "--f2", "H[s=1,p=2;n=3]",
                            "--target", "H[s=1,p=2;n=3]"});
  CHECK(no.code == 0);
  CHECK(payload_of(no).at("verdict") == false);
}

TEST_CASE("usage errors exit 2, module errors exit 3") {
  CHECK(run({"check-mult", "--f1", "H[s=1,p=2;n=3]"}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);

  const RunResult bad = run({"check-embed", "--src", "H[s=1,p=0;n=3]", "--dst",
                             "H[s=0,p=2;n=3]", "--domain", "rn"});
  CHECK(bad.code == 3);
  const json err = json::parse(bad.err);
  CHECK(err.at("status") == "error");
  CHECK(err.at("code") == "RangeError");
}

TEST_CASE("index-set nonempty payload carries canonical members") {
  const RunResult r = run({"index-set", "--op", "L[d=2,d0=0]", "--coeff", "H[s=1,p=2;n=3]",
                           "--nonempty"});
  const json payload = payload_of(r);
  CHECK(payload.at("verdict") == true);
  REQUIRE(payload.at("canonical_members").size() == 3);
  CHECK(payload.at("canonical_members")[2].at("sigma") == "1");
  CHECK(payload.at("canonical_members")[2].at("a") == "2");

  const RunResult no = run({"index-set", "--op", "L[d=2,d0=0]", "--coeff",
                            "H[s=1/2,p=2;n=3]", "--nonempty"});
  CHECK(payload_of(no).at("verdict") == false);
}

TEST_CASE("json outputs round trip byte for byte") {
  const RunResult first = run({"check-embed", "--src", "H[s=2,p=2;n=3]", "--dst",
                               "H[s=1,p=3;n=3]", "--domain", "bounded"});
  const json canonical = payload_of(first).at("canonical");
  const RunResult second =
      run({"check-embed", "--src", canonical.at("src").get<std::string>(), "--dst",
           canonical.at("dst").get<std::string>(), "--domain",
           canonical.at("domain").get<std::string>()});
  CHECK(first.out == second.out);
}

TEST_CASE("sweep-mult emits a csv table") {
  const RunResult r = run({"sweep-mult", "--kind", "H", "--n", "1", "--s", "0,1", "--invp",
                           "1/2"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "kind,n,s1,s2,s,invp1,invp2,invp,invq1,invq2,invq,verdict,marginal");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 8);  // 2^3 smoothness tuples, single Lebesgue value
}

TEST_CASE("plan-bootstrap payload validates and emits svg on request") {
  TempFile svg("plan.svg");
  const RunResult r = run({"plan-bootstrap", "--op", "L[d=2,d0=0]", "--coeff",
                           "H[s=2,p=2;n=3]", "--target", "sigma=1,a=3/2", "--emit-svg",
                           svg.path});
  const json payload = payload_of(r);
  CHECK(payload.at("validation").at("verdict") == true);
  CHECK(payload.at("steps").size() == 3);
  std::ifstream in(svg.path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("<svg") != std::string::npos);
  CHECK(buf.str().find("polyline") != std::string::npos);
}

TEST_CASE("render-figure s-region emits svg") {
  const RunResult r = run({"render-figure", "s-region", "--op", "L[d=2,d0=0]", "--coeff",
                           "H[s=77/34,p=17/10;n=3]"});
  CHECK(r.code == 0);
  CHECK(r.out.find("<svg") != std::string::npos);
  CHECK(r.out.find("polygon") != std::string::npos);
}

TEST_CASE("numeric pipeline over fld1 files") {
  TempFile field("wave.fld1");
  const GridField u = sample_field(1, {1024}, {2 * M_PI * 8}, [](const double* x) {
    return std::complex<double>(std::cos(32.0 * x[0]), 0.0);
  });
  write_field_file(field.path, u);

  const RunResult norm =
      run({"numeric", "lp-norm", "--field", field.path, "--space", "H[s=0,p=2;n=1]"});
  const double expected = std::sqrt(M_PI * 8);  // L2 of cos(32x) over a 16 pi box
  CHECK(payload_of(norm).at("norm").get<double>() ==
        doctest::Approx(expected).epsilon(1e-10));

  const RunResult tri = run({"numeric", "trichotomy", "--u", field.path, "--v", field.path,
                             "--k", "5", "--k1", "4", "--k2", "3"});
  CHECK(tri.code == 3);  // band 4 empty for a pure band-5 line
  CHECK(json::parse(tri.err).at("code") == "EmptyBand");

  const RunResult alias = run({"numeric", "trichotomy", "--u", field.path, "--v", field.path,
                               "--k", "5", "--k1", "9", "--k2", "3"});
  CHECK(alias.code == 3);  // band 9 overflows this grid's Nyquist band
  CHECK(json::parse(alias.err).at("code") == "AliasingRisk");
}

TEST_CASE("numeric rescale-fit over a gaussian field") {
  TempFile field("gauss.fld1");
  const GridField u = sample_field(1, {2048}, {40.0}, [](const double* x) {
    return std::complex<double>(std::exp(-x[0] * x[0] / 0.005), 0.0);
  });
  write_field_file(field.path, u);
  const RunResult fit =
      run({"numeric", "rescale-fit", "--field", field.path, "--space", "H[s=0,p=2;n=1]",
           "--r-list", "1/2,1/4,1/8,1/16,1/32"});
  const json payload = payload_of(fit);
  CHECK(payload.at("predicted_alpha") == "-1/2");
  CHECK(std::abs(payload.at("slope").get<double>() + 0.5) < 0.1);
}

TEST_CASE("numeric parametrix-check") {
  TempFile opfile("lap.json");
  TempFile f("u.fld1");
  {
    Eigen::MatrixXd one = Eigen::MatrixXd::Identity(1, 1);
    const ConstCoeffOperator lap =
        make_const_coeff_operator(2, 1, 2, {{{2, 0}, one}, {{0, 2}, one}});
    std::ofstream out(opfile.path);
    out << operator_to_json_text(lap);
  }
  {
    GridField u = make_grid_field(2, {64, 64}, {2 * M_PI, 2 * M_PI});
    Eigen::ArrayXcd spec = Eigen::ArrayXcd::Zero(u.samples.size());
    spec(5) = {1.0, 0.0};
    spec(70) = {0.5, 0.25};
    u.samples = fft_inverse(u, spec);
    write_field_file(f.path, u);
  }
  const RunResult r = run({"numeric", "parametrix-check", "--op-file", opfile.path,
                           "--field", f.path});
  const json payload = payload_of(r);
  CHECK(payload.at("elliptic") == true);
  CHECK(payload.at("min_det").get<double>() == doctest::Approx(1.0));
  CHECK(payload.at("residual").get<double>() <= 1e-10);
}
