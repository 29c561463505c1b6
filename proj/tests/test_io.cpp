#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "qtom/io.hpp"

using namespace qtom;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("qtom_io_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("QTF roundtrip preserves complex fields exactly") {
  TempDir tmp;
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(-10.0, 10.0);

  Axis a = make_axis(3.0, 24);
  Axis b = make_axis(5.0, 10);
  SampledField f = SampledField::zeros({a, b});
  for (auto& z : f.data) z = cplx(u(rng), u(rng));

  const fs::path p = tmp.path / "field.qtf";
  write_qtf(p, f);
  SampledField g = read_qtf(p);
  REQUIRE(g.dim() == 2);
  CHECK(g.axes[0].same_grid(a, 0.0));
  CHECK(g.axes[1].same_grid(b, 0.0));
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(f.data[i].real() == g.data[i].real());
    CHECK(f.data[i].imag() == g.data[i].imag());
  }
}

TEST_CASE("QTF stores verified real fields as plain doubles") {
  TempDir tmp;
  Axis a = make_axis(2.0, 16);
  SampledField f = SampledField::zeros({a});
  for (std::size_t i = 0; i < a.count; ++i) f.at(i) = 0.125 * static_cast<double>(i);
  f.verify_real();
  REQUIRE(f.is_real_valued);

  const fs::path p = tmp.path / "real.qtf";
  write_qtf(p, f);
  // header: 4 magic + 4 ndim + 24 axis + 1 dtype, payload 16 * 8
  CHECK(fs::file_size(p) == 4 + 4 + 24 + 1 + 16 * 8);
  SampledField g = read_qtf(p);
  CHECK(g.is_real_valued);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(f.data[i] == g.data[i]);
}

TEST_CASE("QTG roundtrip preserves tomograms exactly") {
  TempDir tmp;
  Tomogram t;
  t.x_axis = make_axis(4.0, 32);
  t.angles = {0.0, 0.5, 1.25, 2.0};
  t.omega.resize(4 * 32);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (double& w : t.omega) w = u(rng);

  const fs::path p = tmp.path / "tom.qtg";
  write_qtg(p, t);
  Tomogram s = read_qtg(p);
  CHECK(s.angles == t.angles);
  CHECK(s.x_axis.same_grid(t.x_axis, 0.0));
  CHECK(s.omega == t.omega);
}

TEST_CASE("CSV export has the documented shape") {
  TempDir tmp;
  Axis a = make_axis(1.0, 2);
  SampledField f = SampledField::zeros({a});
  f.at(0) = cplx(1.5, -2.0);
  f.at(1) = cplx(0.0, 3.25);
  const fs::path p = tmp.path / "f.csv";
  write_csv(p, f);
  std::ifstream is(p);
  std::string line;
  std::getline(is, line);
  CHECK(line == "x,re,im");
  std::getline(is, line);
  CHECK(line == "-1,1.5,-2");

  Tomogram t;
  t.x_axis = a;
  t.angles = {0.25};
  t.omega = {0.5, 0.75};
  const fs::path q = tmp.path / "t.csv";
  write_csv(q, t);
  std::ifstream is2(q);
  std::getline(is2, line);
  CHECK(line == "x,alpha,omega");
  std::getline(is2, line);
  CHECK(line == "-1,0.25,0.5");
}

TEST_CASE("malformed files are rejected") {
  TempDir tmp;
  const fs::path p = tmp.path / "bad.qtf";
  {
    std::ofstream os(p, std::ios::binary);
    os << "NOPE";
  }
  CHECK_THROWS_AS(read_qtf(p), io_error);

  const fs::path q = tmp.path / "trunc.qtf";
  {
    Axis a = make_axis(2.0, 16);
    SampledField f = SampledField::zeros({a});
    write_qtf(q, f);
    fs::resize_file(q, fs::file_size(q) - 9);
  }
  CHECK_THROWS_AS(read_qtf(q), io_error);

  CHECK_THROWS_AS(read_qtf(tmp.path / "missing.qtf"), io_error);
}

TEST_CASE("kernel and state views validate their inputs") {
  Axis a = make_axis(4.0, 64);
  PureState s = fock_state(0, a);
  SampledField f = s.as_field();
  PureState s2 = state_from_field(f);
  CHECK(std::abs(s2.norm() - 1.0) < 1e-12);

  SampledField bad = f;
  for (auto& z : bad.data) z *= 3.0;
  CHECK_THROWS_AS(state_from_field(bad), numeric_error);

  DensityKernel k = pure_kernel(s);
  DensityKernel k2 = kernel_from_field(k.rho);
  CHECK(k2.hermitian);
  CHECK(std::abs(k2.trace_hint - cplx(1.0, 0.0)) < 1e-10);
}
