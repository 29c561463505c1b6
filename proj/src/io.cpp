#include "qtom/io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace qtom {

namespace {

void put_bytes(std::ofstream& os, std::uint64_t v, int nbytes) {
  char b[8];
  for (int i = 0; i < nbytes; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(b, nbytes);
}

std::uint64_t get_bytes(std::ifstream& is, int nbytes) {
  unsigned char b[8] = {};
  is.read(reinterpret_cast<char*>(b), nbytes);
  if (!is) throw io_error("unexpected end of file");
  std::uint64_t v = 0;
  for (int i = 0; i < nbytes; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

void put_f64(std::ofstream& os, double x) { put_bytes(os, std::bit_cast<std::uint64_t>(x), 8); }

double get_f64(std::ifstream& is) { return std::bit_cast<double>(get_bytes(is, 8)); }

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw io_error("cannot open for writing: " + path.string());
  return os;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw io_error("cannot open for reading: " + path.string());
  return is;
}

void check_magic(std::ifstream& is, const char* magic, const std::filesystem::path& path) {
  char got[4];
  is.read(got, 4);
  if (!is || std::memcmp(got, magic, 4) != 0)
    throw io_error("bad magic in " + path.string() + " (expected " + magic + ")");
}

void put_axis(std::ofstream& os, const Axis& a) {
  put_f64(os, a.min);
  put_f64(os, a.step);
  put_bytes(os, a.count, 8);
}

Axis get_axis(std::ifstream& is) {
  Axis a;
  a.min = get_f64(is);
  a.step = get_f64(is);
  a.count = get_bytes(is, 8);
  if (a.count < 2 || a.count > (std::size_t(1) << 32) || !(a.step > 0.0) || !std::isfinite(a.min))
    throw io_error("malformed axis record");
  return a;
}

}  // namespace

void write_qtf(const std::filesystem::path& path, const SampledField& f) {
  f.validate();
  std::ofstream os = open_out(path);
  os.write("QTF1", 4);
  put_bytes(os, f.dim(), 4);
  for (const Axis& a : f.axes) put_axis(os, a);
  const std::uint8_t dtype = f.is_real_valued ? 0 : 1;
  os.put(static_cast<char>(dtype));
  for (const cplx& z : f.data) {
    put_f64(os, z.real());
    if (dtype == 1) put_f64(os, z.imag());
  }
  if (!os) throw io_error("write failed: " + path.string());
}

SampledField read_qtf(const std::filesystem::path& path) {
  std::ifstream is = open_in(path);
  check_magic(is, "QTF1", path);
  const std::uint64_t ndim = get_bytes(is, 4);
  if (ndim < 1 || ndim > 2) throw io_error("unsupported ndim in " + path.string());
  SampledField f;
  for (std::uint64_t d = 0; d < ndim; ++d) f.axes.push_back(get_axis(is));
  const std::uint64_t dtype = get_bytes(is, 1);
  if (dtype > 1) throw io_error("unknown dtype in " + path.string());
  std::size_t n = 1;
  for (const Axis& a : f.axes) n *= a.count;
  f.data.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double re = get_f64(is);
    const double im = (dtype == 1) ? get_f64(is) : 0.0;
    f.data[i] = cplx(re, im);
  }
  f.is_real_valued = (dtype == 0);
  return f;
}

void write_qtg(const std::filesystem::path& path, const Tomogram& t) {
  std::ofstream os = open_out(path);
  os.write("QTG1", 4);
  put_bytes(os, t.angles.size(), 8);
  for (double a : t.angles) put_f64(os, a);
  put_axis(os, t.x_axis);
  for (double w : t.omega) put_f64(os, w);
  if (!os) throw io_error("write failed: " + path.string());
}

Tomogram read_qtg(const std::filesystem::path& path) {
  std::ifstream is = open_in(path);
  check_magic(is, "QTG1", path);
  const std::uint64_t na = get_bytes(is, 8);
  if (na == 0 || na > (std::size_t(1) << 24)) throw io_error("malformed angle count");
  Tomogram t;
  t.angles.resize(na);
  for (double& a : t.angles) a = get_f64(is);
  t.x_axis = get_axis(is);
  t.omega.resize(na * t.x_axis.count);
  for (double& w : t.omega) w = get_f64(is);
  return t;
}

void write_csv(const std::filesystem::path& path, const SampledField& f) {
  f.validate();
  std::ofstream os(path, std::ios::trunc);
  if (!os) throw io_error("cannot open for writing: " + path.string());
  os.precision(17);
  if (f.dim() == 1) {
    os << "x,re,im\n";
    for (std::size_t i = 0; i < f.count(0); ++i)
      os << f.axes[0].coord(i) << ',' << f.at(i).real() << ',' << f.at(i).imag() << '\n';
  } else {
    os << "x0,x1,re,im\n";
    for (std::size_t i = 0; i < f.count(0); ++i)
      for (std::size_t j = 0; j < f.count(1); ++j)
        os << f.axes[0].coord(i) << ',' << f.axes[1].coord(j) << ',' << f.at(i, j).real() << ','
           << f.at(i, j).imag() << '\n';
  }
  if (!os) throw io_error("write failed: " + path.string());
}

void write_csv(const std::filesystem::path& path, const Tomogram& t) {
  std::ofstream os(path, std::ios::trunc);
  if (!os) throw io_error("cannot open for writing: " + path.string());
  os.precision(17);
  os << "x,alpha,omega\n";
  for (std::size_t a = 0; a < t.angle_count(); ++a)
    for (std::size_t i = 0; i < t.x_axis.count; ++i)
      os << t.x_axis.coord(i) << ',' << t.angles[a] << ',' << t.value(a, i) << '\n';
  if (!os) throw io_error("write failed: " + path.string());
}

DensityKernel kernel_from_field(SampledField f) {
  f.validate();
  if (f.dim() != 2) throw io_error("kernel file must hold a 2-D field");
  DensityKernel k;
  k.q_axis = f.axes[0];
  k.qprime_axis = f.axes[1];
  k.rho = std::move(f);
  k.rho.verify_hermitian();
  k.hermitian = k.rho.is_hermitian_kernel;
  k.trace_hint = k.trace();
  return k;
}

PureState state_from_field(const SampledField& f) {
  f.validate();
  if (f.dim() != 1) throw io_error("state file must hold a 1-D field");
  PureState s;
  s.axis = f.axes[0];
  s.psi = f.data;
  if (std::abs(s.norm() - 1.0) > 1e-6)
    throw numeric_error("state file is not normalized on its grid");
  return s;
}

}  // namespace qtom
