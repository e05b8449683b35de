#include "tslab/field_io.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <istream>
#include <string_view>

#include "tslab/errors.hpp"

namespace tslab {

namespace {

constexpr std::string_view kMagic = "TSLABFLD";
constexpr std::uint32_t kVersion = 1;

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> b{};
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  out.write(b.data(), b.size());
}

void put_u32(std::ostream& out, std::uint32_t v) {
  std::array<char, 4> b{};
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  out.write(b.data(), b.size());
}

void put_f64(std::ostream& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> b{};
  in.read(reinterpret_cast<char*>(b.data()), b.size());
  if (!in) throw InvalidInput("field container: truncated input");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

std::uint32_t get_u32(std::istream& in) {
  std::array<unsigned char, 4> b{};
  in.read(reinterpret_cast<char*>(b.data()), b.size());
  if (!in) throw InvalidInput("field container: truncated input");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}

double get_f64(std::istream& in) { return std::bit_cast<double>(get_u64(in)); }

void put_grid(std::ostream& out, const AxisGrid& g) {
  put_f64(out, g.origin());
  put_f64(out, g.step());
  put_u64(out, g.count());
}

AxisGrid get_grid(std::istream& in) {
  const double origin = get_f64(in);
  const double step = get_f64(in);
  const std::uint64_t count = get_u64(in);
  return AxisGrid(origin, step, static_cast<std::size_t>(count));
}

template <Domain D>
constexpr std::uint32_t domain_tag() {
  return D == Domain::time ? 0u : 1u;
}

}  // namespace

template <Domain D>
void write_field(std::ostream& out, const Field<D>& f) {
  out.write(kMagic.data(), static_cast<std::streamsize>(kMagic.size()));
  put_u32(out, kVersion);
  put_u32(out, domain_tag<D>());
  put_grid(out, f.xgrid());
  put_grid(out, f.axis());
  for (const cplx& v : f.values()) {
    put_f64(out, v.real());
    put_f64(out, v.imag());
  }
  if (!out) throw std::runtime_error("field container: write failed");
}

template <Domain D>
Field<D> read_field(std::istream& in) {
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || std::string_view(magic.data(), magic.size()) != kMagic) {
    throw InvalidInput("field container: bad magic");
  }
  if (get_u32(in) != kVersion) throw InvalidInput("field container: unsupported version");
  if (get_u32(in) != domain_tag<D>()) throw InvalidInput("field container: domain mismatch");
  const AxisGrid xgrid = get_grid(in);
  const AxisGrid axis = get_grid(in);
  std::vector<cplx> values(xgrid.count() * axis.count());
  for (cplx& v : values) {
    const double re = get_f64(in);
    const double im = get_f64(in);
    v = cplx(re, im);
  }
  return Field<D>(xgrid, axis, std::move(values));
}

template <Domain D>
void save_field(const std::filesystem::path& path, const Field<D>& f) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_field(out, f);
}

template <Domain D>
Field<D> load_field(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  return read_field<D>(in);
}

template <Domain D>
void write_field_csv(std::ostream& out, const Field<D>& f) {
  out << (D == Domain::time ? "x,t,re,im,abs\n" : "x,omega,re,im,abs\n");
  const auto flags = out.flags();
  out << std::setprecision(17);
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const cplx v = f(i, j);
      out << f.xgrid().coordinate(i) << ',' << f.axis().coordinate(j) << ',' << v.real() << ',' << v.imag()
          << ',' << std::abs(v) << '\n';
    }
  }
  out.flags(flags);
}

template void write_field(std::ostream&, const SpaceTimeField&);
template void write_field(std::ostream&, const SpaceFreqField&);
template SpaceTimeField read_field<Domain::time>(std::istream&);
template SpaceFreqField read_field<Domain::frequency>(std::istream&);
template void save_field(const std::filesystem::path&, const SpaceTimeField&);
template void save_field(const std::filesystem::path&, const SpaceFreqField&);
template SpaceTimeField load_field<Domain::time>(const std::filesystem::path&);
template SpaceFreqField load_field<Domain::frequency>(const std::filesystem::path&);
template void write_field_csv(std::ostream&, const SpaceTimeField&);
template void write_field_csv(std::ostream&, const SpaceFreqField&);

}  // namespace tslab
