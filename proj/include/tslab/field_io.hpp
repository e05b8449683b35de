#pragma once

#include <filesystem>
#include <iosfwd>

#include "tslab/field.hpp"

namespace tslab {

// Binary field container, all integers and floats little-endian:
//   magic "TSLABFLD" | u32 version (1) | u32 domain (0 time, 1 frequency)
//   | x grid: f64 origin, f64 step, u64 count | axis grid: same layout
//   | rows*cols pairs (f64 re, f64 im), row-major over (x, axis).

template <Domain D>
void write_field(std::ostream& out, const Field<D>& f);

template <Domain D>
Field<D> read_field(std::istream& in);

template <Domain D>
void save_field(const std::filesystem::path& path, const Field<D>& f);

template <Domain D>
Field<D> load_field(const std::filesystem::path& path);

/// CSV with header "x,t,re,im,abs" (or "x,omega,..." for spectra).
template <Domain D>
void write_field_csv(std::ostream& out, const Field<D>& f);

}  // namespace tslab
