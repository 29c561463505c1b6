#pragma once

#include <filesystem>

#include "qtom/tomography.hpp"

namespace qtom {

/// QTF field file, all multi-byte values little-endian:
///   magic "QTF1", u32 ndim, per axis {f64 min, f64 step, u64 count},
///   u8 dtype (0 = f64, 1 = complex f64 interleaved re,im), row-major payload.
/// Real-valued fields (verified flag) are stored as dtype 0.
void write_qtf(const std::filesystem::path& path, const SampledField& f);
SampledField read_qtf(const std::filesystem::path& path);

/// QTG tomogram file: magic "QTG1", u64 angle count, f64 angles,
/// x axis {f64 min, f64 step, u64 count}, then the angle-major f64 payload.
void write_qtg(const std::filesystem::path& path, const Tomogram& t);
Tomogram read_qtg(const std::filesystem::path& path);

/// One row per grid point: coordinates, then re, im.
void write_csv(const std::filesystem::path& path, const SampledField& f);
/// One row per (x, angle) sample: x, alpha, omega.
void write_csv(const std::filesystem::path& path, const Tomogram& t);

/// Kernel view of a 2-D QTF field: verifies hermiticity, computes the trace.
DensityKernel kernel_from_field(SampledField f);
/// State view of a 1-D QTF field: checks normalization within 1e-6.
PureState state_from_field(const SampledField& f);

}  // namespace qtom
