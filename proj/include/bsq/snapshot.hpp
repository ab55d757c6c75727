#pragma once

#include <string>

#include "bsq/field.hpp"

namespace bsq {

/// Field snapshot format: the 5 bytes "BSQF\n", one JSON header line
/// {"dim", "scale", "n", "dealias_fraction", "comps", "kind"} terminated by
/// '\n', then comps * n^dim little-endian (re, im) double pairs in the
/// row-major lattice order (last axis fastest).
void write_snapshot(const std::string& path, const SpectralField& f,
                    const std::string& kind = "field");

/// Throws std::runtime_error on bad magic, malformed header, or short data.
SpectralField read_snapshot(const std::string& path, std::string* kind = nullptr);

}  // namespace bsq
