#pragma once

#include <string>
#include <vector>

#include "hoq/search.hpp"

namespace hoq {

/// Stable `%.12g` formatting used by every text output for reproducibility.
std::string format_double(double v);

/// `beta,gamma,relative_error,success_probability` rows in row-major grid
/// order.
std::string grid_to_csv(const GridResult& grid);

/// Header is fixed:
/// `scheme,p,seed,relative_error,success_probability,evaluations,filtered`.
/// `filtered` is 1 when the record was flagged as an IQR outlier.
std::string records_to_csv(const std::vector<SampleRecord>& records);

/// Raster heatmap of the relative-error surface with a linear color ramp
/// from the surface minimum to maximum and a red marker on the best point.
/// Deterministic bytes for a given surface.
std::string grid_to_svg(const GridResult& grid);

/// Writes via a temp file in the same directory plus rename, so a failed
/// write never leaves a partial file behind.
void atomic_write_file(const std::string& path, const std::string& contents);

}  // namespace hoq
