#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "jdet/types.hpp"

namespace jdet {

enum class ScanFormat {
    XyCsv,     // lines "x,y" in meters
    PolarCsv,  // lines "angle_deg,range_m"; "inf" range means no return
};

std::optional<ScanFormat> parse_scan_format(const std::string& text);

/// Loads a scan file. Polar rows are converted with x = r cos(theta),
/// y = r sin(theta); rows whose range is "inf" (or >= max_range, when the
/// caller knows the sensor's limit) are no-returns and dropped. Parse errors
/// report the 1-based line number; an empty or all-dropped file is an error.
PointCloud load_cloud(const std::string& path, ScanFormat format,
                      double max_range = std::numeric_limits<double>::infinity());

/// Writes xy-csv with enough digits for an exact double round-trip.
void save_cloud_xy(const PointCloud& cloud, const std::string& path);

/// JSON report: num_junctions, labels, eigenvalues_head, objective,
/// runtime_seconds, params — in that key order, numbers at full precision.
void write_report(const JunctionReport& report, const DetectorParams& params,
                  const std::string& path);

/// Scatter plot of the labeled cloud: one circle per point colored by cluster
/// (fixed palette, cycled), sensor origin marked, 1 m grid, auto-fit viewBox,
/// "<k> junctions" caption. Output is byte-deterministic for equal inputs.
void render_svg(const PointCloud& cloud, const std::vector<int>& labels,
                const std::string& path);

/// Command-line entry point (subcommands: detect, simulate, bench).
/// Returns 0 on success, 1 on detection/parse errors, 2 on usage errors.
int cli_main(int argc, const char* const* argv);

}  // namespace jdet
