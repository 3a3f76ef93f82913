#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weylatlas {

struct Axis {
    std::string label;
    double min = 0.0;
    double max = 1.0;
    int resolution = 2;      // number of cells; samples are taken at cell centers
    bool periodic = false;

    double cell_size() const { return (max - min) / resolution; }
    double center(int i) const { return min + (i + 0.5) * cell_size(); }
};

/// Rectilinear scan grid over 1-3 control axes, plus fixed-coordinate
/// bindings for sliced scans (recorded for output metadata).
struct GridSpec {
    std::vector<Axis> axes;
    std::vector<std::pair<std::string, double>> fixed;

    int dims() const { return static_cast<int>(axes.size()); }
    std::size_t cell_count() const;
    /// Row-major flat index; axis 0 is slowest.
    std::size_t flat_index(const std::vector<int>& idx) const;
    std::vector<int> unflatten(std::size_t flat) const;
    std::vector<double> cell_center(std::size_t flat) const;

    /// Throws std::invalid_argument on empty axes, min >= max, or
    /// resolution < min_resolution.
    void validate(int min_resolution = 1) const;
};

/// Sentinel count for cells whose counter failed; keeps rasters rectangular.
inline constexpr int kInvalidCell = -1;

/// Weyl phase diagram raster: integer pre-image/Weyl-point counts over a
/// control-space grid.
struct PhaseRaster {
    GridSpec grid;
    std::vector<int> counts;  // row-major per GridSpec::flat_index
    std::string model_id;
    std::uint64_t config_hash = 0;
    std::string timestamp;    // informational only; never written to rasters

    int at(const std::vector<int>& idx) const { return counts[grid.flat_index(idx)]; }
    int max_count() const;
    std::vector<std::string> cell_errors;  // "i,j: message" for invalid cells
};

/// FNV-1a, used to fingerprint run configurations in raster metadata.
std::uint64_t fnv1a(const std::string& s);

}  // namespace weylatlas
