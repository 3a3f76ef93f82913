#pragma once

#include <functional>
#include <vector>

#include "weylatlas/grid.hpp"

namespace weylatlas {

/// Counter evaluated at a control point; must be pure. A throwing counter
/// marks its cell invalid (-1) and the scan continues.
using Counter = std::function<int(const std::vector<double>&)>;

/// 2D phase-diagram scan over cell centers. OpenMP over cells; each cell
/// writes its own slot, so output is identical for any worker count.
PhaseRaster scan2d(const Counter& counter, const GridSpec& grid, int workers = 0);

/// 3D variant; a single-cell-thick axis reduces to the 2D scan of the slice
/// through that axis' center.
PhaseRaster scan3d(const Counter& counter, const GridSpec& grid, int workers = 0);

/// Serial reference implementations, kept for testing the parallel kernels.
PhaseRaster scan2d_serial(const Counter& counter, const GridSpec& grid);
PhaseRaster scan3d_serial(const Counter& counter, const GridSpec& grid);

/// Raster post-processing products for 2D rasters.
struct RegionComponent {
    int count_value = 0;
    int cells = 0;
    double area = 0.0;              // cells x cell area
    std::pair<int, int> seed_cell;  // representative cell (row, col)
};

struct BoundaryFeatures {
    /// Cells where some lateral (4-neighbor) count differs.
    std::vector<std::pair<int, int>> fold_cells;
    /// Cells whose 3x3 neighborhood holds >= 3 distinct valid counts:
    /// cusp / fold-crossing candidates.
    std::vector<std::pair<int, int>> junction_cells;
    /// Junction cells grouped by 8-connectivity.
    std::vector<std::vector<std::pair<int, int>>> junction_clusters;
    /// Connected components (4-connectivity) per count value.
    std::vector<RegionComponent> region_table;
    int invalid_cells = 0;
};

BoundaryFeatures extract_boundaries(const PhaseRaster& raster);

/// Area of the largest 4-connected component with the given count value;
/// 0 when the value is absent. Works for 2D and 3D rasters (3D uses
/// 6-connectivity and cell volume).
double region_area(const PhaseRaster& raster, int value);

}  // namespace weylatlas
