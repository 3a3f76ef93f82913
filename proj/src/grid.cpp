#include "weylatlas/grid.hpp"

#include <stdexcept>

namespace weylatlas {

std::size_t GridSpec::cell_count() const {
    std::size_t n = 1;
    for (const Axis& a : axes) n *= static_cast<std::size_t>(a.resolution);
    return n;
}

std::size_t GridSpec::flat_index(const std::vector<int>& idx) const {
    std::size_t flat = 0;
    for (std::size_t d = 0; d < axes.size(); ++d)
        flat = flat * axes[d].resolution + idx[d];
    return flat;
}

std::vector<int> GridSpec::unflatten(std::size_t flat) const {
    std::vector<int> idx(axes.size());
    for (std::size_t d = axes.size(); d-- > 0;) {
        idx[d] = static_cast<int>(flat % axes[d].resolution);
        flat /= axes[d].resolution;
    }
    return idx;
}

std::vector<double> GridSpec::cell_center(std::size_t flat) const {
    const auto idx = unflatten(flat);
    std::vector<double> x(axes.size());
    for (std::size_t d = 0; d < axes.size(); ++d) x[d] = axes[d].center(idx[d]);
    return x;
}

void GridSpec::validate(int min_resolution) const {
    if (axes.empty()) throw std::invalid_argument("grid has no axes");
    for (const Axis& a : axes) {
        if (!(a.min < a.max)) throw std::invalid_argument("axis min must be < max");
        if (a.resolution < min_resolution)
            throw std::invalid_argument("axis resolution below minimum");
    }
}

int PhaseRaster::max_count() const {
    int m = 0;
    for (int c : counts) m = std::max(m, c);
    return m;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace weylatlas
