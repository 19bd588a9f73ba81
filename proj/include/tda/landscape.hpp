#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tda/persistence.hpp"

namespace tda {

// Persistence landscape stored exactly: level k is the k-th largest tent
// max(0, min(t-b, d-t)) over the diagram's points, kept as sorted
// piecewise-linear critical points.
class Landscape {
public:
    struct CriticalPoint {
        double t = 0.0;
        double value = 0.0;
    };
    using Level = std::vector<CriticalPoint>;

    Landscape() = default;
    Landscape(std::vector<Level> levels, double t_min, double t_max);

    int levels() const { return static_cast<int>(levels_.size()); }
    const Level& level(int k) const { return levels_[static_cast<std::size_t>(k) - 1]; } // 1-based
    double t_min() const { return t_min_; }
    double t_max() const { return t_max_; }
    bool is_zero() const { return levels_.empty(); }

    // Linear interpolation between critical points; 0 outside the support
    // and for k beyond the stored levels. k is 1-based.
    double eval(int k, double t) const;

private:
    std::vector<Level> levels_;
    double t_min_ = 0.0;
    double t_max_ = 0.0;
};

// Landscape of the dimension-dim points of d, levels 1..k_max. Infinite
// deaths are truncated at inf_cap; a negative inf_cap means "use d.max_eps,
// else the largest finite death". An empty selection yields the zero
// landscape.
Landscape build_landscape(const PersistenceDiagram& d, int dim, int k_max, double inf_cap = -1.0);

// Pointwise arithmetic mean, exact on the union of critical points; levels
// beyond a landscape's depth count as zero. Rejects an empty list.
Landscape mean_landscape(const std::vector<Landscape>& landscapes);

double eval_landscape(const Landscape& l, int k, double t);

} // namespace tda
