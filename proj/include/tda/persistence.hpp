#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "tda/complex.hpp"

namespace tda {

inline constexpr double kInfiniteDeath = std::numeric_limits<double>::infinity();

// Boundary operator over the two-element field: column j holds the sorted
// filtration positions of the codimension-1 faces of simplex j.
struct BoundaryMatrix {
    std::vector<std::vector<int>> columns;
    std::vector<int> dims;      // simplex dimension per column
    std::vector<double> values; // filtration value per column

    std::size_t size() const { return columns.size(); }
};

// Throws ComputeError naming the offending simplex if a face is missing.
BoundaryMatrix boundary_matrix(const FiltrationComplex& fc);

struct Pairing {
    std::vector<std::pair<int, int>> pairs; // (birth_index, death_index), birth ascending
    std::vector<int> unpaired;              // essential classes, ascending
};

enum class ReductionStrategy { plain, twist };

// Standard column reduction; the twist variant clears the column of each
// pivot row and is output-identical to plain reduction.
Pairing reduce(const BoundaryMatrix& bm, ReductionStrategy strategy = ReductionStrategy::twist);

struct DiagramPoint {
    int dim = 0;
    double birth = 0.0;
    double death = kInfiniteDeath;

    bool is_infinite() const { return death == kInfiniteDeath; }
    double persistence() const { return death - birth; }
};

bool operator==(const DiagramPoint& a, const DiagramPoint& b);
bool diagram_point_before(const DiagramPoint& a, const DiagramPoint& b); // (dim, birth, death)

struct PersistenceDiagram {
    std::vector<DiagramPoint> points; // sorted by diagram_point_before
    // Truncation scale of the source filtration; caps infinite bars in
    // barcodes and landscapes. Infinity when unknown (e.g. loaded files).
    double max_eps = kInfiniteDeath;

    std::vector<DiagramPoint> restrict_to(int dim) const;
    void sort_points();
};

// Zero-persistence pairs are dropped unless keep_zero_persistence is set.
PersistenceDiagram diagram(const FiltrationComplex& fc, const Pairing& pairing,
                           bool keep_zero_persistence = false);

// Convenience pipeline: build_rips -> boundary_matrix -> reduce -> diagram.
PersistenceDiagram rips_diagram(const DistanceMatrix& dm, int max_dim, double max_eps,
                                bool keep_zero_persistence = false);

// Step function eps -> betti_p(eps) = #{pairs of dim p with birth <= eps < death}.
class BettiProfile {
public:
    BettiProfile() = default;
    explicit BettiProfile(const PersistenceDiagram& d);

    int max_dim() const { return static_cast<int>(births_.size()) - 1; }
    std::size_t betti(int p, double eps) const;
    std::vector<double> critical_values() const; // sorted unique births and finite deaths

private:
    std::vector<std::vector<double>> births_; // per dim, sorted
    std::vector<std::vector<double>> deaths_; // per dim, sorted, finite only
};

BettiProfile betti_profile(const PersistenceDiagram& d);

} // namespace tda
