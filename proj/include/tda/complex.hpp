#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tda/metric.hpp"

namespace tda {

// A simplex is its strictly increasing vertex list plus the scale at which
// it enters the filtration (its diameter; 0 for vertices).
struct Simplex {
    std::vector<int> vertices;
    double value = 0.0;

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

// Filtration order: (value, dimension, lexicographic vertices). Faces come
// before cofaces under this order.
bool simplex_before(const Simplex& a, const Simplex& b);

class FiltrationComplex {
public:
    FiltrationComplex() = default;

    // Sorts into filtration order and checks face closure and per-simplex
    // invariants; throws ConfigError when they fail.
    static FiltrationComplex from_simplices(std::vector<Simplex> simplices, int max_dim,
                                            double max_eps);

    // Sorts but skips validation; for callers that construct by a method
    // that guarantees closure. Downstream code reports broken closures.
    static FiltrationComplex from_simplices_unchecked(std::vector<Simplex> simplices, int max_dim,
                                                      double max_eps);

    const std::vector<Simplex>& simplices() const { return simplices_; }
    std::size_t size() const { return simplices_.size(); }
    int max_dim() const { return max_dim_; }
    double max_eps() const { return max_eps_; }

    // Number of simplices per dimension with value <= eps.
    std::vector<std::size_t> counts_at(double eps) const;

    // One simplex per line: "dim value v0 v1 ...".
    std::string dump() const;

private:
    friend FiltrationComplex build_rips(const DistanceMatrix&, int, double);

    std::vector<Simplex> simplices_;
    int max_dim_ = 0;
    double max_eps_ = 0.0;
};

// All simplices of dimension <= max_dim whose vertex set has diameter
// <= max_eps, filtration value = diameter. Empty input gives an empty
// complex; max_dim < 0 or max_eps <= 0 is a ConfigError.
FiltrationComplex build_rips(const DistanceMatrix& dm, int max_dim, double max_eps);

// Per-dimension simplex counts of the subcomplex at scale eps (eps >= 0).
std::vector<std::size_t> complex_at(const FiltrationComplex& fc, double eps);

} // namespace tda
