#pragma once

// Independent brute-force reference implementations used by the unit and
// acceptance suites. Nothing here shares code with the library's own
// computation paths.

#include <cstdint>
#include <random>
#include <vector>

#include "tda/cluster.hpp"
#include "tda/complex.hpp"
#include "tda/metric.hpp"
#include "tda/persistence.hpp"

namespace oracle {

// Uniform double in [lo, hi) from raw mt19937_64 output, avoiding the
// implementation-defined std distributions.
double uniform(std::mt19937_64& rng, double lo, double hi);
int uniform_int(std::mt19937_64& rng, int lo, int hi); // inclusive bounds

tda::PointCloud random_cloud(std::mt19937_64& rng, int n, int dim, double lo = 0.0,
                             double hi = 1.0);

// Rips by exhaustive subset enumeration: every vertex subset of size
// <= max_dim+1 with diameter <= max_eps, value = diameter.
std::vector<tda::Simplex> brute_rips(const tda::DistanceMatrix& dm, int max_dim, double max_eps);

// Persistence diagram from persistent Betti numbers computed by rank
// arithmetic over the two-element field at every critical scale.
// Zero-persistence classes never appear (they are invisible at snapshots).
tda::PersistenceDiagram brute_diagram(const tda::DistanceMatrix& dm, int max_dim, double max_eps);

// Exhaustive min over all matchings (with diagonal projections allowed) of
// the max / summed-power transport cost between two diagrams restricted to
// one dimension. Finite pairs only; callers strip infinite bars first.
double brute_bottleneck(const std::vector<tda::DiagramPoint>& a,
                        const std::vector<tda::DiagramPoint>& b);
double brute_wasserstein(const std::vector<tda::DiagramPoint>& a,
                         const std::vector<tda::DiagramPoint>& b, double p);

// Direct evaluation of the landscape definition: the largest m >= 0 such
// that at least k diagram points (b, d) satisfy b <= t - m and t + m <= d.
double brute_landscape_value(const std::vector<tda::DiagramPoint>& points, int k, double t);

// Complete-linkage agglomeration that recomputes every cluster distance
// from the leaf sets at each step.
tda::Dendrogram brute_complete_linkage(const tda::DistanceMatrix& dm);

} // namespace oracle
