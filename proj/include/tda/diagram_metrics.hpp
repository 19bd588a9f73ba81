#pragma once

#include "tda/persistence.hpp"

namespace tda {

// Matching-based diagram distances (ground metric: sup norm; every point
// may match its diagonal projection at cost (death-birth)/2). Infinite bars
// are compared separately by birth difference; when their counts differ the
// distance is +infinity and *infinite_mismatch (if given) is set.

double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim,
                  bool* infinite_mismatch = nullptr);

// p >= 1. Exact assignment on the diagonal-augmented bipartite graph with
// edge costs ||.||_inf^p; returns the p-th root of the optimal total.
double wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim, double p,
                   bool* infinite_mismatch = nullptr);

// Dimension-0 table convention: one infinite bar per diagram carries no
// information and is excluded before comparing.
PersistenceDiagram drop_one_infinite_bar(const PersistenceDiagram& d, int dim);

} // namespace tda
