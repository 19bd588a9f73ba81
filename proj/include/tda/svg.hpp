#pragma once

#include <string>

#include "tda/embed.hpp"
#include "tda/landscape.hpp"
#include "tda/mapper.hpp"
#include "tda/persistence.hpp"

namespace tda::svg {

// One horizontal line per pair, stacked bands per dimension; infinite bars
// capped at `cap` (defaults to the diagram's max_eps or the data range).
std::string barcode(const PersistenceDiagram& d, double cap = -1.0);

// Overlaid polylines, one per level.
std::string landscape(const Landscape& l);

// Nodes at the mean lens position of their members, radius by member
// count, color by majority label.
std::string mapper_graph(const MapperGraph& g, const Embedding& lens);

} // namespace tda::svg
