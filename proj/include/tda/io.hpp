#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tda/complex.hpp"
#include "tda/embed.hpp"
#include "tda/landscape.hpp"
#include "tda/mapper.hpp"
#include "tda/metric.hpp"
#include "tda/persistence.hpp"
#include "tda/text.hpp"

namespace tda::io {

// Shortest decimal form that round-trips the exact double; infinities
// print as "inf"/"-inf".
std::string format_double(double v);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

// One point per row, comma-separated reals; optionally the first column is
// an opaque id.
PointCloud load_point_cloud_csv(const std::filesystem::path& path, bool first_column_ids);

// Header "dim,birth,death", one row per pair, "inf" for infinite deaths.
void write_diagram_csv(const std::filesystem::path& path, const PersistenceDiagram& d);
PersistenceDiagram load_diagram_csv(const std::filesystem::path& path);

// Header "k,t,value", rows at critical points.
void write_landscape_csv(const std::filesystem::path& path, const Landscape& l);

// Header "doc_id,x[,y,...]".
void write_embedding_csv(const std::filesystem::path& path, const Embedding& e);

// Sparse triplets "doc,term,weight" plus one vocab entry per line.
void write_dtm_csv(const std::filesystem::path& matrix_path,
                   const std::filesystem::path& vocab_path, const DocumentTermMatrix& dtm);

void write_complex_text(const std::filesystem::path& path, const FiltrationComplex& fc);

// {nodes: [{id, bin, size, members, composition}], edges: [{source,
// target, shared}]}; members are the row ids. Byte-deterministic.
std::string mapper_graph_json(const MapperGraph& g, const std::vector<std::string>& row_ids);
void write_mapper_json(const std::filesystem::path& path, const MapperGraph& g,
                       const std::vector<std::string>& row_ids);

// Node area scales with member count, fill color by majority label.
std::string mapper_graph_dot(const MapperGraph& g);
void write_mapper_dot(const std::filesystem::path& path, const MapperGraph& g);

// Header "cluster,label,count,share"; own-label rows for label-named
// clusters, all labels for "both".
void write_purity_csv(const std::filesystem::path& path, const PurityReport& report);

// Self-contained report: rendered graph SVG plus per-node top terms.
void write_mapper_html(const std::filesystem::path& path, const MapperGraph& g,
                       const Embedding& lens,
                       const std::vector<std::vector<std::pair<std::string, double>>>& node_terms);

} // namespace tda::io
