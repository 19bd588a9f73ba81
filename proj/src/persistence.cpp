#include "tda/persistence.hpp"

#include <algorithm>
#include <unordered_map>

#include "tda/errors.hpp"

namespace tda {

namespace {

struct VertexListHash {
    std::size_t operator()(const std::vector<int>& vs) const {
        std::size_t h = vs.size();
        for (int v : vs) h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

std::string vertices_to_string(const std::vector<int>& vs) {
    std::string s = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vs[i]);
    }
    return s + "]";
}

// Column addition over the two-element field: symmetric difference of
// sorted index lists.
void add_column(std::vector<int>& target, const std::vector<int>& other, std::vector<int>& scratch) {
    scratch.clear();
    std::set_symmetric_difference(target.begin(), target.end(), other.begin(), other.end(),
                                  std::back_inserter(scratch));
    target.swap(scratch);
}

} // namespace

BoundaryMatrix boundary_matrix(const FiltrationComplex& fc) {
    const auto& simplices = fc.simplices();
    std::unordered_map<std::vector<int>, int, VertexListHash> position;
    position.reserve(simplices.size());
    for (std::size_t j = 0; j < simplices.size(); ++j) position.emplace(simplices[j].vertices, j);

    BoundaryMatrix bm;
    bm.columns.resize(simplices.size());
    bm.dims.resize(simplices.size());
    bm.values.resize(simplices.size());
    std::vector<int> face;
    for (std::size_t j = 0; j < simplices.size(); ++j) {
        const auto& s = simplices[j];
        bm.dims[j] = s.dim();
        bm.values[j] = s.value;
        if (s.dim() == 0) continue;
        auto& col = bm.columns[j];
        col.reserve(s.vertices.size());
        face.resize(s.vertices.size() - 1);
        for (std::size_t skip = 0; skip < s.vertices.size(); ++skip) {
            std::size_t w = 0;
            for (std::size_t r = 0; r < s.vertices.size(); ++r)
                if (r != skip) face[w++] = s.vertices[r];
            auto it = position.find(face);
            if (it == position.end())
                throw ComputeError("boundary_matrix: face " + vertices_to_string(face) +
                                   " of simplex " + vertices_to_string(s.vertices) +
                                   " not present in the filtration");
            col.push_back(it->second);
        }
        std::sort(col.begin(), col.end());
        if (!col.empty() && col.back() >= static_cast<int>(j))
            throw ComputeError("boundary_matrix: face of simplex " +
                               vertices_to_string(s.vertices) + " does not precede it");
    }
    return bm;
}

namespace {

Pairing finish_pairing(std::vector<std::pair<int, int>> pairs,
                       const std::vector<std::vector<int>>& cols,
                       const std::vector<int>& low_to_col) {
    Pairing p;
    p.pairs = std::move(pairs);
    std::sort(p.pairs.begin(), p.pairs.end());
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (cols[i].empty() && low_to_col[i] < 0) p.unpaired.push_back(static_cast<int>(i));
    return p;
}

Pairing reduce_plain(const BoundaryMatrix& bm) {
    std::vector<std::vector<int>> cols = bm.columns;
    std::vector<int> low_to_col(cols.size(), -1);
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> scratch;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto& col = cols[j];
        while (!col.empty()) {
            const int low = col.back();
            const int k = low_to_col[low];
            if (k < 0) break;
            add_column(col, cols[k], scratch);
        }
        if (!col.empty()) {
            low_to_col[col.back()] = static_cast<int>(j);
            pairs.emplace_back(col.back(), static_cast<int>(j));
        }
    }
    return finish_pairing(std::move(pairs), cols, low_to_col);
}

Pairing reduce_twist(const BoundaryMatrix& bm) {
    std::vector<std::vector<int>> cols = bm.columns;
    std::vector<int> low_to_col(cols.size(), -1);
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> scratch;
    int max_dim = 0;
    for (int d : bm.dims) max_dim = std::max(max_dim, d);
    for (int d = max_dim; d >= 1; --d) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (bm.dims[j] != d) continue;
            auto& col = cols[j];
            while (!col.empty()) {
                const int low = col.back();
                const int k = low_to_col[low];
                if (k < 0) break;
                add_column(col, cols[k], scratch);
            }
            if (!col.empty()) {
                const int low = col.back();
                low_to_col[low] = static_cast<int>(j);
                pairs.emplace_back(low, static_cast<int>(j));
                // the class born at `low` dies here; its column can never
                // produce a pair, so clear it
                cols[low].clear();
            }
        }
    }
    return finish_pairing(std::move(pairs), cols, low_to_col);
}

} // namespace

Pairing reduce(const BoundaryMatrix& bm, ReductionStrategy strategy) {
    return strategy == ReductionStrategy::plain ? reduce_plain(bm) : reduce_twist(bm);
}

bool operator==(const DiagramPoint& a, const DiagramPoint& b) {
    return a.dim == b.dim && a.birth == b.birth && a.death == b.death;
}

bool diagram_point_before(const DiagramPoint& a, const DiagramPoint& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.birth != b.birth) return a.birth < b.birth;
    return a.death < b.death;
}

std::vector<DiagramPoint> PersistenceDiagram::restrict_to(int dim) const {
    std::vector<DiagramPoint> out;
    for (const auto& p : points)
        if (p.dim == dim) out.push_back(p);
    return out;
}

void PersistenceDiagram::sort_points() {
    std::sort(points.begin(), points.end(), diagram_point_before);
}

PersistenceDiagram diagram(const FiltrationComplex& fc, const Pairing& pairing,
                           bool keep_zero_persistence) {
    const auto& simplices = fc.simplices();
    PersistenceDiagram d;
    d.max_eps = fc.max_eps();
    for (const auto& [i, j] : pairing.pairs) {
        const double birth = simplices[i].value;
        const double death = simplices[j].value;
        if (birth == death && !keep_zero_persistence) continue;
        d.points.push_back({simplices[i].dim(), birth, death});
    }
    for (int i : pairing.unpaired)
        d.points.push_back({simplices[i].dim(), simplices[i].value, kInfiniteDeath});
    d.sort_points();
    return d;
}

PersistenceDiagram rips_diagram(const DistanceMatrix& dm, int max_dim, double max_eps,
                                bool keep_zero_persistence) {
    const FiltrationComplex fc = build_rips(dm, max_dim, max_eps);
    return diagram(fc, reduce(boundary_matrix(fc)), keep_zero_persistence);
}

BettiProfile::BettiProfile(const PersistenceDiagram& d) {
    int max_dim = 0;
    for (const auto& p : d.points) max_dim = std::max(max_dim, p.dim);
    births_.resize(static_cast<std::size_t>(max_dim) + 1);
    deaths_.resize(static_cast<std::size_t>(max_dim) + 1);
    for (const auto& p : d.points) {
        births_[p.dim].push_back(p.birth);
        if (!p.is_infinite()) deaths_[p.dim].push_back(p.death);
    }
    for (auto& v : births_) std::sort(v.begin(), v.end());
    for (auto& v : deaths_) std::sort(v.begin(), v.end());
}

std::size_t BettiProfile::betti(int p, double eps) const {
    if (p < 0 || p >= static_cast<int>(births_.size())) return 0;
    const auto born = std::upper_bound(births_[p].begin(), births_[p].end(), eps) -
                      births_[p].begin();
    const auto dead = std::upper_bound(deaths_[p].begin(), deaths_[p].end(), eps) -
                      deaths_[p].begin();
    return static_cast<std::size_t>(born - dead);
}

std::vector<double> BettiProfile::critical_values() const {
    std::vector<double> vals;
    for (const auto& v : births_) vals.insert(vals.end(), v.begin(), v.end());
    for (const auto& v : deaths_) vals.insert(vals.end(), v.begin(), v.end());
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

BettiProfile betti_profile(const PersistenceDiagram& d) { return BettiProfile(d); }

} // namespace tda
