#include "tda/complex.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "tda/errors.hpp"

namespace tda {

namespace {

std::string vertices_to_string(const std::vector<int>& vs) {
    std::string s = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vs[i]);
    }
    return s + "]";
}

void append_double(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

} // namespace

bool simplex_before(const Simplex& a, const Simplex& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                                        b.vertices.end());
}

FiltrationComplex FiltrationComplex::from_simplices(std::vector<Simplex> simplices, int max_dim,
                                                    double max_eps) {
    std::sort(simplices.begin(), simplices.end(), simplex_before);
    std::map<std::vector<int>, double> by_vertices;
    for (const auto& s : simplices) {
        if (s.vertices.empty()) throw ConfigError("filtration: empty simplex");
        if (!std::is_sorted(s.vertices.begin(), s.vertices.end()) ||
            std::adjacent_find(s.vertices.begin(), s.vertices.end()) != s.vertices.end())
            throw ConfigError("filtration: vertices of " + vertices_to_string(s.vertices) +
                              " not strictly increasing");
        if (s.value < 0.0 || (s.dim() == 0 && s.value != 0.0))
            throw ConfigError("filtration: bad value for simplex " + vertices_to_string(s.vertices));
        if (!by_vertices.emplace(s.vertices, s.value).second)
            throw ConfigError("filtration: duplicate simplex " + vertices_to_string(s.vertices));
    }
    for (const auto& s : simplices) {
        if (s.dim() == 0) continue;
        std::vector<int> face(s.vertices.size() - 1);
        for (std::size_t skip = 0; skip < s.vertices.size(); ++skip) {
            std::size_t w = 0;
            for (std::size_t r = 0; r < s.vertices.size(); ++r)
                if (r != skip) face[w++] = s.vertices[r];
            auto it = by_vertices.find(face);
            if (it == by_vertices.end())
                throw ConfigError("filtration: face " + vertices_to_string(face) + " of " +
                                  vertices_to_string(s.vertices) + " missing");
            if (it->second > s.value)
                throw ConfigError("filtration: face " + vertices_to_string(face) +
                                  " enters after its coface " + vertices_to_string(s.vertices));
        }
    }
    FiltrationComplex fc;
    fc.simplices_ = std::move(simplices);
    fc.max_dim_ = max_dim;
    fc.max_eps_ = max_eps;
    return fc;
}

FiltrationComplex FiltrationComplex::from_simplices_unchecked(std::vector<Simplex> simplices,
                                                              int max_dim, double max_eps) {
    std::sort(simplices.begin(), simplices.end(), simplex_before);
    FiltrationComplex fc;
    fc.simplices_ = std::move(simplices);
    fc.max_dim_ = max_dim;
    fc.max_eps_ = max_eps;
    return fc;
}

std::vector<std::size_t> FiltrationComplex::counts_at(double eps) const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(max_dim_) + 1, 0);
    for (const auto& s : simplices_)
        if (s.value <= eps) ++counts[static_cast<std::size_t>(s.dim())];
    return counts;
}

std::string FiltrationComplex::dump() const {
    std::string out;
    for (const auto& s : simplices_) {
        out += std::to_string(s.dim());
        out += ' ';
        append_double(out, s.value);
        for (int v : s.vertices) {
            out += ' ';
            out += std::to_string(v);
        }
        out += '\n';
    }
    return out;
}

namespace {

// Incremental clique expansion: every simplex is reached exactly once by
// extending with a vertex smaller than all current members, so candidate
// sets stay inside lower-neighbor lists.
void expand_cofaces(const DistanceMatrix& dm, const std::vector<std::vector<int>>& lower_nbrs,
                    int max_dim, std::vector<int>& current, double current_value,
                    const std::vector<int>& candidates, std::vector<Simplex>& out) {
    for (int v : candidates) {
        double value = current_value;
        for (int w : current) value = std::max(value, dm(v, w));

        std::vector<int> vertices;
        vertices.reserve(current.size() + 1);
        vertices.push_back(v);
        vertices.insert(vertices.end(), current.begin(), current.end());
        out.push_back(Simplex{vertices, value});

        if (static_cast<int>(vertices.size()) - 1 < max_dim) {
            std::vector<int> next;
            std::set_intersection(candidates.begin(), candidates.end(), lower_nbrs[v].begin(),
                                  lower_nbrs[v].end(), std::back_inserter(next));
            if (!next.empty()) {
                std::swap(current, vertices);
                expand_cofaces(dm, lower_nbrs, max_dim, current, value, next, out);
                std::swap(current, vertices);
            }
        }
    }
}

} // namespace

FiltrationComplex build_rips(const DistanceMatrix& dm, int max_dim, double max_eps) {
    if (max_dim < 0) throw ConfigError("build_rips: max_dim must be >= 0");
    if (max_eps <= 0.0) throw ConfigError("build_rips: max_eps must be > 0");

    const int n = static_cast<int>(dm.size());
    FiltrationComplex fc;
    fc.max_dim_ = max_dim;
    fc.max_eps_ = max_eps;
    if (n == 0) return fc;

    std::vector<std::vector<int>> lower_nbrs(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (dm(i, j) <= max_eps) lower_nbrs[j].push_back(i);

    auto& simplices = fc.simplices_;
    for (int v = 0; v < n; ++v) simplices.push_back(Simplex{{v}, 0.0});
    if (max_dim > 0) {
        std::vector<int> current;
        for (int v = 0; v < n; ++v) {
            if (lower_nbrs[v].empty()) continue;
            current.assign(1, v);
            expand_cofaces(dm, lower_nbrs, max_dim, current, 0.0, lower_nbrs[v], simplices);
        }
    }
    std::sort(simplices.begin(), simplices.end(), simplex_before);
    return fc;
}

std::vector<std::size_t> complex_at(const FiltrationComplex& fc, double eps) {
    if (eps < 0.0) throw ConfigError("complex_at: eps must be >= 0");
    return fc.counts_at(eps);
}

} // namespace tda
