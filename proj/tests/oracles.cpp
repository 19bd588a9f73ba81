#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace oracle {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

tda::PointCloud random_cloud(std::mt19937_64& rng, int n, int dim, double lo, double hi) {
    tda::PointCloud cloud(static_cast<std::size_t>(dim));
    std::vector<double> row(static_cast<std::size_t>(dim));
    for (int i = 0; i < n; ++i) {
        for (auto& x : row) x = uniform(rng, lo, hi);
        cloud.add(row);
    }
    return cloud;
}

std::vector<tda::Simplex> brute_rips(const tda::DistanceMatrix& dm, int max_dim, double max_eps) {
    const int n = static_cast<int>(dm.size());
    std::vector<tda::Simplex> out;
    std::vector<int> subset;
    // enumerate all vertex subsets of size <= max_dim+1 via bitmask when n
    // is small; diameters by direct max over pairs
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        if (std::popcount(mask) > max_dim + 1) continue;
        subset.clear();
        for (int v = 0; v < n; ++v)
            if (mask & (1ULL << v)) subset.push_back(v);
        double diam = 0.0;
        for (std::size_t i = 0; i < subset.size(); ++i)
            for (std::size_t j = i + 1; j < subset.size(); ++j)
                diam = std::max(diam, dm(subset[i], subset[j]));
        if (diam <= max_eps) out.push_back(tda::Simplex{subset, diam});
    }
    std::sort(out.begin(), out.end(), tda::simplex_before);
    return out;
}

namespace {

// Dense GF(2) linear algebra on bit-packed columns.
using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t nbits) { return Bits((nbits + 63) / 64, 0); }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= 1ULL << (i % 64); }
bool any_bit(const Bits& b) {
    for (auto w : b)
        if (w) return true;
    return false;
}
int lowest_bit(const Bits& b) {
    for (std::size_t w = 0; w < b.size(); ++w)
        if (b[w]) return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(b[w])));
    return -1;
}
void xor_into(Bits& target, const Bits& other) {
    for (std::size_t w = 0; w < other.size(); ++w) target[w] ^= other[w];
}
bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1; }

std::size_t gf2_rank(std::vector<Bits> cols) {
    std::vector<std::pair<int, Bits>> pivots; // (pivot row, reduced column)
    std::size_t rank = 0;
    for (auto& col : cols) {
        for (const auto& [row, pc] : pivots)
            if (test_bit(col, static_cast<std::size_t>(row))) xor_into(col, pc);
        if (any_bit(col)) {
            pivots.emplace_back(lowest_bit(col), col);
            ++rank;
        }
    }
    return rank;
}

// Basis of the null space of the matrix whose columns are given, expressed
// as chains over the columns' own index set (bit c set = column c in the
// combination).
std::vector<Bits> gf2_kernel_basis(const std::vector<Bits>& cols, std::size_t nrows) {
    const std::size_t ncols = cols.size();
    // augment each column with an identity tag below the row part
    std::vector<Bits> work(ncols);
    for (std::size_t c = 0; c < ncols; ++c) {
        work[c] = make_bits(nrows + ncols);
        for (std::size_t w = 0; w < cols[c].size(); ++w) work[c][w] = cols[c][w];
        set_bit(work[c], nrows + c);
    }
    auto row_part_nonzero = [&](const Bits& b) {
        for (std::size_t i = 0; i < nrows; ++i)
            if (test_bit(b, i)) return true;
        return false;
    };
    auto row_pivot = [&](const Bits& b) {
        for (std::size_t i = 0; i < nrows; ++i)
            if (test_bit(b, i)) return static_cast<int>(i);
        return -1;
    };
    std::vector<std::pair<int, std::size_t>> pivots; // (pivot row, column index)
    std::vector<Bits> kernel;
    for (std::size_t c = 0; c < ncols; ++c) {
        for (const auto& [row, pc] : pivots)
            if (test_bit(work[c], static_cast<std::size_t>(row))) xor_into(work[c], work[pc]);
        if (row_part_nonzero(work[c])) {
            pivots.emplace_back(row_pivot(work[c]), c);
        } else {
            Bits chain = make_bits(ncols);
            for (std::size_t t = 0; t < ncols; ++t)
                if (test_bit(work[c], nrows + t)) set_bit(chain, t);
            kernel.push_back(std::move(chain));
        }
    }
    return kernel;
}

} // namespace

tda::PersistenceDiagram brute_diagram(const tda::DistanceMatrix& dm, int max_dim, double max_eps) {
    const auto simplices = brute_rips(dm, max_dim, max_eps);

    // critical scales
    std::vector<double> values;
    for (const auto& s : simplices) values.push_back(s.value);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const int m = static_cast<int>(values.size());

    tda::PersistenceDiagram out;
    out.max_eps = max_eps;
    if (m == 0) return out;

    // per-dimension global simplex indexing
    std::vector<std::vector<const tda::Simplex*>> by_dim(static_cast<std::size_t>(max_dim) + 2);
    std::vector<std::map<std::vector<int>, int>> index_of(static_cast<std::size_t>(max_dim) + 2);
    for (const auto& s : simplices) {
        auto& list = by_dim[static_cast<std::size_t>(s.dim())];
        index_of[static_cast<std::size_t>(s.dim())].emplace(s.vertices, static_cast<int>(list.size()));
        list.push_back(&s);
    }

    // boundary column of a p-simplex over global (p-1)-simplex indices
    auto boundary_col = [&](const tda::Simplex& s) {
        const std::size_t p = static_cast<std::size_t>(s.dim());
        Bits col = make_bits(std::max<std::size_t>(by_dim[p - 1].size(), 1));
        std::vector<int> face(s.vertices.size() - 1);
        for (std::size_t skip = 0; skip < s.vertices.size(); ++skip) {
            std::size_t w = 0;
            for (std::size_t r = 0; r < s.vertices.size(); ++r)
                if (r != skip) face[w++] = s.vertices[r];
            set_bit(col, static_cast<std::size_t>(index_of[p - 1].at(face)));
        }
        return col;
    };

    for (int p = 0; p <= max_dim; ++p) {
        const auto& p_simplices = by_dim[static_cast<std::size_t>(p)];
        const auto& q_simplices = by_dim[static_cast<std::size_t>(p) + 1];
        const std::size_t np = p_simplices.size();
        if (np == 0) continue;
        const std::size_t rows_below = p == 0 ? 0 : by_dim[static_cast<std::size_t>(p) - 1].size();

        // kernel bases of d_p restricted to each snapshot, in global C_p
        // coordinates, and boundary columns of d_{p+1} per snapshot
        std::vector<std::vector<Bits>> kernel_at(m);
        std::vector<std::vector<Bits>> bcols_at(m);
        std::vector<std::size_t> rank_b_at(m, 0);
        for (int t = 0; t < m; ++t) {
            const double eps = values[static_cast<std::size_t>(t)];
            std::vector<Bits> cols;
            std::vector<int> col_to_global;
            for (std::size_t c = 0; c < np; ++c) {
                if (p_simplices[c]->value > eps) continue;
                col_to_global.push_back(static_cast<int>(c));
                if (p == 0)
                    cols.push_back(make_bits(1)); // zero column, no rows
                else
                    cols.push_back(boundary_col(*p_simplices[c]));
            }
            const auto kernel_local = gf2_kernel_basis(cols, p == 0 ? 0 : rows_below);
            for (const auto& kv : kernel_local) {
                Bits global = make_bits(np);
                for (std::size_t c = 0; c < col_to_global.size(); ++c)
                    if (test_bit(kv, c)) set_bit(global, static_cast<std::size_t>(col_to_global[c]));
                kernel_at[t].push_back(std::move(global));
            }
            for (const auto* q : q_simplices) {
                if (q->value > eps) continue;
                Bits col = make_bits(np);
                std::vector<int> face(q->vertices.size() - 1);
                for (std::size_t skip = 0; skip < q->vertices.size(); ++skip) {
                    std::size_t w = 0;
                    for (std::size_t r = 0; r < q->vertices.size(); ++r)
                        if (r != skip) face[w++] = q->vertices[r];
                    set_bit(col, static_cast<std::size_t>(
                                     index_of[static_cast<std::size_t>(p)].at(face)));
                }
                bcols_at[t].push_back(std::move(col));
            }
            rank_b_at[t] = gf2_rank(bcols_at[t]);
        }

        // persistent Betti: beta(i,j) = dim(Z_p(K_i) + B_p(K_j)) - rank B_p(K_j)
        auto beta = [&](int i, int j) -> long {
            if (i < 0) return 0;
            std::vector<Bits> span = kernel_at[i];
            span.insert(span.end(), bcols_at[j].begin(), bcols_at[j].end());
            return static_cast<long>(gf2_rank(std::move(span))) -
                   static_cast<long>(rank_b_at[j]);
        };

        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                const long mult = (beta(i, j - 1) - beta(i, j)) - (beta(i - 1, j - 1) - beta(i - 1, j));
                for (long c = 0; c < mult; ++c)
                    out.points.push_back({p, values[static_cast<std::size_t>(i)],
                                          values[static_cast<std::size_t>(j)]});
            }
            const long essential = beta(i, m - 1) - beta(i - 1, m - 1);
            for (long c = 0; c < essential; ++c)
                out.points.push_back(
                    {p, values[static_cast<std::size_t>(i)], tda::kInfiniteDeath});
        }
    }
    out.sort_points();
    return out;
}

namespace {

double matching_best(const std::vector<tda::DiagramPoint>& a,
                     const std::vector<tda::DiagramPoint>& b, std::size_t i,
                     std::vector<bool>& used, bool max_norm, double p) {
    auto point_cost = [&](const tda::DiagramPoint& x, const tda::DiagramPoint& y) {
        return std::max(std::abs(x.birth - y.birth), std::abs(x.death - y.death));
    };
    auto diag_cost = [](const tda::DiagramPoint& x) { return (x.death - x.birth) / 2.0; };
    auto fold = [&](double cost, double rest) {
        return max_norm ? std::max(cost, rest) : std::pow(cost, p) + rest;
    };
    if (i == a.size()) {
        // remaining unmatched b points go to the diagonal
        double total = 0.0;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!used[j]) total = fold(diag_cost(b[j]), total);
        return total;
    }
    // a[i] to its diagonal projection
    double best = fold(diag_cost(a[i]), matching_best(a, b, i + 1, used, max_norm, p));
    // a[i] to each unused b point
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (used[j]) continue;
        used[j] = true;
        best = std::min(best, fold(point_cost(a[i], b[j]),
                                   matching_best(a, b, i + 1, used, max_norm, p)));
        used[j] = false;
    }
    return best;
}

} // namespace

double brute_bottleneck(const std::vector<tda::DiagramPoint>& a,
                        const std::vector<tda::DiagramPoint>& b) {
    std::vector<bool> used(b.size(), false);
    return matching_best(a, b, 0, used, true, 1.0);
}

double brute_wasserstein(const std::vector<tda::DiagramPoint>& a,
                         const std::vector<tda::DiagramPoint>& b, double p) {
    std::vector<bool> used(b.size(), false);
    return std::pow(matching_best(a, b, 0, used, false, p), 1.0 / p);
}

double brute_landscape_value(const std::vector<tda::DiagramPoint>& points, int k, double t) {
    // sup over m >= 0 of: at least k points alive on [t-m, t+m]; the
    // candidate suprema are the per-point m_i = min(t - b_i, d_i - t).
    // A hair of slack keeps t-m from rounding past its own boundary.
    constexpr double slack = 1e-12;
    std::vector<double> ms;
    for (const auto& pt : points) {
        const double m = std::min(t - pt.birth, pt.death - t);
        if (m >= 0.0) ms.push_back(m);
    }
    double best = 0.0;
    for (double m : ms) {
        int count = 0;
        for (const auto& pt : points)
            if (pt.birth <= t - m + slack && t + m <= pt.death + slack) ++count;
        if (count >= k) best = std::max(best, m);
    }
    return best;
}

tda::Dendrogram brute_complete_linkage(const tda::DistanceMatrix& dm) {
    const std::size_t n = dm.size();
    tda::Dendrogram dg;
    dg.leaf_count = n;
    std::vector<std::pair<int, std::vector<int>>> clusters; // (id, leaves)
    for (std::size_t i = 0; i < n; ++i) clusters.push_back({static_cast<int>(i), {static_cast<int>(i)}});
    int next_id = static_cast<int>(n);
    while (clusters.size() > 1) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_a = 0, best_b = 1;
        for (std::size_t a = 0; a < clusters.size(); ++a) {
            for (std::size_t b = a + 1; b < clusters.size(); ++b) {
                double d = 0.0;
                for (int x : clusters[a].second)
                    for (int y : clusters[b].second) d = std::max(d, dm(x, y));
                const int lo = std::min(clusters[a].first, clusters[b].first);
                const int hi = std::max(clusters[a].first, clusters[b].first);
                const int cur_lo = std::min(clusters[best_a].first, clusters[best_b].first);
                const int cur_hi = std::max(clusters[best_a].first, clusters[best_b].first);
                if (d < best || (d == best && (lo < cur_lo || (lo == cur_lo && hi < cur_hi)))) {
                    best = d;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        dg.merges.push_back({std::min(clusters[best_a].first, clusters[best_b].first),
                             std::max(clusters[best_a].first, clusters[best_b].first), best});
        auto leaves = clusters[best_a].second;
        leaves.insert(leaves.end(), clusters[best_b].second.begin(), clusters[best_b].second.end());
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(best_b));
        clusters[best_a] = {next_id++, std::move(leaves)};
    }
    return dg;
}

} // namespace oracle
