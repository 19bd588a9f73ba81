#include "tda/landscape.hpp"

#include <algorithm>
#include <cmath>

#include "tda/errors.hpp"

namespace tda {

namespace {

using Level = Landscape::Level;
using CriticalPoint = Landscape::CriticalPoint;

bool exactly_collinear(const CriticalPoint& a, const CriticalPoint& b, const CriticalPoint& c) {
    return (b.t - a.t) * (c.value - a.value) == (c.t - a.t) * (b.value - a.value);
}

// Drop interior points that are exactly collinear with their neighbors and
// trim runs of zeros at both ends to a single boundary zero.
Level compress_level(Level pts) {
    Level out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        while (out.size() >= 2 && exactly_collinear(out[out.size() - 2], out.back(), p))
            out.pop_back();
        out.push_back(p);
    }
    while (out.size() >= 2 && out[0].value == 0.0 && out[1].value == 0.0)
        out.erase(out.begin());
    while (out.size() >= 2 && out[out.size() - 1].value == 0.0 && out[out.size() - 2].value == 0.0)
        out.pop_back();
    if (out.size() == 1 && out[0].value == 0.0) out.clear();
    return out;
}

double tent_value(double birth, double death, double t) {
    return std::max(0.0, std::min(t - birth, death - t));
}

} // namespace

Landscape::Landscape(std::vector<Level> levels, double t_min, double t_max)
    : levels_(std::move(levels)), t_min_(t_min), t_max_(t_max) {}

double Landscape::eval(int k, double t) const {
    if (k < 1 || k > levels()) return 0.0;
    const Level& lv = levels_[static_cast<std::size_t>(k) - 1];
    if (lv.empty() || t < lv.front().t || t > lv.back().t) return 0.0;
    auto it = std::lower_bound(lv.begin(), lv.end(), t,
                               [](const CriticalPoint& p, double x) { return p.t < x; });
    if (it->t == t) return it->value;
    const CriticalPoint& hi = *it;
    const CriticalPoint& lo = *(it - 1);
    return lo.value + (t - lo.t) * (hi.value - lo.value) / (hi.t - lo.t);
}

double eval_landscape(const Landscape& l, int k, double t) { return l.eval(k, t); }

Landscape build_landscape(const PersistenceDiagram& d, int dim, int k_max, double inf_cap) {
    if (k_max < 1) throw ConfigError("build_landscape: k_max must be >= 1");

    double cap = inf_cap;
    if (cap < 0.0) {
        if (d.max_eps != kInfiniteDeath) {
            cap = d.max_eps;
        } else {
            cap = 0.0;
            for (const auto& p : d.points)
                if (p.dim == dim && !p.is_infinite()) cap = std::max(cap, p.death);
        }
    }

    std::vector<std::pair<double, double>> tents;
    for (const auto& p : d.points) {
        if (p.dim != dim) continue;
        const double death = p.is_infinite() ? cap : p.death;
        if (std::isfinite(death) && death > p.birth) tents.emplace_back(p.birth, death);
    }
    if (tents.empty()) return Landscape();

    // Level values are the pointwise k-th largest of the tent functions.
    // Tents are piecewise linear with slopes in {-1, 0, +1}, so their order
    // can only change where an ascending side meets a descending side:
    // every kink of every level lies at some (birth_i + death_j) / 2 or at
    // a tent endpoint.
    std::vector<double> candidates;
    candidates.reserve(tents.size() * tents.size() + 2 * tents.size());
    for (const auto& [b, dth] : tents) {
        candidates.push_back(b);
        candidates.push_back(dth);
    }
    for (const auto& [b1, d1] : tents)
        for (const auto& [b2, d2] : tents) candidates.push_back((b1 + d2) / 2.0);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    double t_min = tents.front().first, t_max = tents.front().second;
    for (const auto& [b, dth] : tents) {
        t_min = std::min(t_min, b);
        t_max = std::max(t_max, dth);
    }

    const int k_levels = std::min<std::size_t>(k_max, tents.size());
    std::vector<Level> levels(k_levels);
    std::vector<double> values(tents.size());
    for (double t : candidates) {
        if (t < t_min || t > t_max) continue;
        for (std::size_t i = 0; i < tents.size(); ++i)
            values[i] = tent_value(tents[i].first, tents[i].second, t);
        std::partial_sort(values.begin(), values.begin() + k_levels, values.end(),
                          std::greater<double>());
        for (int k = 0; k < k_levels; ++k) levels[k].push_back({t, values[k]});
    }
    for (auto& lv : levels) lv = compress_level(std::move(lv));
    while (!levels.empty() && levels.back().empty()) levels.pop_back();
    return Landscape(std::move(levels), t_min, t_max);
}

Landscape mean_landscape(const std::vector<Landscape>& landscapes) {
    if (landscapes.empty()) throw ConfigError("mean_landscape: empty landscape list");

    int k_levels = 0;
    for (const auto& l : landscapes) k_levels = std::max(k_levels, l.levels());
    if (k_levels == 0) return Landscape();

    const double count = static_cast<double>(landscapes.size());
    double t_min = 0.0, t_max = 0.0;
    bool domain_set = false;
    for (const auto& l : landscapes) {
        if (l.is_zero()) continue;
        if (!domain_set) {
            t_min = l.t_min();
            t_max = l.t_max();
            domain_set = true;
        } else {
            t_min = std::min(t_min, l.t_min());
            t_max = std::max(t_max, l.t_max());
        }
    }

    std::vector<Level> levels(k_levels);
    std::vector<double> ts;
    for (int k = 1; k <= k_levels; ++k) {
        ts.clear();
        for (const auto& l : landscapes) {
            if (k > l.levels()) continue;
            for (const auto& p : l.level(k)) ts.push_back(p.t);
        }
        if (ts.empty()) continue;
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        Level lv;
        lv.reserve(ts.size());
        for (double t : ts) {
            double sum = 0.0;
            for (const auto& l : landscapes) sum += l.eval(k, t);
            lv.push_back({t, sum / count});
        }
        levels[static_cast<std::size_t>(k) - 1] = compress_level(std::move(lv));
    }
    while (!levels.empty() && levels.back().empty()) levels.pop_back();
    if (levels.empty()) return Landscape();
    return Landscape(std::move(levels), t_min, t_max);
}

} // namespace tda
