#pragma once

// Bottleneck distance in function time: exact search over candidate
// thresholds with a bipartite-matching feasibility check.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "core.hpp"

namespace gph {

namespace detail {

struct Point {
    double b, d;
};

inline double linf(const Point& p, const Point& q) { return std::max(std::fabs(p.b - q.b), std::fabs(p.d - q.d)); }
inline double to_diagonal(const Point& p) { return (p.d - p.b) / 2; }

/// Perfect matching between A ∪ diag(B) and B ∪ diag(A) using edges of cost ≤ eps.
inline bool matchable(const std::vector<Point>& a, const std::vector<Point>& b, double eps) {
    const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size()), n = na + nb;
    // left i < na: point a[i]; left na + j: diagonal copy of b[j]
    // right j < nb: point b[j]; right nb + i: diagonal copy of a[i]
    auto ok = [&](int l, int r) {
        if (l < na && r < nb) return linf(a[l], b[r]) <= eps;
        if (l < na) return r - nb == l && to_diagonal(a[l]) <= eps;
        if (r < nb) return l - na == r && to_diagonal(b[r]) <= eps;
        return true;
    };
    std::vector<int> match_r(n, -1);
    std::vector<int> seen(n, -1);
    std::function<bool(int, int)> augment = [&](int l, int stamp) {
        for (int r = 0; r < n; ++r) {
            if (seen[r] == stamp || !ok(l, r)) continue;
            seen[r] = stamp;
            if (match_r[r] < 0 || augment(match_r[r], stamp)) {
                match_r[r] = l;
                return true;
            }
        }
        return false;
    };
    for (int l = 0; l < n; ++l)
        if (!augment(l, l)) return false;
    return true;
}

inline double finite_bottleneck(const std::vector<Point>& a, const std::vector<Point>& b) {
    std::vector<double> cand{0.0};
    for (const auto& p : a) cand.push_back(to_diagonal(p));
    for (const auto& q : b) cand.push_back(to_diagonal(q));
    for (const auto& p : a)
        for (const auto& q : b) cand.push_back(linf(p, q));
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::size_t lo = 0, hi = cand.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (matchable(a, b, cand[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return cand[lo];
}

inline void split(const PersistenceDiagram& d, int dim, std::vector<Point>& finite, std::vector<double>& essential) {
    for (const auto& p : d.pairs) {
        if (p.dim != dim) continue;
        if (!p.birth_value || !p.death_value) throw InputError("MissingFunctionTime", {"diagram " + d.mode});
        if (std::isinf(*p.death_value))
            essential.push_back(*p.birth_value);
        else
            finite.push_back({*p.birth_value, *p.death_value});
    }
}

}  // namespace detail

/// Essential points match only essential points, at cost |birth difference|;
/// ∞ when their counts differ.
inline double bottleneck_distance(const PersistenceDiagram& d1, const PersistenceDiagram& d2, int dim) {
    std::vector<detail::Point> f1, f2;
    std::vector<double> e1, e2;
    detail::split(d1, dim, f1, e1);
    detail::split(d2, dim, f2, e2);
    if (e1.size() != e2.size()) return kInfValue;
    std::sort(e1.begin(), e1.end());
    std::sort(e2.begin(), e2.end());
    double ess = 0;
    for (std::size_t i = 0; i < e1.size(); ++i) ess = std::max(ess, std::fabs(e1[i] - e2[i]));
    return std::max(ess, detail::finite_bottleneck(f1, f2));
}

/// Bottleneck distance after removing the single essential dim-0 point from each side.
inline double bottleneck_excluding_essential(const PersistenceDiagram& d1, const PersistenceDiagram& d2,
                                             int dim = 0) {
    auto strip = [dim](PersistenceDiagram d) {
        int count = 0;
        std::erase_if(d.pairs, [&](const PersistencePair& p) {
            bool ess = p.dim == dim && (p.essential() || (p.death_value && std::isinf(*p.death_value)));
            count += ess;
            return ess;
        });
        if (count != 1)
            throw InputError("EssentialCountMismatch",
                             {"expected one essential point, found " + std::to_string(count)});
        return d;
    };
    return bottleneck_distance(strip(d1), strip(d2), dim);
}

}  // namespace gph
