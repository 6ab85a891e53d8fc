#pragma once

// Randomised check of the (f,g)-FB stability bound:
//   d(FB(f,g), FB(f',g')) ≤ 2‖f−f'‖∞ + ‖g−g'‖∞ + |max f − max f'|
// with the essential dim-0 point removed before comparing dim 0.

#include <cmath>
#include <string>
#include <vector>

#include "backward.hpp"
#include "metrics.hpp"
#include "random.hpp"

namespace gph {

struct StabilityOptions {
    int trials = 1000;
    int max_n = 10;
    int max_m = 15;
    double eps = 0.1;
    std::uint64_t seed = 1;
    double tolerance = 1e-9;
};

struct StabilityReport {
    int trials = 0;
    int violations = 0;
    double max_ratio = 0;  // distance / bound over trials with a positive bound
    std::vector<std::string> failures;
};

namespace detail {

inline double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

inline std::vector<double> positive_values(rnd::Rng& rng, int n) {
    std::uniform_real_distribution<double> u(1.0, 10.0);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    return v;
}

/// Odd trials add uniform noise; even trials move a few vertices exactly onto
/// another vertex's value so that levels merge and reorder.
inline std::vector<double> perturb(rnd::Rng& rng, const std::vector<double>& v, double eps, bool crossing) {
    std::vector<double> out = v;
    std::uniform_real_distribution<double> noise(-eps, eps);
    if (!crossing) {
        for (auto& x : out) x += noise(rng);
        return out;
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::size_t j = static_cast<std::size_t>(rnd::uniform_int(rng, 0, static_cast<int>(v.size()) - 1));
        if (std::fabs(v[j] - v[i]) <= eps) out[i] = v[j];
    }
    return out;
}

}  // namespace detail

inline StabilityReport run_stability(const StabilityOptions& opt) {
    rnd::Rng rng(opt.seed);
    StabilityReport rep;
    for (int t = 0; t < opt.trials; ++t) {
        Graph g = rnd::multigraph(rng, opt.max_n, opt.max_m);
        auto fv = detail::positive_values(rng, g.n_vertices);
        auto gv = detail::positive_values(rng, g.n_vertices);
        bool crossing = t % 2 == 0;
        auto fv2 = detail::perturb(rng, fv, opt.eps, crossing);
        auto gv2 = detail::perturb(rng, gv, opt.eps, crossing);
        auto f1 = vertex_to_full(g, fv), f2 = vertex_to_full(g, fv2);
        auto g1 = vertex_to_full(g, gv), g2 = vertex_to_full(g, gv2);
        auto d1 = fg_persistence(g, f1, g1), d2 = fg_persistence(g, f2, g2);
        double bound = 2 * detail::sup_diff(fv, fv2) + detail::sup_diff(gv, gv2) +
                       std::fabs(f1.max_value() - f2.max_value());
        double dist = std::max(bottleneck_excluding_essential(d1, d2, 0), bottleneck_distance(d1, d2, 1));
        ++rep.trials;
        if (dist > bound + opt.tolerance) {
            ++rep.violations;
            rep.failures.push_back("trial " + std::to_string(t) + ": distance " + std::to_string(dist) +
                                   " > bound " + std::to_string(bound));
        }
        if (bound > 0) rep.max_ratio = std::max(rep.max_ratio, dist / bound);
    }
    return rep;
}

}  // namespace gph
