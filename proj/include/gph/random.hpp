#pragma once

// Seeded random instances for property tests, fuzzing and benchmarks.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "core.hpp"

namespace gph::rnd {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Multigraph with self-loops and parallel edges allowed.
inline Graph multigraph(Rng& rng, int max_n, int max_m) {
    int n = uniform_int(rng, 1, max_n);
    int m = uniform_int(rng, 0, max_m);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) edges.emplace_back(uniform_int(rng, 0, n - 1), uniform_int(rng, 0, n - 1));
    return make_graph(n, edges);
}

/// Integer vertex values in [lo, hi], edges at the max of their endpoints.
inline Filtration vertex_filtration(Rng& rng, const Graph& g, int lo, int hi) {
    std::vector<double> vv(g.n_vertices);
    for (auto& x : vv) x = uniform_int(rng, lo, hi);
    return vertex_to_full(g, vv);
}

/// Integer vertex values in [lo, hi]; each edge sits at its endpoint max or
/// a little above.
inline Filtration general_filtration(Rng& rng, const Graph& g, int lo, int hi) {
    std::vector<double> vv(g.n_vertices), ev(g.edges.size());
    for (auto& x : vv) x = uniform_int(rng, lo, hi);
    for (const auto& e : g.edges) {
        int base = static_cast<int>(std::max(vv[e.u], vv[e.v]));
        ev[e.id] = uniform_int(rng, base, std::max(base, hi));
    }
    return validate_filtration(g, vv, ev);
}

inline Permutation permutation(Rng& rng, int n) {
    auto p = Permutation::identity(n);
    std::shuffle(p.map.begin(), p.map.end(), rng);
    return p;
}

/// Random valid schedule over n complexes: each is included once, and
/// contracted afterwards with probability `contract_p`.
inline HourglassSchedule schedule(Rng& rng, int n, double contract_p = 0.8) {
    HourglassSchedule s;
    std::vector<int> pending_inc(n);
    std::iota(pending_inc.begin(), pending_inc.end(), 0);
    std::shuffle(pending_inc.begin(), pending_inc.end(), rng);
    std::vector<int> can_contract;
    std::bernoulli_distribution coin(contract_p);
    std::size_t next = 0;
    while (next < pending_inc.size() || !can_contract.empty()) {
        bool do_inc = next < pending_inc.size() && (can_contract.empty() || coin(rng));
        if (do_inc) {
            int i = pending_inc[next++];
            s.events.push_back({ScheduleEvent::Op::Include, i});
            if (coin(rng)) can_contract.push_back(i);
        } else {
            int k = uniform_int(rng, 0, static_cast<int>(can_contract.size()) - 1);
            s.events.push_back({ScheduleEvent::Op::Contract, can_contract[k]});
            can_contract.erase(can_contract.begin() + k);
        }
    }
    return s;
}

/// Connected graph: a random spanning tree on n vertices plus `chords` extra
/// edges, so it has exactly `chords` independent cycles.
inline Graph tree_plus_chords(Rng& rng, int n, int chords) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1 + chords);
    for (int v = 1; v < n; ++v) edges.emplace_back(uniform_int(rng, 0, v - 1), v);
    for (int i = 0; i < chords; ++i) edges.emplace_back(uniform_int(rng, 0, n - 1), uniform_int(rng, 0, n - 1));
    std::shuffle(edges.begin(), edges.end(), rng);
    return make_graph(n, edges);
}

inline Graph grid(int w, int h) {
    std::vector<std::pair<int, int>> edges;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            int v = y * w + x;
            if (x + 1 < w) edges.emplace_back(v, v + 1);
            if (y + 1 < h) edges.emplace_back(v, v + w);
        }
    return make_graph(w * h, edges);
}

}  // namespace gph::rnd
