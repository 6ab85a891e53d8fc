#pragma once

// Third, test-only route to barcodes: ranks of the maps H_k(X_s) → H_k(X_t)
// between the quotient graphs X_t = I_t / S_t, turned into multiplicities by
// inclusion–exclusion. Only pairs with birth < death are visible this way.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gph/oracle.hpp"

namespace rank_oracle {

using gph::Graph;
using gph::PersistencePair;
using gph::oracle::Steps;

struct Snapshot {
    std::vector<char> vin, ein, vcon, econ;
};

inline std::vector<Snapshot> snapshots(const Graph& g, const Steps& steps) {
    std::vector<Snapshot> out;
    Snapshot cur{std::vector<char>(g.n_vertices, 0), std::vector<char>(g.num_edges(), 0),
                 std::vector<char>(g.n_vertices, 0), std::vector<char>(g.num_edges(), 0)};
    for (const auto& s : steps) {
        bool inc = s.op == gph::ScheduleEvent::Op::Include;
        for (int v : s.vertices) (inc ? cur.vin : cur.vcon)[v] = 1;
        for (int e : s.edges) (inc ? cur.ein : cur.econ)[e] = 1;
        out.push_back(cur);
    }
    return out;
}

// quotient vertex: contracted vertices collapse onto one label
inline int qv(const Snapshot& s, int v, int hub) { return s.vcon[v] ? hub : v; }

inline int root(std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}

/// Fundamental cycles of X_s as edge bitmasks.
inline std::vector<std::vector<char>> cycle_basis(const Graph& g, const Snapshot& s) {
    int hub = g.n_vertices;
    std::vector<int> p(g.n_vertices + 1);
    for (int i = 0; i <= g.n_vertices; ++i) p[i] = i;
    std::vector<std::vector<std::pair<int, int>>> adj(g.n_vertices + 1);
    std::vector<std::vector<char>> out;
    for (const auto& e : g.edges) {
        if (!s.ein[e.id] || s.econ[e.id]) continue;
        int a = qv(s, e.u, hub), b = qv(s, e.v, hub);
        if (root(p, a) != root(p, b)) {
            p[root(p, a)] = root(p, b);
            adj[a].push_back({b, e.id});
            adj[b].push_back({a, e.id});
            continue;
        }
        // forest path a ⇝ b by DFS
        std::vector<int> via(g.n_vertices + 1, -2), prev(g.n_vertices + 1, -1), stack{a};
        via[a] = -1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [y, id] : adj[x])
                if (via[y] == -2) via[y] = id, prev[y] = x, stack.push_back(y);
        }
        std::vector<char> z(g.num_edges(), 0);
        z[e.id] ^= 1;
        for (int x = b; x != a; x = prev[x]) z[via[x]] ^= 1;
        out.push_back(std::move(z));
    }
    return out;
}

inline int f2_rank(std::vector<std::vector<char>> rows) {
    int r = 0;
    const int n = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 0; c < n && r < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != r && rows[i][c])
                for (int k = 0; k < n; ++k) rows[i][k] ^= rows[r][k];
        ++r;
    }
    return r;
}

/// rank of H_dim(X_s) → H_dim(X_t), s ≤ t
inline int rank(const Graph& g, const std::vector<Snapshot>& snap, int dim, int s, int t) {
    if (s < 0) return 0;
    const auto& a = snap[s];
    const auto& b = snap[t];
    if (dim == 0) {
        int hub = g.n_vertices;
        std::vector<int> p(g.n_vertices + 1);
        for (int i = 0; i <= g.n_vertices; ++i) p[i] = i;
        for (const auto& e : g.edges)
            if (b.ein[e.id]) p[root(p, qv(b, e.u, hub))] = root(p, qv(b, e.v, hub));
        std::vector<int> hit;
        for (int v = 0; v < g.n_vertices; ++v)
            if (a.vin[v]) hit.push_back(root(p, qv(b, v, hub)));
        std::sort(hit.begin(), hit.end());
        return static_cast<int>(std::unique(hit.begin(), hit.end()) - hit.begin());
    }
    auto basis = cycle_basis(g, a);
    for (auto& z : basis)
        for (const auto& e : g.edges)
            if (b.econ[e.id]) z[e.id] = 0;
    return f2_rank(std::move(basis));
}

/// Pairs with birth < death, in step time.
inline std::vector<PersistencePair> barcode(const Graph& g, const Steps& steps) {
    auto snap = snapshots(g, steps);
    const int T = static_cast<int>(snap.size());
    std::vector<PersistencePair> out;
    for (int dim = 0; dim <= 1; ++dim) {
        std::vector<std::vector<int>> r(T, std::vector<int>(T, 0));
        for (int s = 0; s < T; ++s)
            for (int t = s; t < T; ++t) r[s][t] = rank(g, snap, dim, s, t);
        auto R = [&](int s, int t) { return s < 0 || s > t ? 0 : r[s][t]; };
        for (int b = 0; b < T; ++b) {
            for (int d = b + 1; d < T; ++d) {
                int m = R(b, d - 1) - R(b - 1, d - 1) - R(b, d) + R(b - 1, d);
                for (int k = 0; k < m; ++k) out.push_back({dim, b, d, {}, {}});
            }
            int m = R(b, T - 1) - R(b - 1, T - 1);
            for (int k = 0; k < m; ++k) out.push_back({dim, b, gph::kInfStep, {}, {}});
        }
    }
    std::sort(out.begin(), out.end(), gph::pair_less);
    return out;
}

inline std::vector<PersistencePair> positive_length(std::vector<PersistencePair> ps) {
    std::erase_if(ps, [](const PersistencePair& p) { return p.birth == p.death; });
    for (auto& p : ps) p.birth_value.reset(), p.death_value.reset();
    std::sort(ps.begin(), ps.end(), gph::pair_less);
    return ps;
}

}  // namespace rank_oracle
