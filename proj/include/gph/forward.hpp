#pragma once

// Streaming forward persistence: union-find over components, a spanning forest
// with explicit adjacency, and a fundamental cycle basis over F2.

#include <algorithm>
#include <vector>

#include "core.hpp"

namespace gph {

class UnionFind {
public:
    explicit UnionFind(int n = 0) : parent_(n), rank_(n, 0) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x) {
        int r = x;
        while (parent_[r] != r) r = parent_[r];
        while (parent_[x] != r) {
            int next = parent_[x];
            parent_[x] = r;
            x = next;
        }
        return r;
    }

    // Returns the new root.
    int unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return a;
    }

    int size() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

/// Birth record of a component, kept apart from the union-find root so that
/// union by rank never changes which vertex a component was born with.
struct ComponentBirth {
    int step = 0;
    int vertex = -1;
    int pair = -1;  // index of its open PD0 pair
};

struct UnionFindState {
    UnionFind uf;
    std::vector<ComponentBirth> birth;  // indexed by root
    std::vector<std::vector<std::pair<int, int>>> forest_adjacency;  // (neighbor, edge id)
};

struct CycleColumn {
    int birth_step = 0;
    int creating_edge = -1;
    std::vector<int> indicator;  // sorted edge ids
};

struct CycleBasis {
    std::vector<CycleColumn> columns;

    /// Every column holds its creating edge, and no earlier column does.
    bool echelon() const {
        for (std::size_t j = 0; j < columns.size(); ++j) {
            const auto& c = columns[j];
            if (!std::binary_search(c.indicator.begin(), c.indicator.end(), c.creating_edge)) return false;
            for (std::size_t i = 0; i < j; ++i)
                if (std::binary_search(columns[i].indicator.begin(), columns[i].indicator.end(), c.creating_edge))
                    return false;
        }
        return true;
    }
};

struct ForwardResult {
    int num_steps = 0;
    std::vector<PersistencePair> pd0;
    std::vector<PersistencePair> pd1;  // one per basis column, same order
    CycleBasis basis;
    UnionFindState state;
    std::vector<int> column_of_edge;  // basis column created by an edge, or -1
};

namespace detail {

/// Simplices grouped by step: vertices then edges, each ascending by id.
struct StepBuckets {
    std::vector<int> vstart, vlist, estart, elist;
};

inline StepBuckets bucket_by_step(const Graph& g, const StepOrder& s) {
    StepBuckets b;
    auto fill = [&](const std::vector<int>& step, std::vector<int>& start, std::vector<int>& list) {
        start.assign(s.num_steps + 1, 0);
        for (int x : step) ++start[x + 1];
        for (int i = 0; i < s.num_steps; ++i) start[i + 1] += start[i];
        list.resize(step.size());
        std::vector<int> pos(start.begin(), start.end() - 1);
        for (std::size_t i = 0; i < step.size(); ++i) list[pos[step[i]]++] = static_cast<int>(i);
    };
    fill(s.vertex_step, b.vstart, b.vlist);
    fill(s.edge_step, b.estart, b.elist);
    return b;
}

inline void check_order(const Graph& g, const StepOrder& s) {
    std::vector<std::string> errs;
    if (static_cast<int>(s.vertex_step.size()) != g.n_vertices ||
        static_cast<int>(s.edge_step.size()) != g.num_edges())
        throw InputError("MissingValue", {"step order does not cover the graph"});
    for (int v = 0; v < g.n_vertices; ++v)
        if (s.vertex_step[v] < 0 || s.vertex_step[v] >= s.num_steps)
            errs.push_back("vertex " + std::to_string(v) + " has no valid step");
    for (const auto& e : g.edges) {
        int t = s.edge_step[e.id];
        if (t < 0 || t >= s.num_steps) {
            errs.push_back("edge " + std::to_string(e.id) + " has no valid step");
        } else if (t < s.vertex_step[e.u] || t < s.vertex_step[e.v]) {
            errs.push_back("edge " + std::to_string(e.id) + " precedes an endpoint");
        }
    }
    if (!errs.empty()) throw InputError("EdgeBeforeEndpoint", std::move(errs));
}

/// Parent pointers and depths of a forest; paths climb to the common ancestor.
class RootedForest {
public:
    explicit RootedForest(const std::vector<std::vector<std::pair<int, int>>>& adj)
        : parent_(adj.size(), -1), via_(adj.size(), -1), depth_(adj.size(), -1) {
        std::vector<int> queue;
        for (std::size_t root = 0; root < adj.size(); ++root) {
            if (depth_[root] >= 0) continue;
            depth_[root] = 0;
            queue.assign(1, static_cast<int>(root));
            for (std::size_t h = 0; h < queue.size(); ++h) {
                int x = queue[h];
                for (auto [y, e] : adj[x]) {
                    if (depth_[y] >= 0) continue;
                    depth_[y] = depth_[x] + 1;
                    parent_[y] = x;
                    via_[y] = e;
                    queue.push_back(y);
                }
            }
        }
    }

    std::vector<int> path(int u, int v) const {
        std::vector<int> out;
        while (u != v) {
            if (depth_[u] < depth_[v]) std::swap(u, v);
            out.push_back(via_[u]);
            u = parent_[u];
        }
        return out;
    }

private:
    std::vector<int> parent_, via_, depth_;
};

}  // namespace detail

/// Forward pass over an explicit step order. `seed`, if given, wins elder-rule
/// ties against every other component.
inline ForwardResult forward_inclusion(const Graph& g, const StepOrder& order, int seed = -1) {
    detail::check_order(g, order);
    ForwardResult r;
    r.num_steps = order.num_steps;
    r.state.uf = UnionFind(g.n_vertices);
    r.state.birth.assign(g.n_vertices, {});
    r.state.forest_adjacency.assign(g.n_vertices, {});
    r.column_of_edge.assign(g.edges.size(), -1);
    auto buckets = detail::bucket_by_step(g, order);
    auto& uf = r.state.uf;

    // true if the component rooted at a is younger than the one rooted at b
    auto younger = [&](int a, int b) {
        const auto& ba = r.state.birth[a];
        const auto& bb = r.state.birth[b];
        if (ba.step != bb.step) return ba.step > bb.step;
        if (seed >= 0) {
            int rs = uf.find(seed);
            if (a == rs) return false;
            if (b == rs) return true;
        }
        return ba.vertex > bb.vertex;
    };

    for (int t = 0; t < order.num_steps; ++t) {
        for (int i = buckets.vstart[t]; i < buckets.vstart[t + 1]; ++i) {
            int v = buckets.vlist[i];
            r.state.birth[v] = {t, v, -1};
        }
        for (int i = buckets.estart[t]; i < buckets.estart[t + 1]; ++i) {
            const Edge& e = g.edges[buckets.elist[i]];
            int ru = uf.find(e.u), rv = uf.find(e.v);
            if (ru == rv) {
                CycleColumn col;
                col.birth_step = t;
                col.creating_edge = e.id;
                r.column_of_edge[e.id] = static_cast<int>(r.basis.columns.size());
                r.basis.columns.push_back(std::move(col));
                r.pd1.push_back({1, t, kInfStep, {}, {}});
                continue;
            }
            int dead = younger(ru, rv) ? ru : rv;
            int alive = dead == ru ? rv : ru;
            r.pd0.push_back({0, r.state.birth[dead].step, t, {}, {}});
            ComponentBirth keep = r.state.birth[alive];
            int root = uf.unite(ru, rv);
            r.state.birth[root] = keep;
            r.state.forest_adjacency[e.u].push_back({e.v, e.id});
            r.state.forest_adjacency[e.v].push_back({e.u, e.id});
        }
    }
    for (int v = 0; v < g.n_vertices; ++v) {
        if (uf.find(v) != v) continue;
        r.state.birth[v].pair = static_cast<int>(r.pd0.size());
        r.pd0.push_back({0, r.state.birth[v].step, kInfStep, {}, {}});
    }
    // fundamental cycles, read off the final forest
    detail::RootedForest forest(r.state.forest_adjacency);
    for (auto& col : r.basis.columns) {
        const Edge& e = g.edges[col.creating_edge];
        col.indicator = forest.path(e.u, e.v);
        col.indicator.push_back(e.id);
        std::sort(col.indicator.begin(), col.indicator.end());
    }
    return r;
}

inline ForwardResult forward_inclusion(const Graph& g, const Filtration& f) {
    return forward_inclusion(g, levels_as_steps(f));
}

}  // namespace gph
