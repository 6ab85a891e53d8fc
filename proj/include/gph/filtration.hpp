#pragma once

// Sublevel steps, intermediate complexes, and the filtration transforms used to
// reorder inclusions and contractions.

#include <algorithm>
#include <utility>
#include <vector>

#include "core.hpp"

namespace gph {

struct Subgraph {
    std::vector<int> vertices;
    std::vector<int> edges;

    bool operator==(const Subgraph&) const = default;
};

struct FiltrationSteps {
    std::vector<Subgraph> subgraphs;  // G_0 ⊂ ... ⊂ G_n
};

inline FiltrationSteps sublevel_steps(const Graph& g, const Filtration& f) {
    FiltrationSteps out;
    for (int i = 0; i < f.num_levels(); ++i) {
        Subgraph s;
        for (int v = 0; v < g.n_vertices; ++v)
            if (f.vertex_level[v] <= i) s.vertices.push_back(v);
        for (const auto& e : g.edges)
            if (f.edge_level[e.id] <= i) s.edges.push_back(e.id);
        out.subgraphs.push_back(std::move(s));
    }
    return out;
}

namespace detail {

inline void sort_unique(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Groups simplices by a level index and closes each group under faces.
inline std::vector<IntermediateComplex> group_with_closure(const Graph& g, int num_groups,
                                                           const std::vector<int>& vgroup,
                                                           const std::vector<int>& egroup) {
    std::vector<IntermediateComplex> ics(num_groups);
    for (int i = 0; i < num_groups; ++i) ics[i].index = i;
    for (int v = 0; v < g.n_vertices; ++v) ics[vgroup[v]].vertices.push_back(v);
    for (const auto& e : g.edges) {
        auto& ic = ics[egroup[e.id]];
        ic.edges.push_back(e.id);
        ic.vertices.push_back(e.u);
        ic.vertices.push_back(e.v);
    }
    for (auto& ic : ics) sort_unique(ic.vertices);
    return ics;
}

}  // namespace detail

/// IC_i = closure of the simplices at level a_i.
inline std::vector<IntermediateComplex> intermediate_complexes(const Graph& g, const Filtration& f) {
    return detail::group_with_closure(g, f.num_levels(), f.vertex_level, f.edge_level);
}

/// The non-empty sets of newly contracted simplices when a list of complexes is
/// contracted in order. Empty steps are skipped.
inline std::vector<Subgraph> contraction_blocks(const Graph& g, const std::vector<IntermediateComplex>& order) {
    std::vector<char> vdone(g.n_vertices, 0), edone(g.num_edges(), 0);
    std::vector<Subgraph> out;
    for (const auto& ic : order) {
        Subgraph s;
        for (int v : ic.vertices)
            if (!vdone[v]) vdone[v] = 1, s.vertices.push_back(v);
        for (int e : ic.edges)
            if (!edone[e]) edone[e] = 1, s.edges.push_back(e);
        if (!s.vertices.empty() || !s.edges.empty()) out.push_back(std::move(s));
    }
    return out;
}

/// f^b: contracting the sublevel sets of f^b in order contracts IC_n, ..., IC_0 of f.
/// Linear in |V| + |E|; both endpoints of every edge are updated.
inline Filtration backward_filtration(const Graph& g, const Filtration& f) {
    require_vertex_based(g, f);
    const int nl = f.num_levels();
    std::vector<int> top(f.vertex_level);
    std::vector<char> used(nl, 0);
    for (const auto& e : g.edges) {
        int l = f.edge_level[e.id];
        used[l] = 1;
        if (top[e.u] < l) top[e.u] = l;
        if (top[e.v] < l) top[e.v] = l;
    }
    for (int v = 0; v < g.n_vertices; ++v) used[top[v]] = 1;

    // level i of f becomes level rank[i] of f^b, counted from the top
    std::vector<int> rank(nl, 0);
    Filtration fb;
    for (int i = nl - 1, r = 0; i >= 0; --i) {
        rank[i] = r;
        if (used[i]) {
            fb.levels.push_back(-f.levels[i]);
            ++r;
        }
    }
    fb.vertex_values.resize(g.n_vertices);
    fb.vertex_level.resize(g.n_vertices);
    for (int v = 0; v < g.n_vertices; ++v) {
        fb.vertex_values[v] = -f.levels[top[v]];
        fb.vertex_level[v] = rank[top[v]];
    }
    fb.edge_values.resize(g.edges.size());
    fb.edge_level.resize(g.edges.size());
    for (const auto& e : g.edges) {
        int l = f.edge_level[e.id];
        fb.edge_values[e.id] = -f.levels[l];
        fb.edge_level[e.id] = rank[l];
    }
    return fb;
}

/// σ·f: a simplex at level a_i is moved to level a_{σ(i)}. The result only
/// orders inclusions and is flagged accordingly.
inline Filtration permute_filtration(const Filtration& f, const Permutation& sigma) {
    if (sigma.size() != f.num_levels())
        throw InputError("NotAPermutation", {"permutation size " + std::to_string(sigma.size()) +
                                                 " does not match " + std::to_string(f.num_levels()) +
                                                 " levels"});
    Filtration out;
    out.levels = f.levels;
    out.vertex_values.resize(f.vertex_values.size());
    out.vertex_level.resize(f.vertex_values.size());
    out.edge_values.resize(f.edge_values.size());
    out.edge_level.resize(f.edge_values.size());
    for (std::size_t v = 0; v < f.vertex_values.size(); ++v) {
        int l = sigma(f.vertex_level[v]);
        out.vertex_level[v] = l;
        out.vertex_values[v] = f.levels[l];
    }
    for (std::size_t e = 0; e < f.edge_values.size(); ++e) {
        int l = sigma(f.edge_level[e]);
        out.edge_level[e] = l;
        out.edge_values[e] = f.levels[l];
    }
    out.ordering_only = true;
    return out;
}

/// f^τ: contracting the sublevel sets of f^τ in order contracts the
/// intermediate complexes of f in the order IC_{τ(0)}, IC_{τ(1)}, ...
/// A vertex takes the earliest slot among every complex containing it, its own
/// level included.
inline Filtration tau_backward_filtration(const Graph& g, const Filtration& f, const Permutation& tau_inv) {
    require_vertex_based(g, f);
    const int nl = f.num_levels();
    if (tau_inv.size() != nl)
        throw InputError("NotAPermutation", {"permutation size " + std::to_string(tau_inv.size()) +
                                                 " does not match " + std::to_string(nl) + " levels"});
    // g = (re ∘ τ⁻¹)·f, stored as level indices: larger means contracted earlier
    auto gl = [&](int level) { return nl - 1 - tau_inv(level); };
    std::vector<int> best(g.n_vertices);
    for (int v = 0; v < g.n_vertices; ++v) best[v] = gl(f.vertex_level[v]);
    for (const auto& e : g.edges) {
        int l = gl(f.edge_level[e.id]);
        best[e.u] = std::max(best[e.u], l);
        best[e.v] = std::max(best[e.v], l);
    }
    std::vector<double> vv(g.n_vertices), ev(g.edges.size());
    for (int v = 0; v < g.n_vertices; ++v) vv[v] = -f.levels[best[v]];
    for (const auto& e : g.edges) ev[e.id] = -f.levels[gl(f.edge_level[e.id])];
    return make_unchecked_filtration(std::move(vv), std::move(ev));
}

/// Converts a reordering produced by backward_filtration / tau_backward_filtration
/// back to slot positions 0..n of the original level list. Slots with no new
/// simplex stay as empty steps.
inline StepOrder slots_of_reordering(const Filtration& f, const Filtration& reordered) {
    const int n = f.last_step();
    StepOrder s;
    s.num_steps = f.num_levels();
    s.vertex_step.resize(reordered.vertex_values.size());
    s.edge_step.resize(reordered.edge_values.size());
    for (std::size_t v = 0; v < s.vertex_step.size(); ++v)
        s.vertex_step[v] = n - f.step_of(-reordered.vertex_values[v]);
    for (std::size_t e = 0; e < s.edge_step.size(); ++e)
        s.edge_step[e] = n - f.step_of(-reordered.edge_values[e]);
    return s;
}

/// Superlevel descent: group k holds the vertices at the k-th largest vertex
/// value and the edges whose lower endpoint has that value. Contracting the
/// groups in order contracts the full subcomplexes {f ≥ a} for decreasing a.
inline std::vector<IntermediateComplex> descending_schedule(const Graph& g, const Filtration& f) {
    std::vector<double> vals = f.vertex_values;
    std::sort(vals.begin(), vals.end(), std::greater<>());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    auto group = [&](double x) {
        return static_cast<int>(std::lower_bound(vals.begin(), vals.end(), x, std::greater<>()) - vals.begin());
    };
    std::vector<int> vg(g.n_vertices), eg(g.edges.size());
    for (int v = 0; v < g.n_vertices; ++v) vg[v] = group(f.vertex_values[v]);
    for (const auto& e : g.edges) eg[e.id] = std::max(vg[e.u], vg[e.v]);
    return detail::group_with_closure(g, static_cast<int>(vals.size()), vg, eg);
}

/// Step order that contracts a list of complexes one per step.
inline StepOrder steps_from_complexes(const Graph& g, const std::vector<IntermediateComplex>& order) {
    StepOrder s;
    s.num_steps = static_cast<int>(order.size());
    s.vertex_step.assign(g.n_vertices, -1);
    s.edge_step.assign(g.edges.size(), -1);
    for (int k = 0; k < s.num_steps; ++k) {
        for (int v : order[k].vertices)
            if (s.vertex_step[v] < 0) s.vertex_step[v] = k;
        for (int e : order[k].edges)
            if (s.edge_step[e] < 0) s.edge_step[e] = k;
    }
    return s;
}

}  // namespace gph
