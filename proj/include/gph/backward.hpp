#pragma once

// Contraction pass with supernode bookkeeping, and the composed pipelines:
// FB, (f,g)-FB, (σ,τ)-FB, backward-only, extended-style (f,−f), and the
// (f,f) shortcut.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "core.hpp"
#include "filtration.hpp"
#include "forward.hpp"

namespace gph {

struct FullDiagram {
    std::vector<PersistencePair> pd0;
    std::vector<PersistencePair> pd1;
};

namespace detail {

class BitColumn {
public:
    explicit BitColumn(int bits = 0) : w_((bits + 63) / 64, 0) {}
    void flip(int i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void add(const BitColumn& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    }
    int low() const {
        for (int i = static_cast<int>(w_.size()) - 1; i >= 0; --i)
            if (w_[i]) return i * 64 + 63 - __builtin_clzll(w_[i]);
        return -1;
    }

private:
    std::vector<std::uint64_t> w_;
};

}  // namespace detail

/// Working state of the contraction pass.
struct BackwardState {
    std::vector<char> in_supernode;  // S
    UnionFind pieces;                // components of the contracted subgraph
    std::vector<int> piece_birth;    // by root; -1 marks the first piece of a graph component
    std::vector<std::vector<std::pair<int, int>>> piece_forest;
    std::vector<PersistencePair> closed_supernode_cycles;  // L
};

/// Contracts the graph in `order` after a completed forward pass. Times are
/// offset by the number of forward steps.
///
/// A contracted vertex either merges a new graph component into the supernode
/// or opens a supernode cycle. A contracted edge closes one cycle: if it joins
/// two pieces of the contracted subgraph, the younger piece's supernode cycle
/// dies; if it closes a loop inside one piece, that loop is written in the
/// forward basis and eliminated left to right against earlier loops, and the
/// youngest forward cycle it still involves dies.
inline FullDiagram backward_contraction(const Graph& g, ForwardResult fw, const StepOrder& order) {
    detail::check_order(g, order);
    const int offset = fw.num_steps;
    const int ncols = static_cast<int>(fw.basis.columns.size());
    auto buckets = detail::bucket_by_step(g, order);

    std::vector<int> gcomp(g.n_vertices);
    for (int v = 0; v < g.n_vertices; ++v) gcomp[v] = fw.state.uf.find(v);
    std::vector<char> touched(g.n_vertices, 0);

    BackwardState st;
    st.in_supernode.assign(g.n_vertices, 0);
    st.pieces = UnionFind(g.n_vertices);
    st.piece_birth.assign(g.n_vertices, -1);
    st.piece_forest.assign(g.n_vertices, {});
    std::vector<std::pair<int, int>> loops;  // (edge, step) closing a loop inside one piece

    std::vector<detail::BitColumn> reduced;
    std::vector<int> pivot(ncols, -1);

    bool seeded = false;
    ComponentBirth supernode;  // birth record carried by the supernode's component

    for (int k = 0; k < order.num_steps; ++k) {
        const int t = offset + k;
        for (int i = buckets.vstart[k]; i < buckets.vstart[k + 1]; ++i) {
            int x = buckets.vlist[i];
            st.in_supernode[x] = 1;
            int comp = gcomp[x];
            if (!seeded) {
                seeded = true;
                touched[comp] = 1;
                supernode = fw.state.birth[comp];
                st.piece_birth[x] = -1;
                continue;
            }
            if (!touched[comp]) {
                touched[comp] = 1;
                const ComponentBirth& other = fw.state.birth[comp];
                if (other.step < supernode.step) {
                    fw.pd0[supernode.pair].death = t;
                    supernode = other;
                } else {
                    fw.pd0[other.pair].death = t;
                }
                st.piece_birth[x] = -1;
            } else {
                st.piece_birth[x] = t;
            }
        }
        for (int i = buckets.estart[k]; i < buckets.estart[k + 1]; ++i) {
            const Edge& e = g.edges[buckets.elist[i]];
            if (!st.in_supernode[e.u] || !st.in_supernode[e.v])
                throw InputError("EdgeBeforeEndpoint", {"edge " + std::to_string(e.id) + " contracted early"});
            int pu = st.pieces.find(e.u), pv = st.pieces.find(e.v);
            if (pu != pv) {
                int bu = st.piece_birth[pu], bv = st.piece_birth[pv];
                if (bu < 0 && bv < 0) throw std::logic_error("two anchored pieces in one component");
                int dying = bu < 0 ? bv : (bv < 0 ? bu : std::max(bu, bv));
                int keep = bu < 0 || bv < 0 ? -1 : std::min(bu, bv);
                st.closed_supernode_cycles.push_back({1, dying, t, {}, {}});
                int root = st.pieces.unite(pu, pv);
                st.piece_birth[root] = keep;
                st.piece_forest[e.u].push_back({e.v, e.id});
                st.piece_forest[e.v].push_back({e.u, e.id});
                continue;
            }
            loops.emplace_back(e.id, t);
        }
    }

    // loops in step order, paths taken in the final piece forest
    detail::RootedForest forest(st.piece_forest);
    for (auto [id, t] : loops) {
        const Edge& e = g.edges[id];
        detail::BitColumn z(ncols);
        auto loop = forest.path(e.u, e.v);
        loop.push_back(id);
        for (int x : loop)
            if (fw.column_of_edge[x] >= 0) z.flip(fw.column_of_edge[x]);
        for (;;) {
            int low = z.low();
            if (low < 0) throw std::logic_error("contracted loop is already a boundary");
            if (pivot[low] < 0) {
                pivot[low] = static_cast<int>(reduced.size());
                reduced.push_back(std::move(z));
                fw.pd1[low].death = t;
                break;
            }
            z.add(reduced[pivot[low]]);
        }
    }

    FullDiagram out;
    out.pd0 = std::move(fw.pd0);
    out.pd1 = std::move(fw.pd1);
    out.pd1.insert(out.pd1.end(), st.closed_supernode_cycles.begin(), st.closed_supernode_cycles.end());
    return out;
}

namespace detail {

inline void attach_values(std::vector<PersistencePair>& pairs, const std::vector<double>& step_value) {
    for (auto& p : pairs) {
        p.birth_value = step_value[p.birth];
        p.death_value = p.essential() ? kInfValue : step_value[p.death];
    }
}

inline PersistenceDiagram assemble(std::string mode, FullDiagram full) {
    PersistenceDiagram d;
    d.mode = std::move(mode);
    d.pairs = std::move(full.pd0);
    d.pairs.insert(d.pairs.end(), full.pd1.begin(), full.pd1.end());
    d.canonicalize();
    return d;
}

/// Lowest-id vertex among those contracted first.
inline int first_contracted_vertex(const StepOrder& con) {
    int best = -1;
    for (int v = 0; v < static_cast<int>(con.vertex_step.size()); ++v)
        if (best < 0 || con.vertex_step[v] < con.vertex_step[best]) best = v;
    return best;
}

inline StepOrder single_step(const Graph& g) {
    return {1, std::vector<int>(g.n_vertices, 0), std::vector<int>(g.edges.size(), 0)};
}

/// Forward pass then contraction, with function time when both value tables
/// are given.
inline PersistenceDiagram run_two_phase(const Graph& g, const StepOrder& fwd, const StepOrder& con,
                                        std::string mode, const std::vector<double>* fwd_values = nullptr,
                                        const std::vector<double>* con_values = nullptr, double shift = 0.0) {
    if (g.n_vertices == 0) {
        PersistenceDiagram d;
        d.mode = std::move(mode);
        return d;
    }
    auto fw = forward_inclusion(g, fwd, first_contracted_vertex(con));
    auto full = backward_contraction(g, std::move(fw), con);
    auto d = assemble(std::move(mode), std::move(full));
    if (fwd_values && con_values) {
        std::vector<double> table = *fwd_values;
        double top = fwd_values->empty() ? 0.0 : fwd_values->back();
        for (double x : *con_values) table.push_back(top + x + shift);
        attach_values(d.pairs, table);
        d.has_function_time = true;
        d.g_shift = shift;
    }
    return d;
}

}  // namespace detail

/// Forward diagram by itself (essential pairs stay open).
inline PersistenceDiagram forward_diagram(const Graph& g, const Filtration& f) {
    auto fw = forward_inclusion(g, f);
    FullDiagram full{std::move(fw.pd0), std::move(fw.pd1)};
    auto d = detail::assemble("forward", std::move(full));
    detail::attach_values(d.pairs, f.levels);
    d.has_function_time = true;
    return d;
}

/// Forward by f, then contraction of IC_n, ..., IC_0. Contraction slot k is
/// step n+1+k; function time is max(f) + f^b + shift.
inline PersistenceDiagram fb_persistence(const Graph& g, const Filtration& f) {
    require_vertex_based(g, f);
    if (g.n_vertices == 0) return detail::run_two_phase(g, {}, {}, "fb");
    auto fb = backward_filtration(g, f);
    auto con = slots_of_reordering(f, fb);
    std::vector<double> gvals(f.num_levels());
    for (int k = 0; k < f.num_levels(); ++k) gvals[k] = -f.levels[f.last_step() - k];
    return detail::run_two_phase(g, levels_as_steps(f), con, "fb", &f.levels, &gvals,
                                 positive_shift(-f.max_value()));
}

/// Forward by f, then contraction of IC_0(g), IC_1(g), ... in ascending g.
inline PersistenceDiagram fg_persistence(const Graph& g, const Filtration& f, const Filtration& gf) {
    return detail::run_two_phase(g, levels_as_steps(f), levels_as_steps(gf), "fg", &f.levels, &gf.levels,
                                 positive_shift(gf.min_value()));
}

/// Inclusion of IC_{σ(0)}, IC_{σ(1)}, ... then contraction of IC_{τ(0)},
/// IC_{τ(1)}, ... Both orders are realised through tau_backward_filtration.
inline PersistenceDiagram sigma_tau_persistence(const Graph& g, const Filtration& f, const Permutation& sigma,
                                                const Permutation& tau) {
    require_vertex_based(g, f);
    if (g.n_vertices == 0) return detail::run_two_phase(g, {}, {}, "sigma_tau");
    auto f1 = tau_backward_filtration(g, f, sigma.inverse());
    auto f2 = tau_backward_filtration(g, f, tau.inverse());
    return detail::run_two_phase(g, slots_of_reordering(f, f1), slots_of_reordering(f, f2), "sigma_tau");
}

/// Whole graph at step 0, then contraction by the intermediate complexes of g.
inline PersistenceDiagram contraction_only(const Graph& g, const Filtration& gf) {
    return detail::run_two_phase(g, detail::single_step(g), levels_as_steps(gf), "backward");
}

/// Whole graph at step 0, then contraction of IC_n, ..., IC_0 at steps 1..n+1.
inline PersistenceDiagram backward_only(const Graph& g, const Filtration& f) {
    require_vertex_based(g, f);
    if (g.n_vertices == 0) return detail::run_two_phase(g, {}, {}, "backward");
    auto con = slots_of_reordering(f, backward_filtration(g, f));
    return detail::run_two_phase(g, detail::single_step(g), con, "backward");
}

/// Forward by f, then contraction of the superlevel full subcomplexes of f
/// for decreasing values.
inline PersistenceDiagram extended_fb(const Graph& g, const Filtration& f) {
    require_vertex_based(g, f);
    if (g.n_vertices == 0) return detail::run_two_phase(g, {}, {}, "extended");
    auto groups = descending_schedule(g, f);
    auto con = steps_from_complexes(g, groups);
    std::vector<double> vals = f.vertex_values;
    std::sort(vals.begin(), vals.end(), std::greater<>());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (double& x : vals) x = -x;
    return detail::run_two_phase(g, levels_as_steps(f), con, "extended", &f.levels, &vals,
                                 positive_shift(vals.front()));
}

/// (f,f)-FB read off the forward pass alone: a forward cycle born at step i
/// dies at N+i, a component born at i that merges at j leaves a contraction
/// cycle (N+i, N+j), and every other essential component dies at N+birth
/// (N = number of forward steps).
inline PersistenceDiagram ff_shortcut(const Graph& g, const Filtration& f) {
    PersistenceDiagram d;
    d.mode = "fg";
    if (g.n_vertices == 0) return d;
    const int N = f.num_levels();
    int seed = -1;
    for (int v = 0; v < g.n_vertices && seed < 0; ++v)
        if (f.vertex_level[v] == 0) seed = v;
    auto fw = forward_inclusion(g, levels_as_steps(f), seed);
    int seed_root = fw.state.uf.find(seed);
    for (const auto& p : fw.pd0) {
        if (!p.essential()) {
            d.pairs.push_back(p);
            d.pairs.push_back({1, N + p.birth, N + p.death, {}, {}});
        }
    }
    for (int v = 0; v < g.n_vertices; ++v) {
        if (fw.state.uf.find(v) != v) continue;
        int b = fw.state.birth[v].step;
        d.pairs.push_back({0, b, v == seed_root ? kInfStep : N + b, {}, {}});
    }
    for (const auto& p : fw.pd1) d.pairs.push_back({1, p.birth, N + p.birth, {}, {}});
    std::vector<double> table = f.levels;
    double shift = positive_shift(f.min_value());
    for (double a : f.levels) table.push_back(f.max_value() + a + shift);
    detail::attach_values(d.pairs, table);
    d.has_function_time = true;
    d.g_shift = shift;
    d.canonicalize();
    return d;
}

/// Forward diagram read off an FB-style diagram whose forward phase ends at
/// step n: (b,d) with b ≤ n maps to (b,d) if d ≤ n, else (b,∞).
inline PersistenceDiagram recover_forward(const PersistenceDiagram& d, int n) {
    PersistenceDiagram out;
    out.mode = "forward";
    for (auto p : d.pairs) {
        if (p.birth > n) continue;
        if (p.death > n) {
            p.death = kInfStep;
            if (p.death_value) p.death_value = kInfValue;
        }
        out.pairs.push_back(p);
    }
    out.has_function_time = d.has_function_time;
    out.canonicalize();
    return out;
}

/// Backward diagram read off an FB-style diagram: (b,d) with d > n maps to
/// (0,d) if b ≤ n, else (b,d); steps are then renumbered so contraction slot k
/// sits at step k+1 as in backward_only.
inline PersistenceDiagram recover_backward(const PersistenceDiagram& d, int n) {
    PersistenceDiagram out;
    out.mode = "backward";
    for (const auto& p : d.pairs) {
        if (p.death <= n) continue;
        PersistencePair q;
        q.dim = p.dim;
        q.birth = p.birth <= n ? 0 : p.birth - n;
        q.death = p.essential() ? kInfStep : p.death - n;
        out.pairs.push_back(q);
    }
    out.canonicalize();
    return out;
}

}  // namespace gph
