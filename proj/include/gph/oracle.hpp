#pragma once

// Brute-force ground truth. Every mode is first resolved into an explicit list
// of steps; dim 1 comes from reducing the coned complex (each contracted
// simplex σ replaced by the cone [v+, σ]), dim 0 from recomputing the
// components of the quotient at every step.
//
// Nothing here depends on the streaming engines or on filtration.hpp.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core.hpp"

namespace gph::oracle {

struct Step {
    ScheduleEvent::Op op = ScheduleEvent::Op::Include;
    std::vector<int> vertices;  // newly included / contracted
    std::vector<int> edges;
    std::optional<double> value;  // function time, when the mode has one
};

using Steps = std::vector<Step>;

// ---- intermediate complexes, recomputed from raw values ----

struct Complex {
    std::vector<int> vertices;
    std::vector<int> edges;
};

inline std::vector<double> sorted_levels(const std::vector<double>& vv, const std::vector<double>& ev) {
    std::vector<double> all(vv);
    all.insert(all.end(), ev.begin(), ev.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

inline std::vector<Complex> complexes(const Graph& g, const Filtration& f) {
    auto levels = sorted_levels(f.vertex_values, f.edge_values);
    std::vector<Complex> out(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        std::vector<char> in(g.n_vertices, 0);
        for (int v = 0; v < g.n_vertices; ++v)
            if (f.vertex_values[v] == levels[i]) in[v] = 1;
        for (const auto& e : g.edges)
            if (f.edge_values[e.id] == levels[i]) {
                out[i].edges.push_back(e.id);
                in[e.u] = in[e.v] = 1;
            }
        for (int v = 0; v < g.n_vertices; ++v)
            if (in[v]) out[i].vertices.push_back(v);
    }
    return out;
}

/// Turns a list of (op, complex) into steps, skipping simplices an earlier
/// step of the same op already handled.
class StepBuilder {
public:
    explicit StepBuilder(const Graph& g)
        : g_(g), vin_(g.n_vertices, 0), ein_(g.num_edges(), 0), vcon_(g.n_vertices, 0), econ_(g.num_edges(), 0) {}

    void add(ScheduleEvent::Op op, const Complex& c, std::optional<double> value = {}) {
        bool inc = op == ScheduleEvent::Op::Include;
        auto& vd = inc ? vin_ : vcon_;
        auto& ed = inc ? ein_ : econ_;
        Step s;
        s.op = op;
        s.value = value;
        for (int v : c.vertices)
            if (!vd[v]) vd[v] = 1, s.vertices.push_back(v);
        for (int e : c.edges)
            if (!ed[e]) ed[e] = 1, s.edges.push_back(e);
        steps_.push_back(std::move(s));
    }

    void include_all(std::optional<double> value = {}) {
        Complex all;
        for (int v = 0; v < g_.n_vertices; ++v) all.vertices.push_back(v);
        for (const auto& e : g_.edges) all.edges.push_back(e.id);
        add(ScheduleEvent::Op::Include, all, value);
    }

    Steps take() { return std::move(steps_); }

private:
    const Graph& g_;
    std::vector<char> vin_, ein_, vcon_, econ_;
    Steps steps_;
};

inline double shift_for(double min_g) { return min_g > 0 ? 0.0 : 1.0 - min_g; }

// ---- mode resolution ----

inline Steps forward_steps(const Graph& g, const Filtration& f) {
    auto levels = sorted_levels(f.vertex_values, f.edge_values);
    auto ics = complexes(g, f);
    StepBuilder b(g);
    for (std::size_t i = 0; i < ics.size(); ++i) b.add(ScheduleEvent::Op::Include, ics[i], levels[i]);
    return b.take();
}

inline Steps fb_steps(const Graph& g, const Filtration& f) {
    auto levels = sorted_levels(f.vertex_values, f.edge_values);
    auto ics = complexes(g, f);
    StepBuilder b(g);
    for (std::size_t i = 0; i < ics.size(); ++i) b.add(ScheduleEvent::Op::Include, ics[i], levels[i]);
    if (levels.empty()) return b.take();
    double top = levels.back(), shift = shift_for(-levels.back());
    for (int i = static_cast<int>(ics.size()) - 1; i >= 0; --i)
        b.add(ScheduleEvent::Op::Contract, ics[i], top - levels[i] + shift);
    return b.take();
}

inline Steps fg_steps(const Graph& g, const Filtration& f, const Filtration& gf) {
    auto levels = sorted_levels(f.vertex_values, f.edge_values);
    auto glevels = sorted_levels(gf.vertex_values, gf.edge_values);
    auto ics = complexes(g, f);
    auto gics = complexes(g, gf);
    StepBuilder b(g);
    for (std::size_t i = 0; i < ics.size(); ++i) b.add(ScheduleEvent::Op::Include, ics[i], levels[i]);
    if (levels.empty()) return b.take();
    double top = levels.back(), shift = shift_for(glevels.front());
    for (std::size_t k = 0; k < gics.size(); ++k)
        b.add(ScheduleEvent::Op::Contract, gics[k], top + glevels[k] + shift);
    return b.take();
}

inline Steps sigma_tau_steps(const Graph& g, const Filtration& f, const Permutation& sigma, const Permutation& tau) {
    auto ics = complexes(g, f);
    StepBuilder b(g);
    for (int k = 0; k < sigma.size(); ++k) b.add(ScheduleEvent::Op::Include, ics[sigma(k)]);
    for (int k = 0; k < tau.size(); ++k) b.add(ScheduleEvent::Op::Contract, ics[tau(k)]);
    return b.take();
}

inline Steps backward_steps(const Graph& g, const Filtration& f) {
    auto ics = complexes(g, f);
    StepBuilder b(g);
    b.include_all();
    for (int i = static_cast<int>(ics.size()) - 1; i >= 0; --i) b.add(ScheduleEvent::Op::Contract, ics[i]);
    return b.take();
}

inline Steps contraction_only_steps(const Graph& g, const Filtration& gf) {
    auto gics = complexes(g, gf);
    StepBuilder b(g);
    b.include_all();
    for (const auto& c : gics) b.add(ScheduleEvent::Op::Contract, c);
    return b.take();
}

/// Forward by f, then the full subcomplexes {f ≥ a} contracted for
/// decreasing vertex values a.
inline Steps extended_steps(const Graph& g, const Filtration& f) {
    auto levels = sorted_levels(f.vertex_values, f.edge_values);
    auto ics = complexes(g, f);
    StepBuilder b(g);
    for (std::size_t i = 0; i < ics.size(); ++i) b.add(ScheduleEvent::Op::Include, ics[i], levels[i]);
    std::vector<double> vals = sorted_levels(f.vertex_values, {});
    if (vals.empty()) return b.take();
    double top = levels.back(), shift = shift_for(-vals.back());
    for (int k = static_cast<int>(vals.size()) - 1; k >= 0; --k) {
        Complex c;
        for (int v = 0; v < g.n_vertices; ++v)
            if (f.vertex_values[v] >= vals[k]) c.vertices.push_back(v);
        for (const auto& e : g.edges)
            if (std::min(f.vertex_values[e.u], f.vertex_values[e.v]) >= vals[k]) c.edges.push_back(e.id);
        b.add(ScheduleEvent::Op::Contract, c, top - vals[k] + shift);
    }
    return b.take();
}

/// One step per event.
inline Steps hourglass_steps(const Graph& g, const Filtration& f, const HourglassSchedule& s) {
    auto ics = complexes(g, f);
    StepBuilder b(g);
    for (const auto& ev : s.events) b.add(ev.op, ics.at(ev.ic));
    return b.take();
}

// ---- coned complex ----

struct Cell {
    int dim = 0;
    int step = 0;
    std::vector<int> boundary;  // indices of earlier cells, sorted
    bool apex = false;
};

struct ConedComplex {
    std::vector<Cell> cells;
    int apex = -1;  // cell index of v+, or -1 when nothing is contracted
};

inline ConedComplex build_cone(const Graph& g, const Steps& steps) {
    ConedComplex c;
    std::vector<int> vcell(g.n_vertices, -1), ecell(g.num_edges(), -1), cone_edge(g.n_vertices, -1);
    auto push = [&](int dim, int step, std::vector<int> bd) {
        std::sort(bd.begin(), bd.end());
        // a self-loop's two equal faces cancel mod 2
        std::vector<int> reduced;
        for (std::size_t i = 0; i < bd.size(); ++i) {
            if (i + 1 < bd.size() && bd[i] == bd[i + 1]) {
                ++i;
                continue;
            }
            reduced.push_back(bd[i]);
        }
        c.cells.push_back({dim, step, std::move(reduced)});
        return static_cast<int>(c.cells.size()) - 1;
    };
    for (int t = 0; t < static_cast<int>(steps.size()); ++t) {
        const Step& s = steps[t];
        if (s.op == ScheduleEvent::Op::Include) {
            for (int v : s.vertices) vcell[v] = push(0, t, {});
            for (int e : s.edges) ecell[e] = push(1, t, {vcell[g.edges[e].u], vcell[g.edges[e].v]});
            continue;
        }
        if (c.apex < 0 && (!s.vertices.empty() || !s.edges.empty())) {
            c.apex = push(0, t, {});
            c.cells[c.apex].apex = true;
        }
        for (int v : s.vertices) cone_edge[v] = push(1, t, {c.apex, vcell[v]});
        for (int e : s.edges) {
            const Edge& ed = g.edges[e];
            push(2, t, {ecell[e], cone_edge[ed.u], cone_edge[ed.v]});
        }
    }
    return c;
}

struct CellPair {
    int dim;
    int birth_cell;
    int death_cell;  // -1 when essential
};

/// Textbook left-to-right column reduction over F2.
inline std::vector<CellPair> reduce_persistence(const ConedComplex& c) {
    const int n = static_cast<int>(c.cells.size());
    std::vector<std::vector<int>> col(n);
    std::vector<int> owner(n, -1);  // low row -> column
    std::vector<char> paired(n, 0);
    std::vector<CellPair> out;
    for (int j = 0; j < n; ++j) {
        col[j] = c.cells[j].boundary;
        while (!col[j].empty()) {
            int low = col[j].back();
            if (owner[low] < 0) break;
            std::vector<int> sum;
            std::set_symmetric_difference(col[j].begin(), col[j].end(), col[owner[low]].begin(),
                                          col[owner[low]].end(), std::back_inserter(sum));
            col[j] = std::move(sum);
        }
        if (!col[j].empty()) {
            int low = col[j].back();
            owner[low] = j;
            paired[low] = paired[j] = 1;
            out.push_back({c.cells[low].dim, low, j});
        }
    }
    for (int j = 0; j < n; ++j)
        if (!paired[j]) out.push_back({c.cells[j].dim, j, -1});
    return out;
}

/// Pairs of the coned complex in step time, without the pair created by v+.
inline std::vector<PersistencePair> cone_pairs(const ConedComplex& c) {
    std::vector<PersistencePair> out;
    for (const auto& p : reduce_persistence(c)) {
        if (p.dim > 1 || c.cells[p.birth_cell].apex) continue;
        out.push_back({p.dim, c.cells[p.birth_cell].step, p.death_cell < 0 ? kInfStep : c.cells[p.death_cell].step,
                       {}, {}});
    }
    return out;
}

// ---- components of the quotient ----

namespace detail {

inline int find(std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}

/// Component label per vertex (-1 if absent) of I_t / S_t after each step.
inline std::vector<std::vector<int>> quotient_components(const Graph& g, const Steps& steps) {
    std::vector<char> vin(g.n_vertices, 0), ein(g.num_edges(), 0), vcon(g.n_vertices, 0);
    std::vector<std::vector<int>> out;
    for (const auto& s : steps) {
        if (s.op == ScheduleEvent::Op::Include) {
            for (int v : s.vertices) vin[v] = 1;
            for (int e : s.edges) ein[e] = 1;
        } else {
            for (int v : s.vertices) vcon[v] = 1;
        }
        std::vector<int> p(g.n_vertices);
        for (int v = 0; v < g.n_vertices; ++v) p[v] = v;
        int hub = -1;
        for (int v = 0; v < g.n_vertices; ++v) {
            if (!vcon[v]) continue;
            if (hub < 0) hub = v;
            p[find(p, v)] = find(p, hub);
        }
        for (const auto& e : g.edges)
            if (ein[e.id]) p[find(p, e.u)] = find(p, e.v);
        std::vector<int> label(g.n_vertices, -1);
        for (int v = 0; v < g.n_vertices; ++v)
            if (vin[v]) label[v] = find(p, v);
        out.push_back(std::move(label));
    }
    return out;
}

}  // namespace detail

/// Dim-0 pairs of the quotient sequence. A component at step t absorbs the
/// components of step t-1 it contains plus one fresh component per vertex
/// included at t; it inherits the oldest birth and the others die at t.
inline std::vector<PersistencePair> track_components(const Graph& g, const Steps& steps) {
    auto labels = detail::quotient_components(g, steps);
    std::vector<PersistencePair> out;
    std::map<int, int> birth_prev;  // label at t-1 -> birth
    for (int t = 0; t < static_cast<int>(labels.size()); ++t) {
        std::map<int, std::vector<int>> preimage;  // label at t -> labels at t-1
        std::map<int, int> fresh;                  // label at t -> vertices new at t
        for (int v = 0; v < g.n_vertices; ++v) {
            int now = labels[t][v];
            if (now < 0) continue;
            int before = t > 0 ? labels[t - 1][v] : -1;
            if (before >= 0)
                preimage[now].push_back(before);
            else
                ++fresh[now];
        }
        std::set<int> seen;
        for (auto& [l, _] : preimage) seen.insert(l);
        for (auto& [l, _] : fresh) seen.insert(l);
        std::map<int, int> birth_now;
        for (int label : seen) {
            auto& prev = preimage[label];
            std::sort(prev.begin(), prev.end());
            prev.erase(std::unique(prev.begin(), prev.end()), prev.end());
            std::vector<int> births;
            for (int l : prev) births.push_back(birth_prev.at(l));
            births.insert(births.end(), fresh[label], t);
            std::sort(births.begin(), births.end());
            birth_now[label] = births.front();
            for (std::size_t i = 1; i < births.size(); ++i) out.push_back({0, births[i], t, {}, {}});
        }
        birth_prev = std::move(birth_now);
    }
    for (auto [label, b] : birth_prev) out.push_back({0, b, kInfStep, {}, {}});
    return out;
}

/// (β0, β1) of the quotient after each step.
inline std::vector<std::pair<int, int>> betti_numbers(const Graph& g, const Steps& steps) {
    auto labels = detail::quotient_components(g, steps);
    std::vector<char> vin(g.n_vertices, 0), ein(g.num_edges(), 0), vcon(g.n_vertices, 0), econ(g.num_edges(), 0);
    std::vector<std::pair<int, int>> out;
    for (std::size_t t = 0; t < steps.size(); ++t) {
        const auto& s = steps[t];
        bool inc = s.op == ScheduleEvent::Op::Include;
        for (int v : s.vertices) (inc ? vin : vcon)[v] = 1;
        for (int e : s.edges) (inc ? ein : econ)[e] = 1;
        int nv = 0, ne = 0, ncon = 0;
        for (int v = 0; v < g.n_vertices; ++v) nv += vin[v] && !vcon[v], ncon += vcon[v];
        for (int e = 0; e < g.num_edges(); ++e) ne += ein[e] && !econ[e];
        if (ncon) ++nv;
        std::vector<int> comps;
        for (int v = 0; v < g.n_vertices; ++v)
            if (labels[t][v] >= 0) comps.push_back(labels[t][v]);
        std::sort(comps.begin(), comps.end());
        int b0 = static_cast<int>(std::unique(comps.begin(), comps.end()) - comps.begin());
        out.emplace_back(b0, ne - nv + b0);
    }
    return out;
}

/// Full diagram of a resolved step list: dim 0 from component tracking, dim 1
/// from the coned complex.
inline PersistenceDiagram evaluate(const Graph& g, const Steps& steps, std::string mode) {
    PersistenceDiagram d;
    d.mode = std::move(mode);
    d.pairs = track_components(g, steps);
    for (const auto& p : cone_pairs(build_cone(g, steps)))
        if (p.dim == 1) d.pairs.push_back(p);
    bool timed = !steps.empty() && std::all_of(steps.begin(), steps.end(), [](const Step& s) { return s.value; });
    if (timed) {
        for (auto& p : d.pairs) {
            p.birth_value = *steps[p.birth].value;
            p.death_value = p.essential() ? kInfValue : *steps[p.death].value;
        }
        d.has_function_time = true;
    }
    d.canonicalize();
    return d;
}

/// Mode dispatch mirroring the engine entry points.
struct Inputs {
    const Filtration* f = nullptr;
    const Filtration* g = nullptr;
    const Permutation* sigma = nullptr;
    const Permutation* tau = nullptr;
    const HourglassSchedule* schedule = nullptr;
};

inline PersistenceDiagram oracle_diagram(const Graph& g, const std::string& mode, const Inputs& in) {
    auto need = [&](const void* p, const char* what) {
        if (!p) throw InputError("MissingInput", {mode + " needs " + what});
    };
    need(in.f, "a filtration");
    Steps s;
    if (mode == "forward") {
        s = forward_steps(g, *in.f);
    } else if (mode == "fb") {
        s = fb_steps(g, *in.f);
    } else if (mode == "fg") {
        need(in.g, "g");
        s = fg_steps(g, *in.f, *in.g);
    } else if (mode == "sigma_tau") {
        need(in.sigma, "sigma");
        need(in.tau, "tau");
        s = sigma_tau_steps(g, *in.f, *in.sigma, *in.tau);
    } else if (mode == "backward") {
        s = backward_steps(g, *in.f);
    } else if (mode == "extended") {
        s = extended_steps(g, *in.f);
    } else if (mode == "hourglass") {
        need(in.schedule, "a schedule");
        s = hourglass_steps(g, *in.f, *in.schedule);
    } else {
        throw InputError("UnknownMode", {mode});
    }
    auto d = evaluate(g, s, mode);
    if (mode == "fg" && in.g && in.f) {
        auto gl = sorted_levels(in.g->vertex_values, in.g->edge_values);
        if (!gl.empty()) d.g_shift = shift_for(gl.front());
    } else if ((mode == "fb" || mode == "extended") && !in.f->vertex_values.empty()) {
        d.g_shift = shift_for(-*std::max_element(in.f->vertex_values.begin(), in.f->vertex_values.end()));
    }
    return d;
}

}  // namespace gph::oracle
