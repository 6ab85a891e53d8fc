#pragma once

// Interleaved inclusion/contraction schedules over intermediate complexes.

#include <string>
#include <vector>

#include "core.hpp"
#include "filtration.hpp"
#include "oracle.hpp"

namespace gph {

/// Each index included once, contracted at most once, never before its
/// inclusion. Indices that are never included are allowed.
inline void validate_schedule(const Graph&, const Filtration& f, const HourglassSchedule& s) {
    const int n = f.num_levels();
    std::vector<char> inc(n, 0), con(n, 0);
    for (std::size_t k = 0; k < s.events.size(); ++k) {
        const auto& ev = s.events[k];
        std::string where = "event " + std::to_string(k) + " (ic " + std::to_string(ev.ic) + ")";
        if (ev.ic < 0 || ev.ic >= n) throw InputError("UnknownIndex", {where});
        if (ev.op == ScheduleEvent::Op::Include) {
            if (inc[ev.ic]) throw InputError("DuplicateInclude", {where});
            inc[ev.ic] = 1;
        } else {
            if (!inc[ev.ic]) throw InputError("ContractBeforeInclude", {where});
            if (con[ev.ic]) throw InputError("DuplicateContract", {where});
            con[ev.ic] = 1;
        }
    }
}

/// True when every intermediate complex is contracted, so the sequence ends at a point.
inline bool is_complete(const Filtration& f, const HourglassSchedule& s) {
    std::vector<char> con(f.num_levels(), 0);
    for (const auto& ev : s.events)
        if (ev.op == ScheduleEvent::Op::Contract && ev.ic >= 0 && ev.ic < f.num_levels()) con[ev.ic] = 1;
    return std::all_of(con.begin(), con.end(), [](char c) { return c; });
}

/// Step time only: step k is the k-th event.
inline PersistenceDiagram hourglass_persistence(const Graph& g, const Filtration& f, const HourglassSchedule& s) {
    validate_schedule(g, f, s);
    return oracle::evaluate(g, oracle::hourglass_steps(g, f, s), "hourglass");
}

/// The non-interleaved schedule Inc(σ(0)), ..., Inc(σ(n)), Con(τ(0)), ..., Con(τ(n)).
inline HourglassSchedule sigma_tau_schedule(const Permutation& sigma, const Permutation& tau) {
    HourglassSchedule s;
    for (int i : sigma.map) s.events.push_back({ScheduleEvent::Op::Include, i});
    for (int i : tau.map) s.events.push_back({ScheduleEvent::Op::Contract, i});
    return s;
}

struct ThresholdSchedule {
    HourglassSchedule schedule;
    int peak_live = 0;  // most simplices included and not yet contracted at once
};

/// Includes IC_0, IC_1, ... in order; whenever more than `d` simplices are
/// live, every live complex is contracted, newest first. Whatever is left is
/// contracted at the end the same way.
inline ThresholdSchedule threshold_schedule(const Graph& g, const Filtration& f, int d) {
    auto ics = intermediate_complexes(g, f);
    ThresholdSchedule out;
    std::vector<char> vin(g.n_vertices, 0), vcon(g.n_vertices, 0), ein(g.num_edges(), 0);
    std::vector<int> live_ics;
    int live = 0;
    auto flush = [&] {
        for (auto it = live_ics.rbegin(); it != live_ics.rend(); ++it) {
            out.schedule.events.push_back({ScheduleEvent::Op::Contract, *it});
            for (int v : ics[*it].vertices)
                if (!vcon[v]) vcon[v] = 1, --live;
            live -= static_cast<int>(ics[*it].edges.size());
        }
        live_ics.clear();
    };
    for (const auto& ic : ics) {
        out.schedule.events.push_back({ScheduleEvent::Op::Include, ic.index});
        for (int v : ic.vertices)
            if (!vin[v]) vin[v] = 1, ++live;
        live += static_cast<int>(ic.edges.size());
        live_ics.push_back(ic.index);
        out.peak_live = std::max(out.peak_live, live);
        if (live > d) flush();
    }
    flush();
    return out;
}

}  // namespace gph
