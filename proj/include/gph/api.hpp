#pragma once

// Mode-name dispatch over the engines, shared by the CLI and the tests.

#include <string>

#include "backward.hpp"
#include "hourglass.hpp"
#include "oracle.hpp"

namespace gph {

using Inputs = oracle::Inputs;

/// Accepts CLI spellings ("sigma-tau", "ff") as well as diagram mode names.
inline PersistenceDiagram compute(const Graph& g, std::string mode, const Inputs& in) {
    if (mode == "sigma-tau") mode = "sigma_tau";
    auto need = [&](const void* p, const char* what) {
        if (!p) throw InputError("MissingInput", {mode + " needs " + what});
    };
    need(in.f, "a filtration");
    if (mode == "forward") return forward_diagram(g, *in.f);
    if (mode == "backward") return backward_only(g, *in.f);
    if (mode == "fb") return fb_persistence(g, *in.f);
    if (mode == "fg") {
        need(in.g, "g");
        return fg_persistence(g, *in.f, *in.g);
    }
    if (mode == "sigma_tau") {
        need(in.sigma, "sigma");
        need(in.tau, "tau");
        return sigma_tau_persistence(g, *in.f, *in.sigma, *in.tau);
    }
    if (mode == "extended") return extended_fb(g, *in.f);
    if (mode == "ff") return ff_shortcut(g, *in.f);
    if (mode == "hourglass") {
        need(in.schedule, "a schedule");
        return hourglass_persistence(g, *in.f, *in.schedule);
    }
    throw InputError("UnknownMode", {mode});
}

/// The oracle under the same mode names; "ff" resolves to fg with g = f.
inline PersistenceDiagram compute_oracle(const Graph& g, std::string mode, Inputs in) {
    if (mode == "sigma-tau") mode = "sigma_tau";
    if (mode == "ff") {
        mode = "fg";
        in.g = in.f;
    }
    if (mode == "hourglass" && in.f && in.schedule) validate_schedule(g, *in.f, *in.schedule);
    return oracle::oracle_diagram(g, mode, in);
}

inline bool has_function_time(const std::string& mode) {
    return mode == "forward" || mode == "fb" || mode == "fg" || mode == "extended" || mode == "ff";
}

inline PersistenceDiagram strip_values(PersistenceDiagram d) {
    for (auto& p : d.pairs) p.birth_value.reset(), p.death_value.reset();
    d.has_function_time = false;
    return d;
}

}  // namespace gph
