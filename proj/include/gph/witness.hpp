#pragma once

// Expressivity separations checked on the bundled fixture graphs.

#include <string>
#include <vector>

#include "backward.hpp"
#include "hourglass.hpp"
#include "io.hpp"

namespace gph::witness {

struct Instance {
    Graph graph;
    Filtration f;
};

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline Instance load_instance(const io::json& j) {
    Instance in;
    in.graph = io::graph_from_json(j.at("graph"));
    in.f = io::filtration_from_json(in.graph, j.at("filtration"));
    return in;
}

inline double number_or_inf(const io::json& j) {
    return j.is_string() ? kInfValue : j.get<double>();
}

inline std::string show(const std::vector<PersistencePair>& ps) {
    std::string s;
    for (const auto& p : ps) {
        if (!s.empty()) s += " ";
        auto v = [](const std::optional<double>& x, int step) {
            if (!x) return step == kInfStep ? std::string("inf") : std::to_string(step);
            if (std::isinf(*x)) return std::string("inf");
            std::string t = std::to_string(*x);
            t.erase(t.find_last_not_of('0') + 1);
            if (t.back() == '.') t.pop_back();
            return t;
        };
        s += std::to_string(p.dim) + ":(" + v(p.birth_value, p.birth) + "," + v(p.death_value, p.death) + ")";
    }
    return s;
}

inline std::vector<PersistencePair> value_pairs(const std::vector<std::tuple<int, double, double>>& list) {
    std::vector<PersistencePair> out;
    for (auto [dim, b, d] : list) {
        PersistencePair p;
        p.dim = dim;
        p.birth_value = b;
        p.death_value = d;
        out.push_back(p);
    }
    return out;
}

/// Forward diagram of G against the reference list, and G/H forward-equal,
/// backward-equal, FB-different.
inline std::vector<Check> check_fb_separation(const io::json& fx) {
    auto G = load_instance(fx.at("G")), H = load_instance(fx.at("H"));
    std::vector<std::tuple<int, double, double>> reference;
    for (const auto& e : fx.at("reference_forward_G"))
        reference.emplace_back(e[0].get<int>(), e[1][0].get<double>(), number_or_inf(e[1][1]));
    auto fg = forward_diagram(G.graph, G.f), fh = forward_diagram(H.graph, H.f);
    auto bg = backward_only(G.graph, G.f), bh = backward_only(H.graph, H.f);
    auto xg = fb_persistence(G.graph, G.f), xh = fb_persistence(H.graph, H.f);
    return {
        {"fb-separation: forward diagram of G equals the reference list", same_values(fg.pairs, value_pairs(reference)),
         show(fg.pairs)},
        {"fb-separation: forward diagrams of G and H equal", same_values(fg.pairs, fh.pairs), ""},
        {"fb-separation: backward diagrams of G and H equal", same_steps(bg.pairs, bh.pairs), ""},
        {"fb-separation: FB diagrams of G and H differ", !same_values(xg.pairs, xh.pairs),
         "G " + show(xg.pairs) + " | H " + show(xh.pairs)},
    };
}

/// G/H FB-equal while the Inc(IC_1)-first hourglass schedule separates them.
inline std::vector<Check> check_hourglass_separation(const io::json& fx) {
    auto G = load_instance(fx.at("G")), H = load_instance(fx.at("H"));
    auto sched = io::schedule_from_json(fx.at("schedule"));
    auto xg = fb_persistence(G.graph, G.f), xh = fb_persistence(H.graph, H.f);
    auto hg = hourglass_persistence(G.graph, G.f, sched), hh = hourglass_persistence(H.graph, H.f, sched);
    return {
        {"hourglass-separation: FB diagrams of G and H equal", same_values(xg.pairs, xh.pairs), show(xg.in_dim(0))},
        {"hourglass-separation: hourglass diagrams of G and H differ", !same_steps(hg.pairs, hh.pairs),
         "G " + show(hg.pairs) + " | H " + show(hh.pairs)},
    };
}

/// Forward-equal, backward-different.
inline std::vector<Check> check_backward_separation(const io::json& fx) {
    auto G = load_instance(fx.at("G")), H = load_instance(fx.at("H"));
    auto fg = forward_diagram(G.graph, G.f), fh = forward_diagram(H.graph, H.f);
    auto bg = backward_only(G.graph, G.f), bh = backward_only(H.graph, H.f);
    return {
        {"backward-separation: forward diagrams of G and H equal", same_values(fg.pairs, fh.pairs), ""},
        {"backward-separation: backward diagrams of G and H differ", !same_steps(bg.pairs, bh.pairs),
         "G " + show(bg.pairs) + " | H " + show(bh.pairs)},
    };
}

/// FB-different, extended-equal.
inline std::vector<Check> check_extended_blindspot(const io::json& fx) {
    auto G = load_instance(fx.at("G")), H = load_instance(fx.at("H"));
    auto xg = fb_persistence(G.graph, G.f), xh = fb_persistence(H.graph, H.f);
    auto eg = extended_fb(G.graph, G.f), eh = extended_fb(H.graph, H.f);
    return {
        {"extended-blindspot: FB diagrams of G and H differ", !same_values(xg.pairs, xh.pairs),
         "G " + show(xg.pairs) + " | H " + show(xh.pairs)},
        {"extended-blindspot: extended diagrams of G and H equal", same_values(eg.pairs, eh.pairs), show(eg.pairs)},
    };
}

/// Dim-1 pairs of the contraction sequence, zero-length pairs dropped and
/// steps counted from 1.
inline std::vector<PersistencePair> four_cycle_pairs(const io::json& fx) {
    auto g = io::graph_from_json(fx.at("graph"));
    auto gf = io::filtration_from_json(g, fx.at("g"));
    auto d = drop_zero_length(contraction_only(g, gf));
    std::vector<PersistencePair> out;
    for (auto p : d.in_dim(1)) {
        p.birth += 1;
        if (!p.essential()) p.death += 1;
        out.push_back(p);
    }
    return out;
}

inline std::vector<Check> check_four_cycle(const io::json& fx) {
    std::vector<PersistencePair> expected;
    for (const auto& e : fx.at("expected_dim1")) expected.push_back({1, e[0].get<int>(), e[1].get<int>(), {}, {}});
    auto got = four_cycle_pairs(fx);
    return {{"four-cycle: contraction dim-1 pairs", same_steps(got, expected), show(got)}};
}

inline std::vector<Check> run_all(const std::string& dir) {
    std::vector<Check> out;
    auto add = [&](std::vector<Check> c) { out.insert(out.end(), c.begin(), c.end()); };
    add(check_backward_separation(io::read_json_file(dir + "/backward_separation.json")));
    add(check_fb_separation(io::read_json_file(dir + "/fb_separation.json")));
    add(check_hourglass_separation(io::read_json_file(dir + "/hourglass_separation.json")));
    add(check_extended_blindspot(io::read_json_file(dir + "/extended_blindspot.json")));
    add(check_four_cycle(io::read_json_file(dir + "/four_cycle_contraction.json")));
    return out;
}

}  // namespace gph::witness
