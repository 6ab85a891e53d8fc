#pragma once

// JSON reading and writing for graphs, filtrations, diagrams, permutations
// and schedules.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "core.hpp"

namespace gph::io {

using json = nlohmann::ordered_json;

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("FileError", {"cannot open " + path});
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("ParseError", {path + ": " + e.what()});
    }
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("FileError", {"cannot write " + path});
    out << j.dump(2) << "\n";
}

// ---- graph ----

inline json to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back({e.u, e.v});
    return json{{"n", g.n_vertices}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw InputError("ParseError", {"graph needs fields \"n\" and \"edges\""});
    if (!j["n"].is_number_integer()) throw InputError("ParseError", {"\"n\" must be an integer"});
    std::vector<std::pair<long long, long long>> raw;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw InputError("ParseError", {"each edge must be [u, v] with integer endpoints"});
        raw.emplace_back(e[0].get<long long>(), e[1].get<long long>());
    }
    return validate_graph(j["n"].get<long long>(), raw);
}

// ---- filtration ----

inline json to_json(const Filtration& f) {
    return json{{"vertex_values", f.vertex_values}, {"edge_values", f.edge_values}};
}

inline std::vector<double> numbers(const json& j, const char* what) {
    if (!j.is_array()) throw InputError("ParseError", {std::string(what) + " must be an array"});
    std::vector<double> out;
    for (const auto& x : j) {
        if (!x.is_number()) throw InputError("ParseError", {std::string(what) + " must hold numbers"});
        out.push_back(x.get<double>());
    }
    return out;
}

inline Filtration filtration_from_json(const Graph& g, const json& j) {
    if (!j.is_object() || !j.contains("vertex_values"))
        throw InputError("MissingValue", {"filtration needs \"vertex_values\""});
    auto vv = numbers(j["vertex_values"], "vertex_values");
    if (!j.contains("edge_values") || j["edge_values"].is_null()) return vertex_to_full(g, vv);
    return validate_filtration(g, std::move(vv), numbers(j["edge_values"], "edge_values"));
}

// ---- diagram ----

inline json number_or_inf(double x) {
    if (std::isinf(x)) return "inf";
    return x;
}

inline json to_json(const PersistenceDiagram& d) {
    auto sorted = d.pairs;
    std::sort(sorted.begin(), sorted.end(), pair_less);
    json pairs = json::array();
    for (const auto& p : sorted) {
        json jp;
        jp["dim"] = p.dim;
        jp["birth_step"] = p.birth;
        jp["death_step"] = p.essential() ? json("inf") : json(p.death);
        jp["birth_value"] = p.birth_value ? json(*p.birth_value) : json(nullptr);
        jp["death_value"] = p.death_value ? number_or_inf(*p.death_value) : json(nullptr);
        pairs.push_back(std::move(jp));
    }
    json j;
    j["mode"] = d.mode;
    if (d.has_function_time && d.g_shift != 0.0) j["g_shift"] = d.g_shift;
    j["pairs"] = std::move(pairs);
    return j;
}

inline PersistenceDiagram diagram_from_json(const json& j) {
    if (!j.is_object() || !j.contains("pairs") || !j["pairs"].is_array())
        throw InputError("ParseError", {"diagram needs a \"pairs\" array"});
    PersistenceDiagram d;
    d.mode = j.value("mode", std::string{});
    d.g_shift = j.value("g_shift", 0.0);
    bool any_values = false;
    for (const auto& jp : j["pairs"]) {
        PersistencePair p;
        p.dim = jp.at("dim").get<int>();
        p.birth = jp.at("birth_step").get<int>();
        const auto& ds = jp.at("death_step");
        p.death = ds.is_string() ? kInfStep : ds.get<int>();
        if (jp.contains("birth_value") && !jp["birth_value"].is_null()) {
            p.birth_value = jp["birth_value"].get<double>();
            any_values = true;
        }
        if (jp.contains("death_value") && !jp["death_value"].is_null()) {
            const auto& dv = jp["death_value"];
            p.death_value = dv.is_string() ? kInfValue : dv.get<double>();
        }
        d.pairs.push_back(p);
    }
    d.has_function_time = any_values;
    d.canonicalize();
    return d;
}

// ---- permutation ----

inline json to_json(const Permutation& p) { return json(p.map); }

inline Permutation permutation_from_json(const json& j, int expected_size = -1) {
    if (!j.is_array()) throw InputError("NotAPermutation", {"permutation must be a JSON array"});
    std::vector<long long> raw;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InputError("NotAPermutation", {"entries must be integers"});
        raw.push_back(x.get<long long>());
    }
    return validate_permutation(raw, expected_size);
}

// ---- schedule ----

inline json to_json(const HourglassSchedule& s) {
    json arr = json::array();
    for (const auto& e : s.events)
        arr.push_back({{"op", e.op == ScheduleEvent::Op::Include ? "include" : "contract"}, {"ic", e.ic}});
    return arr;
}

inline HourglassSchedule schedule_from_json(const json& j) {
    if (!j.is_array()) throw InputError("ParseError", {"schedule must be a JSON array"});
    HourglassSchedule s;
    for (const auto& e : j) {
        std::string op = e.at("op").get<std::string>();
        if (op != "include" && op != "contract")
            throw InputError("ParseError", {"unknown op \"" + op + "\""});
        s.events.push_back({op == "include" ? ScheduleEvent::Op::Include : ScheduleEvent::Op::Contract,
                            e.at("ic").get<int>()});
    }
    return s;
}

}  // namespace gph::io
