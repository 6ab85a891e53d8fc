#pragma once

// Shared domain types: graphs, filtrations, diagrams, permutations, schedules.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace gph {

/// Raised on malformed input. `code` is a stable machine-readable tag,
/// `diagnostics` lists every violation found.
class InputError : public std::runtime_error {
public:
    InputError(std::string code, std::vector<std::string> diagnostics)
        : std::runtime_error(join(code, diagnostics)),
          code_(std::move(code)),
          diagnostics_(std::move(diagnostics)) {}

    const std::string& code() const { return code_; }
    const std::vector<std::string>& diagnostics() const { return diagnostics_; }

private:
    static std::string join(const std::string& code, const std::vector<std::string>& d) {
        std::string s = code;
        for (const auto& line : d) s += "\n  " + line;
        return s;
    }
    std::string code_;
    std::vector<std::string> diagnostics_;
};

struct Edge {
    int id;
    int u;
    int v;
};

/// Finite undirected multigraph; self-loops and parallel edges are allowed.
struct Graph {
    int n_vertices = 0;
    std::vector<Edge> edges;

    int num_edges() const { return static_cast<int>(edges.size()); }
};

inline Graph validate_graph(long long n, const std::vector<std::pair<long long, long long>>& raw) {
    std::vector<std::string> errs;
    if (n < 0) errs.push_back("negative vertex count " + std::to_string(n));
    Graph g;
    g.n_vertices = n < 0 ? 0 : static_cast<int>(n);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto [u, v] = raw[i];
        if (u < 0 || v < 0 || u >= n || v >= n) {
            errs.push_back("edge " + std::to_string(i) + " endpoint out of range (" +
                           std::to_string(u) + "," + std::to_string(v) + ")");
            continue;
        }
        g.edges.push_back({static_cast<int>(i), static_cast<int>(u), static_cast<int>(v)});
    }
    if (!errs.empty()) throw InputError("InvalidGraph", std::move(errs));
    return g;
}

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::pair<long long, long long>> raw(edges.begin(), edges.end());
    return validate_graph(n, raw);
}

/// Values on vertices and edges plus the derived level structure.
/// `vertex_level[v]` is the index of `vertex_values[v]` in `levels`.
struct Filtration {
    std::vector<double> vertex_values;
    std::vector<double> edge_values;
    std::vector<double> levels;
    std::vector<int> vertex_level;
    std::vector<int> edge_level;
    // Set by permute_filtration: values order inclusions only, monotonicity may fail.
    bool ordering_only = false;

    int num_levels() const { return static_cast<int>(levels.size()); }
    int last_step() const { return num_levels() - 1; }

    int step_of(double value) const {
        auto it = std::lower_bound(levels.begin(), levels.end(), value);
        if (it == levels.end() || *it != value)
            throw InputError("UnknownLevel", {"value " + std::to_string(value) + " is not a level"});
        return static_cast<int>(it - levels.begin());
    }

    double max_value() const { return levels.empty() ? 0.0 : levels.back(); }
    double min_value() const { return levels.empty() ? 0.0 : levels.front(); }
};

namespace detail {

inline void index_levels(Filtration& f) {
    std::vector<double> all;
    all.reserve(f.vertex_values.size() + f.edge_values.size());
    all.insert(all.end(), f.vertex_values.begin(), f.vertex_values.end());
    all.insert(all.end(), f.edge_values.begin(), f.edge_values.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    f.levels = std::move(all);
    auto idx = [&](double x) {
        return static_cast<int>(std::lower_bound(f.levels.begin(), f.levels.end(), x) - f.levels.begin());
    };
    f.vertex_level.resize(f.vertex_values.size());
    f.edge_level.resize(f.edge_values.size());
    for (std::size_t i = 0; i < f.vertex_values.size(); ++i) f.vertex_level[i] = idx(f.vertex_values[i]);
    for (std::size_t i = 0; i < f.edge_values.size(); ++i) f.edge_level[i] = idx(f.edge_values[i]);
}

}  // namespace detail

/// Builds the level structure without checking monotonicity.
inline Filtration make_unchecked_filtration(std::vector<double> vv, std::vector<double> ev) {
    Filtration f;
    f.vertex_values = std::move(vv);
    f.edge_values = std::move(ev);
    detail::index_levels(f);
    return f;
}

inline Filtration validate_filtration(const Graph& g, std::vector<double> vv, std::vector<double> ev) {
    std::vector<std::string> errs;
    if (static_cast<int>(vv.size()) != g.n_vertices)
        errs.push_back("expected " + std::to_string(g.n_vertices) + " vertex values, got " +
                       std::to_string(vv.size()));
    if (static_cast<int>(ev.size()) != g.num_edges())
        errs.push_back("expected " + std::to_string(g.num_edges()) + " edge values, got " +
                       std::to_string(ev.size()));
    if (!errs.empty()) throw InputError("MissingValue", std::move(errs));
    for (double x : vv)
        if (!std::isfinite(x)) errs.push_back("non-finite vertex value");
    for (double x : ev)
        if (!std::isfinite(x)) errs.push_back("non-finite edge value");
    if (!errs.empty()) throw InputError("MissingValue", std::move(errs));
    for (const auto& e : g.edges) {
        if (ev[e.id] < vv[e.u] || ev[e.id] < vv[e.v])
            errs.push_back("MonotonicityViolation(" + std::to_string(e.id) + ")");
    }
    if (!errs.empty()) throw InputError("MonotonicityViolation", std::move(errs));
    return make_unchecked_filtration(std::move(vv), std::move(ev));
}

/// Edge value = max of its endpoint values.
inline Filtration vertex_to_full(const Graph& g, const std::vector<double>& vv) {
    if (static_cast<int>(vv.size()) != g.n_vertices)
        throw InputError("MissingValue", {"expected " + std::to_string(g.n_vertices) +
                                              " vertex values, got " + std::to_string(vv.size())});
    std::vector<double> ev(g.edges.size());
    for (const auto& e : g.edges) ev[e.id] = std::max(vv[e.u], vv[e.v]);
    return validate_filtration(g, vv, std::move(ev));
}

inline bool is_vertex_based(const Graph& g, const Filtration& f) {
    for (const auto& e : g.edges)
        if (f.edge_values[e.id] != std::max(f.vertex_values[e.u], f.vertex_values[e.v])) return false;
    return true;
}

inline void require_vertex_based(const Graph& g, const Filtration& f) {
    if (!is_vertex_based(g, f))
        throw InputError("NotVertexBased", {"edge values must equal the max of their endpoints"});
}

struct IntermediateComplex {
    int index = 0;
    std::vector<int> vertices;  // sorted
    std::vector<int> edges;     // sorted

    bool operator==(const IntermediateComplex&) const = default;
};

/// Per-simplex step assignment driving the engines. Steps may be empty.
struct StepOrder {
    int num_steps = 0;
    std::vector<int> vertex_step;
    std::vector<int> edge_step;
};

inline StepOrder levels_as_steps(const Filtration& f) {
    return {f.num_levels(), f.vertex_level, f.edge_level};
}

inline constexpr int kInfStep = std::numeric_limits<int>::max();
inline constexpr double kInfValue = std::numeric_limits<double>::infinity();

struct PersistencePair {
    int dim = 0;
    int birth = 0;
    int death = kInfStep;
    std::optional<double> birth_value;
    std::optional<double> death_value;

    bool essential() const { return death == kInfStep; }

    bool operator==(const PersistencePair&) const = default;
};

inline bool pair_less(const PersistencePair& a, const PersistencePair& b) {
    auto key = [](const PersistencePair& p) {
        return std::make_tuple(p.dim, p.birth, p.death, p.birth_value.value_or(-kInfValue),
                               p.death_value.value_or(-kInfValue));
    };
    return key(a) < key(b);
}

struct PersistenceDiagram {
    std::string mode;
    std::vector<PersistencePair> pairs;
    bool keep_zero_length = true;
    bool has_function_time = false;
    double g_shift = 0.0;

    void canonicalize() { std::sort(pairs.begin(), pairs.end(), pair_less); }

    std::vector<PersistencePair> in_dim(int d) const {
        std::vector<PersistencePair> out;
        for (const auto& p : pairs)
            if (p.dim == d) out.push_back(p);
        std::sort(out.begin(), out.end(), pair_less);
        return out;
    }
};

/// Multiset equality of pairs in step time (values ignored).
inline bool same_steps(std::vector<PersistencePair> a, std::vector<PersistencePair> b) {
    auto strip = [](std::vector<PersistencePair>& v) {
        for (auto& p : v) p.birth_value.reset(), p.death_value.reset();
        std::sort(v.begin(), v.end(), pair_less);
    };
    strip(a);
    strip(b);
    return a == b;
}

/// Multiset equality of (dim, birth_value, death_value), steps ignored.
inline bool same_values(const std::vector<PersistencePair>& a, const std::vector<PersistencePair>& b,
                        double tol = 0.0) {
    using K = std::tuple<int, double, double>;
    auto keys = [](const std::vector<PersistencePair>& v) {
        std::vector<K> k;
        for (const auto& p : v)
            k.emplace_back(p.dim, p.birth_value.value_or(std::nan("")), p.death_value.value_or(std::nan("")));
        std::sort(k.begin(), k.end());
        return k;
    };
    auto ka = keys(a), kb = keys(b);
    if (ka.size() != kb.size()) return false;
    for (std::size_t i = 0; i < ka.size(); ++i) {
        auto [da, ba, xa] = ka[i];
        auto [db, bb, xb] = kb[i];
        if (da != db) return false;
        auto close = [tol](double x, double y) {
            if (std::isnan(x) || std::isnan(y)) return false;
            if (std::isinf(x) || std::isinf(y)) return x == y;
            return std::fabs(x - y) <= tol;
        };
        if (!close(ba, bb) || !close(xa, xb)) return false;
    }
    return true;
}

/// Removes pairs with birth == death, in step time or in function time.
inline PersistenceDiagram drop_zero_length(PersistenceDiagram d, bool by_value = false) {
    std::erase_if(d.pairs, [by_value](const PersistencePair& p) {
        if (by_value) return p.birth_value && p.death_value && *p.birth_value == *p.death_value;
        return p.birth == p.death;
    });
    d.keep_zero_length = false;
    return d;
}

/// Bijection on {0, ..., n}; `map[i]` is the image of i.
struct Permutation {
    std::vector<int> map;

    int size() const { return static_cast<int>(map.size()); }
    int operator()(int i) const { return map[i]; }

    static Permutation identity(int size) {
        Permutation p;
        p.map.resize(size);
        std::iota(p.map.begin(), p.map.end(), 0);
        return p;
    }
    static Permutation reverse(int size) {
        Permutation p;
        p.map.resize(size);
        for (int i = 0; i < size; ++i) p.map[i] = size - 1 - i;
        return p;
    }

    Permutation inverse() const {
        Permutation p;
        p.map.resize(map.size());
        for (int i = 0; i < size(); ++i) p.map[map[i]] = i;
        return p;
    }

    /// (this ∘ other)(i) = this(other(i))
    Permutation compose(const Permutation& other) const {
        Permutation p;
        p.map.resize(other.map.size());
        for (int i = 0; i < other.size(); ++i) p.map[i] = map[other.map[i]];
        return p;
    }

    bool operator==(const Permutation&) const = default;
};

inline Permutation validate_permutation(const std::vector<long long>& raw, int expected_size = -1) {
    std::vector<std::string> errs;
    int n = static_cast<int>(raw.size());
    if (expected_size >= 0 && n != expected_size)
        errs.push_back("expected length " + std::to_string(expected_size) + ", got " + std::to_string(n));
    std::vector<char> seen(n, 0);
    Permutation p;
    for (int i = 0; i < n; ++i) {
        long long x = raw[i];
        if (x < 0 || x >= n) {
            errs.push_back("entry " + std::to_string(i) + " out of range: " + std::to_string(x));
            continue;
        }
        if (seen[x]) errs.push_back("value " + std::to_string(x) + " repeated");
        seen[x] = 1;
        p.map.push_back(static_cast<int>(x));
    }
    if (!errs.empty()) throw InputError("NotAPermutation", std::move(errs));
    return p;
}

struct ScheduleEvent {
    enum class Op { Include, Contract };
    Op op;
    int ic;

    bool operator==(const ScheduleEvent&) const = default;
};

struct HourglassSchedule {
    std::vector<ScheduleEvent> events;

    static HourglassSchedule from(std::initializer_list<std::pair<char, int>> list) {
        HourglassSchedule s;
        for (auto [c, i] : list)
            s.events.push_back({c == 'I' ? ScheduleEvent::Op::Include : ScheduleEvent::Op::Contract, i});
        return s;
    }
};

/// Function time of contraction steps needs a positive g; non-positive g is
/// shifted so that its minimum becomes 1.
inline double positive_shift(double min_g) { return min_g > 0 ? 0.0 : 1.0 - min_g; }

}  // namespace gph
