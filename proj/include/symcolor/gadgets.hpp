#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symcolor/coloring.hpp"
#include "symcolor/error.hpp"
#include "symcolor/generator.hpp"
#include "symcolor/graph.hpp"

namespace symcolor {

enum class GadgetKind {
    g_pendant,   // spine t''-t'-t0-t1-..., independent blob A_i pendant on t_i
    g1_clique,  // spine t0-t1-..., clique blob A_i joined to t_i
    h1_independent,  // g1_clique without the edges inside blobs
    g2_rail,  // rail r0-r1-..., rungs r_i-t_i, blob A_i pendant on t_i
    h_rigid,   // rigid core v0..v5, s0..s3 with a tail s4, s5, ... hanging from v1
};

inline const char* to_string(GadgetKind k) {
    switch (k) {
        case GadgetKind::g_pendant: return "g";
        case GadgetKind::g1_clique: return "g1";
        case GadgetKind::h1_independent: return "h1";
        case GadgetKind::g2_rail: return "g2";
        case GadgetKind::h_rigid: return "h";
    }
    return "?";
}

inline std::optional<GadgetKind> gadget_from_string(const std::string& s) {
    for (GadgetKind k : {GadgetKind::g_pendant, GadgetKind::g1_clique, GadgetKind::h1_independent,
                         GadgetKind::g2_rail, GadgetKind::h_rigid}) {
        if (s == to_string(k)) return k;
    }
    return std::nullopt;
}

// No horizon: the generator never runs out of layers.
inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

// horizon = number of blobs A_0..A_{h-1} (spine t_0..t_{h-1}, rails
// r_0..r_h for g2_rail), or the tail length s_4..s_{3+h} for h_rigid.
struct GadgetSpec {
    GadgetKind kind = GadgetKind::g_pendant;
    std::size_t blob = 2;
    std::size_t horizon = kUnbounded;
};

inline std::string blob_label(std::size_t i, std::size_t j) {
    return "a" + std::to_string(i) + "_" + std::to_string(j + 1);
}

namespace detail {

inline std::string indexed(const char* stem, std::size_t i) { return stem + std::to_string(i); }

// Emits blob A_i hanging from `anchor`, optionally as a clique.
inline void emit_blob(Layer& l, std::size_t i, std::size_t n, const std::string& anchor, bool clique) {
    const std::size_t first = l.vertices.size();
    for (std::size_t j = 0; j < n; ++j) {
        l.vertices.push_back(blob_label(i, j));
        l.edges.emplace_back(anchor, l.vertices.back());
    }
    if (!clique) return;
    for (std::size_t a = first; a < l.vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < l.vertices.size(); ++b) {
            l.edges.emplace_back(l.vertices[a], l.vertices[b]);
        }
    }
}

inline Layer pendant_layer(std::size_t m, std::size_t n, std::size_t h) {
    Layer l;
    if (m == 0) {
        l.vertices = {"t''"};
    } else if (m == 1) {
        l.vertices = {"t'"};
        l.edges = {{"t''", "t'"}};
    } else if (m == 2) {
        if (h == 0) return l;
        l.vertices = {"t0"};
        l.edges = {{"t'", "t0"}};
    } else {
        const std::size_t b = m - 3;
        if (b < h) emit_blob(l, b, n, indexed("t", b), false);
        if (m - 2 < h) {
            l.vertices.push_back(indexed("t", m - 2));
            l.edges.emplace_back(indexed("t", m - 3), indexed("t", m - 2));
        }
    }
    return l;
}

inline Layer g1_layer(std::size_t m, std::size_t n, std::size_t h, bool clique) {
    Layer l;
    if (m == 0) {
        l.vertices = {"t0"};
        return l;
    }
    if (m - 1 < h) emit_blob(l, m - 1, n, indexed("t", m - 1), clique);
    if (m < h) {
        l.vertices.push_back(indexed("t", m));
        l.edges.emplace_back(indexed("t", m - 1), indexed("t", m));
    }
    return l;
}

inline Layer g2_layer(std::size_t m, std::size_t n, std::size_t h) {
    Layer l;
    if (m == 0) {
        l.vertices = {"r0"};
        return l;
    }
    if (m >= 2 && m - 2 < h) emit_blob(l, m - 2, n, indexed("t", m - 2), false);
    if (m - 1 < h) {
        l.vertices.push_back(indexed("t", m - 1));
        l.edges.emplace_back(indexed("r", m - 1), indexed("t", m - 1));
    }
    if (m <= h) {
        l.vertices.push_back(indexed("r", m));
        l.edges.emplace_back(indexed("r", m - 1), indexed("r", m));
    }
    return l;
}

inline Layer rigid_layer(std::size_t m, std::size_t h) {
    Layer l;
    switch (m) {
        case 0:
            l.vertices = {"v0"};
            return l;
        case 1:
            l.vertices = {"v1", "v2", "v3", "v4"};
            l.edges = {{"v0", "v1"}, {"v0", "v2"}, {"v0", "v3"}, {"v0", "v4"}};
            return l;
        case 2:
            l.vertices = {"v5", "s1", "s2"};
            l.edges = {{"v1", "v5"}, {"v2", "v5"}, {"v3", "v5"}, {"v4", "v5"},
                       {"v2", "s1"}, {"v4", "s2"}};
            if (h >= 1) {
                l.vertices.push_back("s4");
                l.edges.emplace_back("v1", "s4");
            }
            return l;
        case 3:
            l.vertices = {"s0", "s3"};
            l.edges = {{"v5", "s0"}, {"s2", "s3"}};
            break;
        default:
            break;
    }
    // Tail vertex s_j sits in layer j - 2.
    const std::size_t j = m + 2;
    if (j >= 5 && j - 3 <= h) {
        l.vertices.push_back(indexed("s", j));
        l.edges.emplace_back(indexed("s", j - 1), indexed("s", j));
    }
    return l;
}

}  // namespace detail

inline GeneratorGraph generate(const GadgetSpec& spec) {
    const std::size_t n = spec.blob;
    const std::size_t h = spec.horizon;
    if (spec.kind != GadgetKind::h_rigid && n < 2) {
        throw PreconditionError("blob size must be at least 2, got " + std::to_string(n));
    }
    if (h < 1) throw PreconditionError("horizon must be at least 1");
    switch (spec.kind) {
        case GadgetKind::g_pendant:
            return GeneratorGraph("g", n + 2, [n, h](std::size_t m) { return detail::pendant_layer(m, n, h); });
        case GadgetKind::g1_clique:
            return GeneratorGraph("g1", n + 2,
                                  [n, h](std::size_t m) { return detail::g1_layer(m, n, h, true); });
        case GadgetKind::h1_independent:
            return GeneratorGraph("h1", n + 2,
                                  [n, h](std::size_t m) { return detail::g1_layer(m, n, h, false); });
        case GadgetKind::g2_rail:
            return GeneratorGraph("g2", std::max<std::size_t>(3, n + 1),
                                  [n, h](std::size_t m) { return detail::g2_layer(m, n, h); });
        case GadgetKind::h_rigid:
            return GeneratorGraph("h", 5, [h](std::size_t m) { return detail::rigid_layer(m, h); });
    }
    throw PreconditionError("unknown gadget kind");
}

// Number of layers holding every vertex of a bounded gadget.
inline std::size_t full_depth(const GadgetSpec& spec) {
    if (spec.horizon == kUnbounded) throw PreconditionError("unbounded gadget has no full depth");
    const std::size_t h = spec.horizon;
    switch (spec.kind) {
        case GadgetKind::g_pendant: return h + 2;
        case GadgetKind::g1_clique:
        case GadgetKind::h1_independent: return h;
        case GadgetKind::g2_rail: return h + 1;
        case GadgetKind::h_rigid: return std::max<std::size_t>(3, h + 1);
    }
    return 0;
}

// The whole bounded gadget as a finite graph.
inline FiniteGraph realize(const GadgetSpec& spec) { return truncate(generate(spec), full_depth(spec)); }

// Blob vertices grouped by blob index, read off the a<i>_<j> labels.
inline std::vector<std::vector<VertexId>> blob_partition(const FiniteGraph& g) {
    std::map<std::size_t, std::vector<VertexId>> by_blob;
    for (VertexId v = 0; v < g.order(); ++v) {
        const std::string& s = g.label(v);
        if (s.size() < 4 || s[0] != 'a') continue;
        const auto cut = s.find('_');
        if (cut == std::string::npos || cut == 1) continue;
        try {
            by_blob[std::stoul(s.substr(1, cut - 1))].push_back(v);
        } catch (const std::exception&) {
            continue;
        }
    }
    std::vector<std::vector<VertexId>> out;
    for (auto& [i, vs] : by_blob) out.push_back(std::move(vs));
    return out;
}

// Lists L(v0)={1,2}, L(v1)={1,3}, L(v2)={2,3}, L(v3)={1,4}, L(v4)={2,4},
// L(v5)={3,4} and L(s_i)={5,6} on a truncation of the h_rigid gadget.
inline ListAssignment core_obstruction_lists(const FiniteGraph& h) {
    static const std::map<std::string, std::vector<ColorId>> core = {
        {"v0", {1, 2}}, {"v1", {1, 3}}, {"v2", {2, 3}},
        {"v3", {1, 4}}, {"v4", {2, 4}}, {"v5", {3, 4}},
    };
    std::vector<std::vector<ColorId>> lists(h.order());
    std::size_t core_seen = 0;
    for (VertexId v = 0; v < h.order(); ++v) {
        const std::string& s = h.label(v);
        if (auto it = core.find(s); it != core.end()) {
            lists[v] = it->second;
            ++core_seen;
        } else if (s.size() >= 2 && s[0] == 's' &&
                   s.find_first_not_of("0123456789", 1) == std::string::npos) {
            lists[v] = {5, 6};
        } else {
            throw PreconditionError("vertex '" + s + "' is not a vertex of the h gadget");
        }
    }
    if (core_seen != core.size()) {
        throw PreconditionError("graph does not contain the core v0..v5 of the h gadget");
    }
    return ListAssignment(std::move(lists));
}

}  // namespace symcolor
