#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symcolor/automorphism.hpp"
#include "symcolor/coloring.hpp"
#include "symcolor/graph.hpp"

namespace symcolor {

enum class Notion { proper_vertex, proper_edge, total, odd, nd_vertex, nd_edge };

inline const char* to_string(Notion n) {
    switch (n) {
        case Notion::proper_vertex: return "proper-vertex";
        case Notion::proper_edge: return "proper-edge";
        case Notion::total: return "total";
        case Notion::odd: return "odd";
        case Notion::nd_vertex: return "nd-vertex";
        case Notion::nd_edge: return "nd-edge";
    }
    return "?";
}

inline std::optional<Notion> notion_from_string(const std::string& s) {
    for (Notion n : {Notion::proper_vertex, Notion::proper_edge, Notion::total, Notion::odd,
                     Notion::nd_vertex, Notion::nd_edge}) {
        if (s == to_string(n)) return n;
    }
    return std::nullopt;
}

inline ColoringKind required_kind(Notion n) {
    switch (n) {
        case Notion::proper_vertex:
        case Notion::odd:
        case Notion::nd_vertex: return ColoringKind::vertex;
        case Notion::proper_edge:
        case Notion::nd_edge: return ColoringKind::edge;
        case Notion::total: return ColoringKind::total;
    }
    return ColoringKind::vertex;
}

// Index into an AutomorphismSet's member list.
struct PermutationIndex {
    std::size_t index = 0;
    bool operator==(const PermutationIndex&) const = default;
};

using Site = std::variant<VertexId, Edge, PermutationIndex>;

inline std::string to_string(const Site& s) {
    if (const auto* v = std::get_if<VertexId>(&s)) return "vertex " + std::to_string(*v);
    if (const auto* e = std::get_if<Edge>(&s)) return "edge " + to_string(*e);
    return "automorphism #" + std::to_string(std::get<PermutationIndex>(s).index);
}

struct Violation {
    Site site;
    std::string reason;
};

struct VerificationReport {
    std::vector<Violation> violations;

    bool valid() const noexcept { return violations.empty(); }

    void add(Site site, std::string reason) {
        violations.push_back(Violation{std::move(site), std::move(reason)});
    }
    void append(const VerificationReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

namespace detail {

inline void check_proper_vertex(const FiniteGraph& g, const Coloring& c, VerificationReport& r) {
    for (const Edge& e : g.edges()) {
        if (c.vertex[e.u] == c.vertex[e.v]) {
            r.add(e, "endpoints share color " + std::to_string(c.vertex[e.u]));
        }
    }
}

inline void check_proper_edge(const FiniteGraph& g, const Coloring& c, VerificationReport& r) {
    for (VertexId v = 0; v < g.order(); ++v) {
        std::map<ColorId, Edge> seen;
        for (VertexId y : g.neighbors(v)) {
            Edge e(v, y);
            ColorId col = c.at(e);
            auto [it, fresh] = seen.emplace(col, e);
            if (!fresh) {
                r.add(e, "shares color " + std::to_string(col) + " with edge " +
                             to_string(it->second) + " at vertex " + std::to_string(v));
            }
        }
    }
}

inline void check_edge_vs_endpoints(const FiniteGraph& g, const Coloring& c,
                                    VerificationReport& r) {
    for (const Edge& e : g.edges()) {
        ColorId col = c.at(e);
        if (col == c.vertex[e.u] || col == c.vertex[e.v]) {
            r.add(e, "edge color " + std::to_string(col) + " repeats an endpoint color");
        }
    }
}

}  // namespace detail

// Checks one structural coloring notion. ND notions are only evaluated on
// proper input: an improper coloring reports its properness violations and
// nothing else. Isolated vertices never violate the odd condition.
inline VerificationReport verify_structural(const FiniteGraph& g, const Coloring& c,
                                            Notion notion) {
    if (c.kind != required_kind(notion)) {
        throw DomainError(std::string("notion ") + to_string(notion) + " needs a " +
                          to_string(required_kind(notion)) + " coloring, got " +
                          to_string(c.kind));
    }
    check_domain(g, c);
    VerificationReport r;
    switch (notion) {
        case Notion::proper_vertex:
            detail::check_proper_vertex(g, c, r);
            break;
        case Notion::proper_edge:
            detail::check_proper_edge(g, c, r);
            break;
        case Notion::total:
            detail::check_proper_vertex(g, c, r);
            detail::check_proper_edge(g, c, r);
            detail::check_edge_vs_endpoints(g, c, r);
            break;
        case Notion::odd:
            detail::check_proper_vertex(g, c, r);
            for (VertexId v = 0; v < g.order(); ++v) {
                if (g.degree(v) == 0) continue;
                std::map<ColorId, std::size_t> mult;
                for (VertexId y : g.neighbors(v)) ++mult[c.vertex[y]];
                bool odd = std::any_of(mult.begin(), mult.end(),
                                       [](const auto& kv) { return kv.second % 2 == 1; });
                if (!odd) r.add(v, "every neighbor color occurs an even number of times");
            }
            break;
        case Notion::nd_vertex:
            detail::check_proper_vertex(g, c, r);
            if (!r.valid()) break;
            for (const Edge& e : g.edges()) {
                if (neighbor_palette(g, c, e.u) == neighbor_palette(g, c, e.v)) {
                    r.add(e, "endpoints see the same neighbor color set");
                }
            }
            break;
        case Notion::nd_edge:
            detail::check_proper_edge(g, c, r);
            if (!r.valid()) break;
            for (const Edge& e : g.edges()) {
                if (incident_palette(g, c, e.u) == incident_palette(g, c, e.v)) {
                    r.add(e, "endpoints see the same incident edge color set");
                }
            }
            break;
    }
    return r;
}

// Valid iff no non-identity member of `auts` preserves c.
inline VerificationReport verify_distinguishing(const FiniteGraph& g, const Coloring& c,
                                                const AutomorphismSet& auts) {
    if (auts.order() != g.order()) {
        throw DomainError("automorphism set of order " + std::to_string(auts.order()) +
                          " for a graph of order " + std::to_string(g.order()));
    }
    check_domain(g, c);
    VerificationReport r;
    for (std::size_t i = 0; i < auts.size(); ++i) {
        const Permutation& p = auts[i];
        if (p.is_identity()) continue;
        if (preserves(p, c)) r.add(PermutationIndex{i}, "non-identity automorphism preserves the coloring");
    }
    return r;
}

inline VerificationReport verify_list_containment(const Coloring& c, const ListAssignment& lists) {
    if (c.kind != ColoringKind::vertex) {
        throw DomainError("list containment needs a vertex coloring");
    }
    if (c.vertex.size() != lists.size()) {
        throw DomainError("coloring covers " + std::to_string(c.vertex.size()) +
                          " vertices, lists cover " + std::to_string(lists.size()));
    }
    VerificationReport r;
    for (VertexId v = 0; v < c.vertex.size(); ++v) {
        if (!lists.contains(v, c.vertex[v])) {
            r.add(v, "color " + std::to_string(c.vertex[v]) + " is not in the list");
        }
    }
    return r;
}

}  // namespace symcolor
