#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "symcolor/error.hpp"
#include "symcolor/graph.hpp"

namespace symcolor {

// Colors are naturals; ascending numeric order is the canonical
// well-ordering of every palette.
using ColorId = std::uint32_t;

enum class ColoringKind { vertex, edge, total };

inline const char* to_string(ColoringKind k) {
    switch (k) {
        case ColoringKind::vertex: return "vertex";
        case ColoringKind::edge: return "edge";
        case ColoringKind::total: return "total";
    }
    return "?";
}

inline bool colors_vertices(ColoringKind k) { return k != ColoringKind::edge; }
inline bool colors_edges(ColoringKind k) { return k != ColoringKind::vertex; }

// A vertex, edge or total coloring. `vertex` is indexed by VertexId and is
// empty for edge colorings; `edge` is keyed by canonical (min, max) pairs
// and is empty for vertex colorings.
struct Coloring {
    ColoringKind kind = ColoringKind::vertex;
    std::vector<ColorId> vertex;
    std::map<Edge, ColorId> edge;

    static Coloring of_vertices(std::vector<ColorId> colors) {
        Coloring c;
        c.kind = ColoringKind::vertex;
        c.vertex = std::move(colors);
        return c;
    }

    ColorId at(VertexId v) const { return vertex.at(v); }
    ColorId at(const Edge& e) const {
        auto it = edge.find(e);
        if (it == edge.end()) throw DomainError("edge " + to_string(e) + " is uncolored");
        return it->second;
    }

    // Distinct colors used anywhere.
    std::set<ColorId> palette() const {
        std::set<ColorId> out(vertex.begin(), vertex.end());
        for (const auto& [e, c] : edge) out.insert(c);
        return out;
    }

    bool operator==(const Coloring&) const = default;
};

// Throws DomainError unless the coloring covers exactly the elements of g
// that its kind colors.
inline void check_domain(const FiniteGraph& g, const Coloring& c) {
    if (colors_vertices(c.kind)) {
        if (c.vertex.size() != g.order()) {
            throw DomainError("vertex coloring covers " + std::to_string(c.vertex.size()) +
                              " vertices, graph has " + std::to_string(g.order()));
        }
    } else if (!c.vertex.empty()) {
        throw DomainError("edge coloring carries vertex colors");
    }
    if (colors_edges(c.kind)) {
        if (c.edge.size() != g.size()) {
            throw DomainError("edge coloring covers " + std::to_string(c.edge.size()) +
                              " edges, graph has " + std::to_string(g.size()));
        }
        for (const auto& [e, col] : c.edge) {
            if (!g.edge_index(e.u, e.v)) {
                throw DomainError("colored pair " + to_string(e) + " is not an edge");
            }
        }
    } else if (!c.edge.empty()) {
        throw DomainError("vertex coloring carries edge colors");
    }
}

// Color sets {f(y) : y in N(v)}.
inline std::set<ColorId> neighbor_palette(const FiniteGraph& g, const Coloring& c, VertexId v) {
    std::set<ColorId> out;
    for (VertexId y : g.neighbors(v)) out.insert(c.at(y));
    return out;
}

// Color sets {f(e) : e incident to v}.
inline std::set<ColorId> incident_palette(const FiniteGraph& g, const Coloring& c, VertexId v) {
    std::set<ColorId> out;
    for (VertexId y : g.neighbors(v)) out.insert(c.at(Edge(v, y)));
    return out;
}

// Per-vertex lists of admissible colors, all of size k.
class ListAssignment {
public:
    ListAssignment() = default;

    explicit ListAssignment(std::vector<std::vector<ColorId>> lists) : lists_(std::move(lists)) {
        for (auto& l : lists_) {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }
        if (!lists_.empty()) {
            k_ = lists_.front().size();
            for (std::size_t v = 0; v < lists_.size(); ++v) {
                if (lists_[v].size() != k_) {
                    throw GraphError("list of vertex " + std::to_string(v) + " has " +
                                     std::to_string(lists_[v].size()) + " colors, expected " +
                                     std::to_string(k_));
                }
            }
        }
    }

    static ListAssignment identical(std::size_t order, std::vector<ColorId> list) {
        return ListAssignment(std::vector<std::vector<ColorId>>(order, std::move(list)));
    }

    std::size_t k() const noexcept { return k_; }
    std::size_t size() const noexcept { return lists_.size(); }
    const std::vector<ColorId>& operator[](VertexId v) const { return lists_.at(v); }
    const std::vector<std::vector<ColorId>>& lists() const noexcept { return lists_; }

    bool contains(VertexId v, ColorId c) const {
        const auto& l = lists_.at(v);
        return std::binary_search(l.begin(), l.end(), c);
    }

private:
    std::vector<std::vector<ColorId>> lists_;
    std::size_t k_ = 0;
};

}  // namespace symcolor
