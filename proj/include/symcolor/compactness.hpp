#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symcolor/coloring.hpp"
#include "symcolor/error.hpp"
#include "symcolor/generator.hpp"
#include "symcolor/graph.hpp"
#include "symcolor/verify.hpp"

namespace symcolor {

struct ExtensionOptions {
    std::uint64_t node_budget = 50'000'000;
};

struct ExtensionResult {
    Coloring coloring;  // of truncate(g, depth)
    std::size_t depth = 0;
    std::size_t certified_depth = 0;  // depth + lookahead
    std::uint64_t nodes = 0;
};

namespace detail {

// Backtracking over the sites of one truncation in id (= layer) order. The
// odd condition is only imposed on vertices flagged closed.
class LayeredSearch {
public:
    LayeredSearch(const FiniteGraph& g, Notion notion, std::vector<bool> closed)
        : g_(g), notion_(notion), closed_(std::move(closed)) {
        const bool vertices = notion != Notion::proper_edge && notion != Notion::nd_edge;
        const bool edges = notion == Notion::total;
        if (notion != Notion::proper_vertex && notion != Notion::odd && notion != Notion::total) {
            throw PreconditionError(std::string("layered extension does not support notion ") + to_string(notion));
        }
        vpos_.assign(g.order(), 0);
        epos_.assign(g.size(), 0);
        for (VertexId x = 0; x < g.order(); ++x) {
            if (vertices) {
                vpos_[x] = kinds_.size();
                kinds_.push_back(false);
                ids_.push_back(x);
            }
            if (edges) {
                for (VertexId y : g.neighbors(x)) {
                    if (y >= x) break;
                    std::size_t e = *g.edge_index(x, y);
                    epos_[e] = kinds_.size();
                    kinds_.push_back(true);
                    ids_.push_back(static_cast<VertexId>(e));
                }
            }
        }
        differ_.assign(kinds_.size(), {});
        odd_at_.assign(kinds_.size(), {});
        auto differ = [&](std::size_t a, std::size_t b) { differ_[std::max(a, b)].push_back(std::min(a, b)); };
        for (std::size_t e = 0; e < g.size(); ++e) {
            const Edge& ed = g.edges()[e];
            differ(vpos_[ed.u], vpos_[ed.v]);
            if (edges) {
                differ(epos_[e], vpos_[ed.u]);
                differ(epos_[e], vpos_[ed.v]);
            }
        }
        if (edges) {
            for (VertexId v = 0; v < g.order(); ++v) {
                const auto& inc = g.incident_edges(v);
                for (std::size_t i = 0; i < inc.size(); ++i) {
                    for (std::size_t j = 0; j < i; ++j) differ(epos_[inc[i]], epos_[inc[j]]);
                }
            }
        }
        if (notion == Notion::odd) {
            for (VertexId v = 0; v < g.order(); ++v) {
                if (!closed_[v] || g.degree(v) == 0) continue;
                std::size_t last = 0;
                for (VertexId y : g.neighbors(v)) last = std::max(last, vpos_[y]);
                odd_at_[last].push_back(v);
            }
        }
    }

    std::optional<Coloring> solve(std::size_t palette, std::uint64_t& budget) {
        palette_ = static_cast<ColorId>(palette);
        color_.assign(kinds_.size(), 0);
        budget_ = &budget;
        if (!dfs(0)) return std::nullopt;
        Coloring c;
        c.kind = notion_ == Notion::total ? ColoringKind::total : ColoringKind::vertex;
        c.vertex.resize(g_.order());
        for (VertexId v = 0; v < g_.order(); ++v) c.vertex[v] = color_[vpos_[v]];
        if (notion_ == Notion::total) {
            for (std::size_t e = 0; e < g_.size(); ++e) c.edge[g_.edges()[e]] = color_[epos_[e]];
        }
        return c;
    }

private:
    bool odd_ok(VertexId v) {
        parity_.assign(palette_, 0);
        for (VertexId y : g_.neighbors(v)) parity_[color_[vpos_[y]]] ^= 1;
        return std::any_of(parity_.begin(), parity_.end(), [](char p) { return p != 0; });
    }

    bool dfs(std::size_t i) {
        if (i == kinds_.size()) return true;
        for (ColorId c = 0; c < palette_; ++c) {
            if (*budget_ == 0) throw ResourceError("layered extension exceeded its node budget");
            --*budget_;
            if (std::any_of(differ_[i].begin(), differ_[i].end(), [&](std::size_t j) { return color_[j] == c; })) {
                continue;
            }
            color_[i] = c;
            if (!std::all_of(odd_at_[i].begin(), odd_at_[i].end(), [&](VertexId v) { return odd_ok(v); })) continue;
            if (dfs(i + 1)) return true;
        }
        return false;
    }

    const FiniteGraph& g_;
    Notion notion_;
    std::vector<bool> closed_;
    std::vector<bool> kinds_;
    std::vector<VertexId> ids_;
    std::vector<std::size_t> vpos_;
    std::vector<std::size_t> epos_;
    std::vector<std::vector<std::size_t>> differ_;
    std::vector<std::vector<VertexId>> odd_at_;
    ColorId palette_ = 0;
    std::vector<ColorId> color_;
    std::vector<char> parity_;
    std::uint64_t* budget_ = nullptr;
};

inline std::optional<Coloring> color_truncation(const GeneratorGraph& g, std::size_t depth, std::size_t palette,
                                                Notion notion, std::uint64_t& budget) {
    FiniteGraph t = truncate(g, depth);
    LayeredSearch search(t, notion, closed_vertices(g, depth));
    return search.solve(palette, budget);
}

}  // namespace detail

// Validity of a coloring of truncate(g, depth) on its closed part: proper
// and total constraints everywhere, the odd condition only at vertices whose
// neighborhood is complete at this depth.
inline VerificationReport verify_closed_part(const GeneratorGraph& g, std::size_t depth, const Coloring& c,
                                             Notion notion) {
    FiniteGraph t = truncate(g, depth);
    if (notion != Notion::odd) return verify_structural(t, c, notion);
    VerificationReport r = verify_structural(t, c, Notion::proper_vertex);
    const std::vector<bool> closed = closed_vertices(g, depth);
    for (const Violation& v : verify_structural(t, c, Notion::odd).violations) {
        if (const auto* x = std::get_if<VertexId>(&v.site); x && closed[*x]) r.violations.push_back(v);
    }
    return r;
}

// Restriction of a coloring of a truncation to its first `order` vertices
// (a shallower truncation, since ids follow layers).
inline Coloring restrict_to(const Coloring& c, const FiniteGraph& smaller) {
    Coloring out;
    out.kind = c.kind;
    if (colors_vertices(c.kind)) out.vertex.assign(c.vertex.begin(), c.vertex.begin() + smaller.order());
    if (colors_edges(c.kind)) {
        for (const Edge& e : smaller.edges()) out.edge[e] = c.at(e);
    }
    return out;
}

// Colors truncate(g, depth) so that the coloring provably extends to
// depth + lookahead: the deeper truncation is searched layer by layer with
// chronological backtracking and the answer is its restriction. When no
// coloring exists, the least depth without one is reported.
inline ExtensionResult compactness_extend(const GeneratorGraph& g, std::size_t palette, Notion notion,
                                          std::size_t depth, std::size_t lookahead,
                                          const ExtensionOptions& options = {}) {
    const std::size_t deep = depth + lookahead;
    std::uint64_t budget = options.node_budget;
    std::optional<Coloring> found = detail::color_truncation(g, deep, palette, notion, budget);
    if (!found) {
        for (std::size_t d = 0; d <= deep; ++d) {
            std::uint64_t probe = options.node_budget;
            if (!detail::color_truncation(g, d, palette, notion, probe)) {
                throw RefutationError(std::string("no ") + to_string(notion) + " coloring with " +
                                          std::to_string(palette) + " colors at depth " + std::to_string(d),
                                      d);
            }
        }
        throw RefutationError("no coloring at depth " + std::to_string(deep), deep);
    }
    ExtensionResult r;
    r.coloring = restrict_to(*found, truncate(g, depth));
    r.depth = depth;
    r.certified_depth = deep;
    r.nodes = options.node_budget - budget;
    return r;
}

}  // namespace symcolor
