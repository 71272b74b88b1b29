#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symcolor/coloring.hpp"
#include "symcolor/error.hpp"
#include "symcolor/graph.hpp"

namespace symcolor {

struct EliminationStep {
    ColorId removed = 0;
    std::vector<std::size_t> index;  // blobs that contained the removed color
    std::optional<ColorId> replacement;  // empty when the color was unused on blobs
};

struct EliminationResult {
    Coloring coloring;
    std::vector<EliminationStep> steps;
};

// Removes the colors in `removed` from the blob vertices of a vertex
// coloring, one color at a time in ascending order. For color c the blobs
// containing it are blocked; its vertices are recolored with the least
// color that is still used on some blob, is not being removed, occurs in no
// blocked blob and is not carried by any neighbor of a recolored vertex.
// Colors off the recolored vertices never change.
inline EliminationResult color_elimination_recolor(const FiniteGraph& g, const Coloring& f,
                                                   const std::set<ColorId>& removed,
                                                   const std::vector<std::vector<VertexId>>& blobs) {
    if (f.kind != ColoringKind::vertex) throw DomainError("recoloring needs a vertex coloring");
    check_domain(g, f);
    std::vector<bool> in_blob(g.order(), false);
    for (std::size_t i = 0; i < blobs.size(); ++i) {
        std::set<ColorId> seen;
        for (VertexId x : blobs[i]) {
            if (x >= g.order()) throw DomainError("blob vertex " + std::to_string(x) + " out of range");
            if (in_blob[x]) throw PreconditionError("vertex " + std::to_string(x) + " lies in two blobs");
            in_blob[x] = true;
            if (!seen.insert(f.vertex[x]).second) {
                throw PreconditionError("blob " + std::to_string(i) + " repeats color " +
                                        std::to_string(f.vertex[x]));
            }
        }
    }

    EliminationResult out;
    out.coloring = f;
    std::vector<ColorId>& h = out.coloring.vertex;
    for (ColorId c : removed) {
        EliminationStep step;
        step.removed = c;
        std::vector<VertexId> targets;
        std::set<ColorId> blocked;
        std::set<ColorId> on_blobs;
        for (std::size_t i = 0; i < blobs.size(); ++i) {
            bool hit = false;
            for (VertexId x : blobs[i]) {
                on_blobs.insert(h[x]);
                if (h[x] == c) {
                    hit = true;
                    targets.push_back(x);
                }
            }
            if (hit) {
                step.index.push_back(i);
                for (VertexId x : blobs[i]) blocked.insert(h[x]);
            }
        }
        if (targets.empty()) {
            out.steps.push_back(step);
            continue;
        }
        for (VertexId x : targets) {
            for (VertexId y : g.neighbors(x)) blocked.insert(h[y]);
        }
        for (ColorId b : on_blobs) {
            if (removed.count(b) || blocked.count(b)) continue;
            step.replacement = b;
            break;
        }
        if (!step.replacement) {
            throw ObstructionError("no replacement for color " + std::to_string(c) + ": every color on the " +
                                   std::to_string(blobs.size()) +
                                   " blobs meets a blocked blob; only infinitely many blob colors "
                                   "guarantee one");
        }
        for (VertexId x : targets) h[x] = *step.replacement;
        out.steps.push_back(step);
    }
    return out;
}

}  // namespace symcolor
