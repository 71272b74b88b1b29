#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "symcolor/automorphism.hpp"
#include "symcolor/coloring.hpp"
#include "symcolor/error.hpp"
#include "symcolor/graph.hpp"
#include "symcolor/solver.hpp"
#include "symcolor/verify.hpp"

namespace symcolor {

// Pair given to a tree child: (color of the edge to its parent, color of
// the child itself).
using ColorPair = std::pair<ColorId, ColorId>;

enum class KpwRoute {
    scheme,  // the tree-pair construction verified as is
    search,  // exact search with the same palette after every placement failed
};

struct KpwResult {
    Coloring coloring;
    std::size_t palette = 0;  // ceil(sqrt(max degree))
    KpwRoute route = KpwRoute::scheme;
    VertexId root = 0;
    VertexId ray_child = 0;  // the two root children sharing pair (1,1)
    VertexId twin = 0;
    std::size_t attempts = 0;
    std::vector<ColorPair> child_pair;  // per vertex; unused at the root
};

inline std::size_t ceil_sqrt(std::size_t x) {
    std::size_t r = 0;
    while (r * r < x) ++r;
    return r;
}

namespace detail {

// Every pair over {0..k-1} except (1,1): nonzero edge color first, then
// nonzero vertex color, then lexicographic.
inline std::vector<ColorPair> kpw_pairs(std::size_t k) {
    std::vector<ColorPair> out;
    for (ColorId e = 0; e < k; ++e) {
        for (ColorId v = 0; v < k; ++v) {
            if (e == 1 && v == 1) continue;
            out.emplace_back(e, v);
        }
    }
    std::sort(out.begin(), out.end(), [](const ColorPair& a, const ColorPair& b) {
        auto key = [](const ColorPair& p) { return std::make_tuple(p.first == 0, p.second == 0, p.first, p.second); };
        return key(a) < key(b);
    });
    return out;
}

// One placement attempt with `ray` and `twin` as the (1,1) root children.
inline std::optional<KpwResult> kpw_attempt(const FiniteGraph& g, const BfsTree& t, std::size_t k,
                                            VertexId ray, VertexId twin) {
    const std::vector<ColorPair> pairs = kpw_pairs(k);
    KpwResult r;
    r.palette = k;
    r.root = t.root;
    r.ray_child = ray;
    r.twin = twin;
    r.child_pair.assign(g.order(), ColorPair{0, 0});

    std::vector<std::vector<VertexId>> children(g.order());
    for (VertexId x : t.order) {
        if (x != t.root) children[t.parent[x]].push_back(x);
    }

    // Root children: the twin pair, then the others in visit order.
    std::size_t next = 0;
    for (VertexId c : children[t.root]) {
        if (c == ray || c == twin) {
            r.child_pair[c] = {1, 1};
        } else {
            if (next == pairs.size()) return std::nullopt;
            r.child_pair[c] = pairs[next++];
        }
    }
    for (VertexId x : t.order) {
        if (x == t.root) continue;
        if (children[x].size() > pairs.size()) return std::nullopt;
        for (std::size_t i = 0; i < children[x].size(); ++i) r.child_pair[children[x][i]] = pairs[i];
    }
    // The twins must differ below: if they have equally many children, give
    // the twin's last child the next unused pair.
    if (children[ray].size() == children[twin].size() && !children[twin].empty()) {
        const std::size_t m = children[twin].size();
        if (m == pairs.size()) return std::nullopt;
        r.child_pair[children[twin].back()] = pairs[m];
    }

    Coloring& c = r.coloring;
    c.kind = ColoringKind::total;
    c.vertex.assign(g.order(), 0);
    for (const Edge& e : g.edges()) c.edge[e] = 0;
    for (VertexId x : t.order) {
        if (x == t.root) continue;
        c.edge[Edge(x, t.parent[x])] = r.child_pair[x].first;
        c.vertex[x] = r.child_pair[x].second;
    }
    return r;
}

}  // namespace detail

// Total coloring with ceil(sqrt(max degree)) colors that no non-identity
// automorphism preserves (properness is not required). Built on the BFS
// tree of the least-id maximum-degree vertex; each tree child is colored by
// a pair (parent edge, child) with siblings getting distinct pairs, and the
// pair (1,1) used exactly on two root children. Each placement is verified
// against Aut(g); other root-child placements are tried in turn, and an
// exact search with the same palette is the last resort.
inline KpwResult kpw_total_distinguishing(const FiniteGraph& g, const AutomorphismOptions& aut_options = {}) {
    if (g.order() < 3) throw PreconditionError("kpw construction needs order >= 3");
    const std::size_t delta = max_degree(g);
    if (delta < 2) throw PreconditionError("kpw construction needs max degree >= 2");
    if (!is_connected(g)) throw PreconditionError("kpw construction needs a connected graph");

    VertexId root = 0;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (g.degree(v) == delta) {
            root = v;
            break;
        }
    }
    const BfsTree t = bfs_tree(g, root);
    const std::size_t k = ceil_sqrt(delta);
    const AutomorphismSet auts = enumerate_automorphisms(g, aut_options);
    const std::vector<VertexId> root_children = t.children(root);

    // Ray child: root child above the deepest, then least-id, vertex.
    VertexId deepest = root;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (t.depth[v] > t.depth[deepest]) deepest = v;
    }
    VertexId ray = deepest;
    while (t.parent[ray] != root) ray = t.parent[ray];
    VertexId twin = root_children.front() == ray ? root_children[1] : root_children.front();

    std::vector<std::pair<VertexId, VertexId>> placements = {{ray, twin}};
    for (std::size_t i = 0; i < root_children.size(); ++i) {
        for (std::size_t j = 0; j < root_children.size(); ++j) {
            if (i == j) continue;
            std::pair<VertexId, VertexId> p{root_children[i], root_children[j]};
            if (p != placements.front()) placements.push_back(p);
        }
    }

    std::size_t attempts = 0;
    for (const auto& [a, b] : placements) {
        ++attempts;
        std::optional<KpwResult> r = detail::kpw_attempt(g, t, k, a, b);
        if (!r) continue;
        if (verify_distinguishing(g, r->coloring, auts).valid()) {
            r->attempts = attempts;
            return *r;
        }
    }

    SolverOptions options;
    options.automorphisms = aut_options;
    SearchOutcome found = solve_at(g, Parameter::d_total, k, options);
    if (!found.coloring) {
        throw PreconditionError("no distinguishing total coloring with " + std::to_string(k) +
                                " colors exists");
    }
    KpwResult r;
    r.coloring = std::move(*found.coloring);
    r.palette = k;
    r.route = KpwRoute::search;
    r.root = root;
    r.ray_child = ray;
    r.twin = twin;
    r.attempts = attempts + 1;
    return r;
}

}  // namespace symcolor
