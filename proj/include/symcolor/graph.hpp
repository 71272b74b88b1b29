#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symcolor/error.hpp"

namespace symcolor {

// Vertex ids are positions in generation order; ascending id is the
// canonical well-ordering of the vertex set.
using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Undirected edge with canonical orientation u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {}

    auto operator<=>(const Edge&) const = default;

    VertexId other(VertexId x) const { return x == u ? v : u; }
    bool touches(VertexId x) const { return x == u || x == v; }
};

inline std::string to_string(const Edge& e) {
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

// Immutable simple undirected graph.
class FiniteGraph {
public:
    FiniteGraph() = default;

    // Builds the symmetric closure of `edges`. Duplicate pairs collapse.
    // Throws GraphError on loops and out-of-range ids. Labels default to
    // decimal ids; a non-empty `labels` must have exactly `order` entries.
    static FiniteGraph from_edge_list(std::size_t order,
                                      std::span<const std::pair<VertexId, VertexId>> edges,
                                      std::vector<std::string> labels = {}) {
        FiniteGraph g;
        g.adj_.assign(order, {});
        for (const auto& [a, b] : edges) {
            if (a >= order || b >= order) {
                throw GraphError("vertex out of range in pair {" + std::to_string(a) + "," +
                                 std::to_string(b) + "} for order " + std::to_string(order));
            }
            if (a == b) {
                throw GraphError("loop at " + std::to_string(a));
            }
            g.edges_.emplace_back(a, b);
        }
        std::sort(g.edges_.begin(), g.edges_.end());
        g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

        for (const Edge& e : g.edges_) {
            g.adj_[e.u].push_back(e.v);
            g.adj_[e.v].push_back(e.u);
        }
        g.incident_.assign(order, {});
        for (VertexId x = 0; x < order; ++x) {
            std::sort(g.adj_[x].begin(), g.adj_[x].end());
            g.incident_[x].reserve(g.adj_[x].size());
            for (VertexId y : g.adj_[x]) {
                g.incident_[x].push_back(g.find_edge_slow(Edge(x, y)));
            }
        }

        if (labels.empty()) {
            labels.reserve(order);
            for (std::size_t i = 0; i < order; ++i) labels.push_back(std::to_string(i));
        } else if (labels.size() != order) {
            throw GraphError("label count " + std::to_string(labels.size()) +
                             " does not match order " + std::to_string(order));
        }
        g.labels_ = std::move(labels);
        return g;
    }

    static FiniteGraph from_edge_list(std::size_t order,
                                      std::initializer_list<std::pair<VertexId, VertexId>> edges,
                                      std::vector<std::string> labels = {}) {
        std::vector<std::pair<VertexId, VertexId>> v(edges);
        return from_edge_list(order, v, std::move(labels));
    }

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }

    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_.at(v); }
    std::size_t degree(VertexId v) const { return adj_.at(v).size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }

    // Edge indices incident to v, aligned with neighbors(v).
    const std::vector<std::size_t>& incident_edges(VertexId v) const { return incident_.at(v); }

    bool adjacent(VertexId a, VertexId b) const {
        const auto& n = adj_.at(a);
        return std::binary_search(n.begin(), n.end(), b);
    }

    std::optional<std::size_t> edge_index(VertexId a, VertexId b) const {
        if (a >= order() || b >= order()) return std::nullopt;
        const auto& n = adj_[a];
        auto it = std::lower_bound(n.begin(), n.end(), b);
        if (it == n.end() || *it != b) return std::nullopt;
        return incident_[a][static_cast<std::size_t>(it - n.begin())];
    }

    const std::string& label(VertexId v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::optional<VertexId> find_label(const std::string& name) const {
        auto it = std::find(labels_.begin(), labels_.end(), name);
        if (it == labels_.end()) return std::nullopt;
        return static_cast<VertexId>(it - labels_.begin());
    }

    // Same vertex count, edge set and labels.
    bool operator==(const FiniteGraph& other) const {
        return adj_.size() == other.adj_.size() && edges_ == other.edges_ &&
               labels_ == other.labels_;
    }

private:
    std::size_t find_edge_slow(const Edge& e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        return static_cast<std::size_t>(it - edges_.begin());
    }

    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::vector<std::size_t>> incident_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

inline std::size_t max_degree(const FiniteGraph& g) {
    std::size_t best = 0;
    for (VertexId v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

// Breadth-first spanning tree. parent[root] == kNoVertex.
struct BfsTree {
    VertexId root = 0;
    std::vector<VertexId> parent;
    std::vector<VertexId> order;     // visit order
    std::vector<std::size_t> depth;  // distance from root
    std::vector<std::size_t> position;  // index of each vertex in `order`

    std::vector<VertexId> children(VertexId v) const {
        std::vector<VertexId> out;
        for (VertexId x : order) {
            if (parent[x] == v) out.push_back(x);
        }
        return out;
    }

    bool is_tree_edge(const Edge& e) const {
        return parent[e.u] == e.v || parent[e.v] == e.u;
    }
};

namespace detail {

// Ascending-id BFS over the component of `root`; unreached vertices keep
// parent == kNoVertex and depth == max.
inline BfsTree bfs_component(const FiniteGraph& g, VertexId root) {
    BfsTree t;
    t.root = root;
    t.parent.assign(g.order(), kNoVertex);
    t.depth.assign(g.order(), std::numeric_limits<std::size_t>::max());
    t.position.assign(g.order(), std::numeric_limits<std::size_t>::max());
    std::queue<VertexId> queue;
    t.depth[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop();
        t.position[x] = t.order.size();
        t.order.push_back(x);
        for (VertexId y : g.neighbors(x)) {
            if (t.depth[y] == std::numeric_limits<std::size_t>::max()) {
                t.depth[y] = t.depth[x] + 1;
                t.parent[y] = x;
                queue.push(y);
            }
        }
    }
    return t;
}

}  // namespace detail

// Neighbors are expanded in ascending id order, so the tree and the visit
// order are fully determined by (g, root).
inline BfsTree bfs_tree(const FiniteGraph& g, VertexId root) {
    if (root >= g.order()) {
        throw GraphError("root " + std::to_string(root) + " out of range");
    }
    BfsTree t = detail::bfs_component(g, root);
    if (t.order.size() != g.order()) {
        for (VertexId v = 0; v < g.order(); ++v) {
            if (t.position[v] == std::numeric_limits<std::size_t>::max()) {
                throw DisconnectedError("graph is disconnected: vertex " + std::to_string(v) +
                                        " is unreachable from " + std::to_string(root));
            }
        }
    }
    return t;
}

inline bool is_connected(const FiniteGraph& g) {
    if (g.order() == 0) return true;
    return detail::bfs_component(g, 0).order.size() == g.order();
}

// Distance layers from root; element n holds {v : d(root, v) = n} sorted.
inline std::vector<std::vector<VertexId>> levels(const FiniteGraph& g, VertexId root) {
    BfsTree t = bfs_tree(g, root);
    std::vector<std::vector<VertexId>> out;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (t.depth[v] >= out.size()) out.resize(t.depth[v] + 1);
        out[t.depth[v]].push_back(v);
    }
    return out;
}

// Visit order over all components: BFS from 0, then from the least
// unvisited vertex, and so on.
inline std::vector<VertexId> bfs_cover_order(const FiniteGraph& g) {
    std::vector<VertexId> out;
    std::vector<bool> seen(g.order(), false);
    for (VertexId s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        BfsTree t = detail::bfs_component(g, s);
        for (VertexId x : t.order) {
            seen[x] = true;
            out.push_back(x);
        }
    }
    return out;
}

}  // namespace symcolor
