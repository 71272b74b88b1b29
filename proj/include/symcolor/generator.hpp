#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symcolor/error.hpp"
#include "symcolor/graph.hpp"

namespace symcolor {

// One BFS layer of a generated graph. Edges are given by label and must join
// this layer to itself or to the previous one.
struct Layer {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;

    bool empty() const noexcept { return vertices.empty(); }
};

// Layer-by-layer description of a locally finite connected graph. Layer n
// holds exactly the vertices at distance n from the root. A finite horizon
// is expressed by the procedure returning empty layers from some depth on.
class GeneratorGraph {
public:
    using LayerProcedure = std::function<Layer(std::size_t)>;

    GeneratorGraph(std::string name, std::size_t degree_bound, LayerProcedure procedure)
        : name_(std::move(name)), degree_bound_(degree_bound), procedure_(std::move(procedure)) {}

    const std::string& name() const noexcept { return name_; }
    std::size_t degree_bound() const noexcept { return degree_bound_; }

    Layer layer(std::size_t n) const { return procedure_(n); }

    std::string root() const {
        Layer l0 = layer(0);
        if (l0.vertices.size() != 1) {
            throw GeneratorContractError(name_ + ": layer 0 must hold exactly the root");
        }
        return l0.vertices.front();
    }

private:
    std::string name_;
    std::size_t degree_bound_;
    LayerProcedure procedure_;
};

// Induced subgraph on layers 0..depth. Ids follow layer order and, inside a
// layer, emission order, so truncate(g, d) is an id-prefix of
// truncate(g, d + 1).
inline FiniteGraph truncate(const GeneratorGraph& g, std::size_t depth) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::pair<VertexId, std::size_t>> where;  // id, layer
    std::vector<std::pair<VertexId, VertexId>> edges;

    for (std::size_t n = 0; n <= depth; ++n) {
        Layer layer = g.layer(n);
        if (n == 0 && layer.vertices.size() != 1) {
            throw GeneratorContractError(g.name() + ": layer 0 must hold exactly the root");
        }
        if (layer.empty()) break;
        for (const std::string& name : layer.vertices) {
            if (where.count(name) != 0) {
                throw GeneratorContractError(g.name() + ": vertex '" + name + "' emitted twice");
            }
            where.emplace(name, std::make_pair(static_cast<VertexId>(labels.size()), n));
            labels.push_back(name);
        }
        std::vector<bool> has_parent(layer.vertices.size(), n == 0);
        const VertexId first_in_layer = static_cast<VertexId>(labels.size() - layer.vertices.size());
        for (const auto& [a, b] : layer.edges) {
            auto ia = where.find(a);
            auto ib = where.find(b);
            if (ia == where.end() || ib == where.end()) {
                throw GeneratorContractError(g.name() + ": edge {" + a + "," + b +
                                             "} skips a layer or names an unknown vertex");
            }
            auto [ua, la] = ia->second;
            auto [ub, lb] = ib->second;
            if (std::max(la, lb) != n || (la != lb && la + 1 != lb && lb + 1 != la)) {
                throw GeneratorContractError(g.name() + ": edge {" + a + "," + b +
                                             "} skips a layer");
            }
            if (la + 1 == lb) has_parent[ub - first_in_layer] = true;
            if (lb + 1 == la) has_parent[ua - first_in_layer] = true;
            edges.emplace_back(ua, ub);
        }
        for (std::size_t i = 0; i < has_parent.size(); ++i) {
            if (!has_parent[i]) {
                throw GeneratorContractError(g.name() + ": vertex '" + layer.vertices[i] +
                                             "' in layer " + std::to_string(n) +
                                             " has no neighbor in the previous layer");
            }
        }
    }

    const std::size_t order = labels.size();
    FiniteGraph out = FiniteGraph::from_edge_list(order, edges, std::move(labels));
    for (VertexId v = 0; v < out.order(); ++v) {
        if (out.degree(v) > g.degree_bound()) {
            throw GeneratorContractError(g.name() + ": vertex '" + out.label(v) +
                                         "' exceeds the degree bound");
        }
    }
    return out;
}

// Layer index of every vertex of truncate(g, depth).
inline std::vector<std::size_t> layer_of(const GeneratorGraph& g, std::size_t depth) {
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n <= depth; ++n) {
        Layer layer = g.layer(n);
        if (layer.empty()) break;
        out.insert(out.end(), layer.vertices.size(), n);
    }
    return out;
}

// Vertices of truncate(g, depth) whose whole neighborhood already lies in
// the truncation.
inline std::vector<bool> closed_vertices(const GeneratorGraph& g, std::size_t depth) {
    FiniteGraph inner = truncate(g, depth);
    FiniteGraph outer = truncate(g, depth + 1);
    std::vector<bool> closed(inner.order());
    for (VertexId v = 0; v < inner.order(); ++v) closed[v] = inner.degree(v) == outer.degree(v);
    return closed;
}

// A path root = v0, v1, ..., v_depth with v_n in layer n, ending at the
// least id of the deepest layer and following BFS parents back. Ids refer to
// truncate(g, depth).
inline std::vector<VertexId> find_ray(const GeneratorGraph& g, std::size_t depth) {
    for (std::size_t n = 0; n <= depth; ++n) {
        if (g.layer(n).empty()) {
            throw GeneratorContractError(g.name() + ": layer " + std::to_string(n) +
                                         " is empty, no ray reaches depth " +
                                         std::to_string(depth));
        }
    }
    FiniteGraph t = truncate(g, depth);
    std::vector<std::size_t> layers = layer_of(g, depth);
    VertexId tip = kNoVertex;
    for (VertexId v = 0; v < t.order(); ++v) {
        if (layers[v] == depth) {
            tip = v;
            break;
        }
    }
    BfsTree tree = bfs_tree(t, 0);
    std::vector<VertexId> ray;
    for (VertexId x = tip; x != kNoVertex; x = tree.parent[x]) ray.push_back(x);
    std::reverse(ray.begin(), ray.end());
    return ray;
}

}  // namespace symcolor
