#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "symcolor/coloring.hpp"
#include "symcolor/error.hpp"
#include "symcolor/graph.hpp"

namespace symcolor {

// Bijection on 0..n-1 stored by images.
struct Permutation {
    std::vector<VertexId> images;

    static Permutation identity(std::size_t n) {
        Permutation p;
        p.images.resize(n);
        std::iota(p.images.begin(), p.images.end(), VertexId{0});
        return p;
    }

    std::size_t size() const noexcept { return images.size(); }
    VertexId operator()(VertexId v) const { return images[v]; }

    bool is_identity() const {
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (images[i] != i) return false;
        }
        return true;
    }

    // (a * b)(v) = a(b(v))
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        Permutation out;
        out.images.resize(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) out.images[i] = a.images[b.images[i]];
        return out;
    }

    Permutation inverse() const {
        Permutation out;
        out.images.resize(size());
        for (std::size_t i = 0; i < size(); ++i) out.images[images[i]] = static_cast<VertexId>(i);
        return out;
    }

    auto operator<=>(const Permutation&) const = default;
};

inline bool is_automorphism(const FiniteGraph& g, const Permutation& p) {
    if (p.size() != g.order()) return false;
    std::vector<bool> hit(p.size(), false);
    for (VertexId img : p.images) {
        if (img >= p.size() || hit[img]) return false;
        hit[img] = true;
    }
    // Injective on edges and |E| finite, so edges onto edges suffices.
    for (const Edge& e : g.edges()) {
        if (!g.adjacent(p(e.u), p(e.v))) return false;
    }
    return true;
}

// Aut(G) as an explicit, sorted member list. The identity is members[0].
class AutomorphismSet {
public:
    AutomorphismSet() = default;
    AutomorphismSet(std::size_t order, std::vector<Permutation> members)
        : order_(order), members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    std::size_t order() const noexcept { return order_; }
    std::size_t size() const noexcept { return members_.size(); }
    const std::vector<Permutation>& members() const noexcept { return members_; }
    const Permutation& operator[](std::size_t i) const { return members_.at(i); }

    bool contains(const Permutation& p) const {
        return std::binary_search(members_.begin(), members_.end(), p);
    }

    bool trivial() const noexcept { return members_.size() <= 1; }

    bool operator==(const AutomorphismSet&) const = default;

private:
    std::size_t order_ = 0;
    std::vector<Permutation> members_;
};

struct AutomorphismOptions {
    std::size_t member_budget = 1'000'000;
};

// Equitable vertex partition: start from degrees, repeatedly split classes by
// the multiset of neighbor classes until the class count is stable. Classes
// are invariant under every automorphism.
inline std::vector<std::size_t> refine_partition(const FiniteGraph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> cls(n);
    for (VertexId v = 0; v < n; ++v) cls[v] = g.degree(v);
    std::size_t classes = 0;
    while (true) {
        std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
        for (VertexId v = 0; v < n; ++v) {
            sig[v].first = cls[v];
            for (VertexId y : g.neighbors(v)) sig[v].second.push_back(cls[y]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> rank;
        for (const auto& s : sig) rank.emplace(s, 0);
        std::size_t r = 0;
        for (auto& [key, value] : rank) value = r++;
        for (VertexId v = 0; v < n; ++v) cls[v] = rank[sig[v]];
        if (rank.size() == classes) break;
        classes = rank.size();
    }
    return cls;
}

namespace detail {

class AutSearch {
public:
    AutSearch(const FiniteGraph& g, bool refine, std::size_t budget)
        : g_(g), budget_(budget), image_(g.order(), kNoVertex), used_(g.order(), false) {
        if (refine) {
            cls_ = refine_partition(g);
        } else {
            cls_.assign(g.order(), 0);
        }
        // Map vertices in a BFS cover order so that most have an already
        // mapped neighbor when they are reached.
        order_ = bfs_cover_order(g);
    }

    std::vector<Permutation> run() {
        if (g_.order() > 0) extend(0);
        return std::move(found_);
    }

private:
    void extend(std::size_t depth) {
        if (depth == order_.size()) {
            if (found_.size() >= budget_) {
                throw ResourceError("automorphism enumeration exceeded the member budget of " +
                                    std::to_string(budget_));
            }
            found_.push_back(Permutation{image_});
            return;
        }
        const VertexId v = order_[depth];
        for (VertexId w = 0; w < g_.order(); ++w) {
            if (used_[w] || cls_[w] != cls_[v] || g_.degree(w) != g_.degree(v)) continue;
            if (!consistent(depth, v, w)) continue;
            image_[v] = w;
            used_[w] = true;
            extend(depth + 1);
            used_[w] = false;
            image_[v] = kNoVertex;
        }
    }

    bool consistent(std::size_t depth, VertexId v, VertexId w) const {
        for (std::size_t i = 0; i < depth; ++i) {
            const VertexId u = order_[i];
            if (g_.adjacent(u, v) != g_.adjacent(image_[u], w)) return false;
        }
        return true;
    }

    const FiniteGraph& g_;
    std::size_t budget_;
    std::vector<std::size_t> cls_;
    std::vector<VertexId> order_;
    std::vector<VertexId> image_;
    std::vector<bool> used_;
    std::vector<Permutation> found_;
};

}  // namespace detail

// Complete Aut(g) by backtracking over candidate images, pruned by the
// refined partition and by adjacency consistency with earlier choices.
inline AutomorphismSet enumerate_automorphisms(const FiniteGraph& g,
                                               const AutomorphismOptions& options = {}) {
    if (g.order() == 0) throw PreconditionError("automorphisms of the empty graph");
    detail::AutSearch search(g, true, options.member_budget);
    return AutomorphismSet(g.order(), search.run());
}

// The same backtracking without partition refinement: candidates are only
// filtered by degree and adjacency consistency.
inline AutomorphismSet enumerate_automorphisms_unrefined(const FiniteGraph& g,
                                                         const AutomorphismOptions& options = {}) {
    if (g.order() == 0) throw PreconditionError("automorphisms of the empty graph");
    detail::AutSearch search(g, false, options.member_budget);
    return AutomorphismSet(g.order(), search.run());
}

// Oracle: every permutation of V filtered by is_automorphism. Factorial time.
inline AutomorphismSet naive_automorphisms(const FiniteGraph& g) {
    if (g.order() > 10) throw PreconditionError("naive enumeration is limited to order 10");
    std::vector<Permutation> out;
    Permutation p = Permutation::identity(g.order());
    do {
        if (is_automorphism(g, p)) out.push_back(p);
    } while (std::next_permutation(p.images.begin(), p.images.end()));
    return AutomorphismSet(g.order(), std::move(out));
}

inline std::vector<std::vector<VertexId>> orbits(const AutomorphismSet& a) {
    std::vector<std::vector<VertexId>> out;
    std::vector<bool> seen(a.order(), false);
    for (VertexId v = 0; v < a.order(); ++v) {
        if (seen[v]) continue;
        std::set<VertexId> orbit;
        for (const Permutation& p : a.members()) orbit.insert(p(v));
        for (VertexId x : orbit) seen[x] = true;
        out.emplace_back(orbit.begin(), orbit.end());
    }
    return out;
}

inline std::vector<VertexId> fixed_vertices(const AutomorphismSet& a) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < a.order(); ++v) {
        bool fixed = std::all_of(a.members().begin(), a.members().end(),
                                 [v](const Permutation& p) { return p(v) == v; });
        if (fixed) out.push_back(v);
    }
    return out;
}

// Whether sigma maps every colored element to an element of the same color.
// Vertex colors are compared for vertex/total kinds, edge colors for
// edge/total kinds.
inline bool preserves(const Permutation& sigma, const Coloring& c) {
    if (colors_vertices(c.kind)) {
        if (sigma.size() != c.vertex.size()) {
            throw DomainError("permutation of size " + std::to_string(sigma.size()) +
                              " against a coloring of " + std::to_string(c.vertex.size()) +
                              " vertices");
        }
        for (VertexId v = 0; v < c.vertex.size(); ++v) {
            if (c.vertex[sigma(v)] != c.vertex[v]) return false;
        }
    }
    if (colors_edges(c.kind)) {
        for (const auto& [e, col] : c.edge) {
            if (e.u >= sigma.size() || e.v >= sigma.size()) {
                throw DomainError("edge " + to_string(e) + " outside the permutation domain");
            }
            auto it = c.edge.find(Edge(sigma(e.u), sigma(e.v)));
            if (it == c.edge.end()) {
                throw DomainError("image of edge " + to_string(e) + " is not colored");
            }
            if (it->second != col) return false;
        }
    }
    return true;
}

}  // namespace symcolor
