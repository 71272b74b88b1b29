#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symcolor/automorphism.hpp"
#include "symcolor/coloring.hpp"
#include "symcolor/error.hpp"
#include "symcolor/graph.hpp"
#include "symcolor/parameter.hpp"

namespace symcolor {

struct SolverOptions {
    std::uint64_t node_budget = 4'000'000'000ULL;
    AutomorphismOptions automorphisms;
};

// Why value - 1 colors do not suffice: one completed search per refuted
// color count, starting at first_k. An empty record means value == first_k,
// the trivial lower bound.
struct MinimalityCertificate {
    std::size_t first_k = 1;
    std::vector<std::uint64_t> refuted_nodes;

    bool trivial_lower_bound() const noexcept { return refuted_nodes.empty(); }
};

struct ParameterResult {
    Parameter parameter = Parameter::chi;
    std::optional<std::size_t> value;  // nullopt: no such coloring exists at all
    std::optional<Coloring> witness;
    MinimalityCertificate minimality;
};

// Outcome of one fixed-k search.
struct SearchOutcome {
    std::optional<Coloring> coloring;
    std::uint64_t nodes = 0;
};

namespace detail {

// Backtracking over sites (vertices and/or edges) in BFS order with
// ascending colors. Disequalities are checked as soon as both sites are
// colored; odd and neighbor-distinguishing conditions as soon as every site
// they read is colored; distinguishing only on complete assignments.
class ColoringSearch {
public:
    ColoringSearch(const FiniteGraph& g, Parameter p, const AutomorphismSet* auts)
        : g_(g), traits_(traits(p)) {
        layout();
        constraints();
        if (traits_.distinguishing) {
            if (auts == nullptr) throw PreconditionError("distinguishing search needs Aut(G)");
            symmetries(*auts);
        }
    }

    std::size_t site_count() const noexcept { return sites_.size(); }

    SearchOutcome solve(std::size_t k, std::uint64_t budget) {
        k_ = static_cast<ColorId>(k);
        nodes_ = 0;
        budget_ = budget;
        color_.assign(sites_.size(), 0);
        scratch_a_.assign(k + 1, 0);
        scratch_b_.assign(k + 1, 0);
        SearchOutcome out;
        if (dfs(0)) out.coloring = materialize();
        out.nodes = nodes_;
        return out;
    }

private:
    struct SiteRef {
        bool edge;
        std::uint32_t id;
    };
    enum class CheckKind { odd, nd_vertex, nd_edge };
    struct Check {
        CheckKind kind;
        std::vector<std::size_t> a;  // positions read for the first endpoint
        std::vector<std::size_t> b;  // positions read for the second endpoint
    };

    void layout() {
        std::vector<VertexId> order = bfs_cover_order(g_);
        std::vector<std::size_t> rank(g_.order());
        for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
        vpos_.assign(g_.order(), 0);
        epos_.assign(g_.size(), 0);
        for (VertexId x : order) {
            if (colors_vertices(traits_.kind)) {
                vpos_[x] = sites_.size();
                sites_.push_back({false, x});
            }
            if (colors_edges(traits_.kind)) {
                std::vector<VertexId> earlier;
                for (VertexId y : g_.neighbors(x)) {
                    if (rank[y] < rank[x]) earlier.push_back(y);
                }
                std::sort(earlier.begin(), earlier.end(),
                          [&](VertexId a, VertexId b) { return rank[a] < rank[b]; });
                for (VertexId y : earlier) {
                    std::size_t e = *g_.edge_index(x, y);
                    epos_[e] = sites_.size();
                    sites_.push_back({true, static_cast<std::uint32_t>(e)});
                }
            }
        }
        differ_.assign(sites_.size(), {});
        checks_at_.assign(sites_.size(), {});
    }

    void must_differ(std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        differ_[b].push_back(a);
    }

    void add_check(Check c) {
        std::size_t last = 0;
        for (std::size_t p : c.a) last = std::max(last, p);
        for (std::size_t p : c.b) last = std::max(last, p);
        checks_at_[last].push_back(checks_.size());
        checks_.push_back(std::move(c));
    }

    void constraints() {
        if (!traits_.notion) return;
        const Notion n = *traits_.notion;
        const bool vertex_proper =
            n == Notion::proper_vertex || n == Notion::odd || n == Notion::nd_vertex || n == Notion::total;
        const bool edge_proper = n == Notion::proper_edge || n == Notion::nd_edge || n == Notion::total;
        if (vertex_proper) {
            for (const Edge& e : g_.edges()) must_differ(vpos_[e.u], vpos_[e.v]);
        }
        if (edge_proper) {
            for (VertexId v = 0; v < g_.order(); ++v) {
                const auto& inc = g_.incident_edges(v);
                for (std::size_t i = 0; i < inc.size(); ++i) {
                    for (std::size_t j = i + 1; j < inc.size(); ++j) {
                        must_differ(epos_[inc[i]], epos_[inc[j]]);
                    }
                }
            }
        }
        if (n == Notion::total) {
            for (std::size_t e = 0; e < g_.size(); ++e) {
                must_differ(epos_[e], vpos_[g_.edges()[e].u]);
                must_differ(epos_[e], vpos_[g_.edges()[e].v]);
            }
        }
        for (auto& d : differ_) {
            std::sort(d.begin(), d.end());
            d.erase(std::unique(d.begin(), d.end()), d.end());
        }
        if (n == Notion::odd) {
            for (VertexId v = 0; v < g_.order(); ++v) {
                if (g_.degree(v) == 0) continue;
                Check c{CheckKind::odd, {}, {}};
                for (VertexId y : g_.neighbors(v)) c.a.push_back(vpos_[y]);
                add_check(std::move(c));
            }
        } else if (n == Notion::nd_vertex) {
            for (const Edge& e : g_.edges()) {
                Check c{CheckKind::nd_vertex, {}, {}};
                for (VertexId y : g_.neighbors(e.u)) c.a.push_back(vpos_[y]);
                for (VertexId y : g_.neighbors(e.v)) c.b.push_back(vpos_[y]);
                add_check(std::move(c));
            }
        } else if (n == Notion::nd_edge) {
            for (const Edge& e : g_.edges()) {
                Check c{CheckKind::nd_edge, {}, {}};
                for (std::size_t i : g_.incident_edges(e.u)) c.a.push_back(epos_[i]);
                for (std::size_t i : g_.incident_edges(e.v)) c.b.push_back(epos_[i]);
                add_check(std::move(c));
            }
        }
    }

    void symmetries(const AutomorphismSet& auts) {
        for (const Permutation& p : auts.members()) {
            if (p.is_identity()) continue;
            std::vector<std::pair<std::size_t, std::size_t>> moved;
            for (std::size_t s = 0; s < sites_.size(); ++s) {
                std::size_t image;
                if (sites_[s].edge) {
                    const Edge& e = g_.edges()[sites_[s].id];
                    image = epos_[*g_.edge_index(p(e.u), p(e.v))];
                } else {
                    image = vpos_[p(sites_[s].id)];
                }
                if (image != s) moved.emplace_back(s, image);
            }
            moved_.push_back(std::move(moved));
        }
    }

    bool check(const Check& c) {
        switch (c.kind) {
            case CheckKind::odd: {
                std::fill(scratch_a_.begin(), scratch_a_.end(), 0);
                for (std::size_t p : c.a) scratch_a_[color_[p]] ^= 1;
                return std::any_of(scratch_a_.begin(), scratch_a_.end(), [](char x) { return x != 0; });
            }
            case CheckKind::nd_vertex:
            case CheckKind::nd_edge: {
                std::fill(scratch_a_.begin(), scratch_a_.end(), 0);
                std::fill(scratch_b_.begin(), scratch_b_.end(), 0);
                for (std::size_t p : c.a) scratch_a_[color_[p]] = 1;
                for (std::size_t p : c.b) scratch_b_[color_[p]] = 1;
                return scratch_a_ != scratch_b_;
            }
        }
        return false;
    }

    bool distinguishes() const {
        for (const auto& moved : moved_) {
            bool preserved = true;
            for (const auto& [s, t] : moved) {
                if (color_[s] != color_[t]) {
                    preserved = false;
                    break;
                }
            }
            if (preserved) return false;
        }
        return true;
    }

    bool dfs(std::size_t i) {
        if (i == sites_.size()) return !traits_.distinguishing || distinguishes();
        for (ColorId c = 0; c < k_; ++c) {
            if (++nodes_ > budget_) {
                throw ResourceError("coloring search exceeded its node budget", 0);
            }
            bool ok = std::none_of(differ_[i].begin(), differ_[i].end(),
                                   [&](std::size_t j) { return color_[j] == c; });
            if (!ok) continue;
            color_[i] = c;
            for (std::size_t ci : checks_at_[i]) {
                if (!check(checks_[ci])) {
                    ok = false;
                    break;
                }
            }
            if (ok && dfs(i + 1)) return true;
        }
        return false;
    }

    Coloring materialize() const {
        Coloring out;
        out.kind = traits_.kind;
        if (colors_vertices(traits_.kind)) {
            out.vertex.resize(g_.order());
            for (VertexId v = 0; v < g_.order(); ++v) out.vertex[v] = color_[vpos_[v]];
        }
        if (colors_edges(traits_.kind)) {
            for (std::size_t e = 0; e < g_.size(); ++e) out.edge[g_.edges()[e]] = color_[epos_[e]];
        }
        return out;
    }

    const FiniteGraph& g_;
    ParameterTraits traits_;
    std::vector<SiteRef> sites_;
    std::vector<std::size_t> vpos_;
    std::vector<std::size_t> epos_;
    std::vector<std::vector<std::size_t>> differ_;
    std::vector<Check> checks_;
    std::vector<std::vector<std::size_t>> checks_at_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> moved_;

    ColorId k_ = 0;
    std::uint64_t nodes_ = 0;
    std::uint64_t budget_ = 0;
    std::vector<ColorId> color_;
    std::vector<char> scratch_a_;
    std::vector<char> scratch_b_;
};

inline std::size_t site_count(const FiniteGraph& g, ColoringKind kind) {
    std::size_t n = 0;
    if (colors_vertices(kind)) n += g.order();
    if (colors_edges(kind)) n += g.size();
    return n;
}

}  // namespace detail

// Search for one coloring with colors {0..k-1} that satisfies every
// requirement of p. Returns the canonical (first found) witness.
inline SearchOutcome solve_at(const FiniteGraph& g, Parameter p, std::size_t k,
                              const SolverOptions& options = {}) {
    std::optional<AutomorphismSet> auts;
    if (traits(p).distinguishing) auts = enumerate_automorphisms(g, options.automorphisms);
    detail::ColoringSearch search(g, p, auts ? &*auts : nullptr);
    return search.solve(k, options.node_budget);
}

// Exact value of p on g by iterative deepening over k. The search stops at
// k = number of sites: a valid coloring never needs more colors than it has
// elements, so failing there means the parameter is undefined for g.
inline ParameterResult compute_parameter(const FiniteGraph& g, Parameter p,
                                         const SolverOptions& options = {}) {
    if (g.order() == 0) throw PreconditionError("parameters of the empty graph");
    const ParameterTraits t = traits(p);
    std::optional<AutomorphismSet> auts;
    if (t.distinguishing) {
        if (!is_connected(g)) {
            throw PreconditionError(std::string(to_string(p)) + " requires a connected graph");
        }
        auts = enumerate_automorphisms(g, options.automorphisms);
    }
    detail::ColoringSearch search(g, p, auts ? &*auts : nullptr);

    ParameterResult result;
    result.parameter = p;
    const std::size_t sites = search.site_count();
    result.minimality.first_k = sites == 0 ? 0 : 1;
    std::uint64_t remaining = options.node_budget;
    for (std::size_t k = result.minimality.first_k; k <= std::max<std::size_t>(sites, 1); ++k) {
        SearchOutcome out;
        try {
            out = search.solve(k, remaining);
        } catch (const ResourceError&) {
            throw ResourceError(std::string(to_string(p)) + ": node budget exhausted at k = " +
                                    std::to_string(k),
                                k == 0 ? 0 : k - 1);
        }
        remaining -= std::min(remaining, out.nodes);
        if (out.coloring) {
            result.value = k;
            result.witness = std::move(out.coloring);
            return result;
        }
        result.minimality.refuted_nodes.push_back(out.nodes);
        if (sites == 0) break;
    }
    return result;
}

// Re-runs every refutation recorded in the certificate and checks that it
// completes with the same node count and no solution.
inline bool replay_certificate(const FiniteGraph& g, const ParameterResult& r,
                               const SolverOptions& options = {}) {
    std::optional<AutomorphismSet> auts;
    if (traits(r.parameter).distinguishing) auts = enumerate_automorphisms(g, options.automorphisms);
    detail::ColoringSearch search(g, r.parameter, auts ? &*auts : nullptr);
    for (std::size_t i = 0; i < r.minimality.refuted_nodes.size(); ++i) {
        SearchOutcome out = search.solve(r.minimality.first_k + i, options.node_budget);
        if (out.coloring || out.nodes != r.minimality.refuted_nodes[i]) return false;
    }
    return true;
}

struct OracleOptions {
    std::uint64_t assignment_budget = 1ULL << 40;
};

namespace detail {

// Brute-force validity check straight from the definitions, on flat arrays:
// vertex colors vc[v], edge colors ec[edge index]. Shares no code with
// ColoringSearch.
class OracleCheck {
public:
    OracleCheck(const FiniteGraph& g, Parameter p) : g_(g), t_(traits(p)) {
        if (t_.distinguishing) {
            AutomorphismSet all = naive_automorphisms(g);
            for (const Permutation& s : all.members()) {
                if (s.is_identity()) continue;
                perms_.push_back(s);
                std::vector<std::size_t> img(g.size());
                for (std::size_t e = 0; e < g.size(); ++e) {
                    img[e] = *g.edge_index(s(g.edges()[e].u), s(g.edges()[e].v));
                }
                edge_images_.push_back(std::move(img));
            }
        }
    }

    bool valid(const ColorId* vc, const ColorId* ec, std::size_t k) const {
        if (t_.notion && !structural(*t_.notion, vc, ec, k)) return false;
        if (t_.distinguishing) {
            for (std::size_t i = 0; i < perms_.size(); ++i) {
                bool same = true;
                if (vc != nullptr) {
                    for (VertexId v = 0; v < g_.order() && same; ++v) {
                        same = vc[perms_[i](v)] == vc[v];
                    }
                }
                if (ec != nullptr) {
                    for (std::size_t e = 0; e < g_.size() && same; ++e) {
                        same = ec[edge_images_[i][e]] == ec[e];
                    }
                }
                if (same) return false;
            }
        }
        return true;
    }

private:
    bool proper_vertex(const ColorId* vc) const {
        for (const Edge& e : g_.edges()) {
            if (vc[e.u] == vc[e.v]) return false;
        }
        return true;
    }

    bool proper_edge(const ColorId* ec) const {
        for (VertexId v = 0; v < g_.order(); ++v) {
            const auto& inc = g_.incident_edges(v);
            for (std::size_t i = 0; i < inc.size(); ++i) {
                for (std::size_t j = 0; j < i; ++j) {
                    if (ec[inc[i]] == ec[inc[j]]) return false;
                }
            }
        }
        return true;
    }

    bool structural(Notion n, const ColorId* vc, const ColorId* ec, std::size_t k) const {
        switch (n) {
            case Notion::proper_vertex: return proper_vertex(vc);
            case Notion::proper_edge: return proper_edge(ec);
            case Notion::total: {
                if (!proper_vertex(vc) || !proper_edge(ec)) return false;
                for (std::size_t e = 0; e < g_.size(); ++e) {
                    if (ec[e] == vc[g_.edges()[e].u] || ec[e] == vc[g_.edges()[e].v]) return false;
                }
                return true;
            }
            case Notion::odd: {
                if (!proper_vertex(vc)) return false;
                std::vector<std::size_t> count(k);
                for (VertexId v = 0; v < g_.order(); ++v) {
                    if (g_.degree(v) == 0) continue;
                    std::fill(count.begin(), count.end(), 0);
                    for (VertexId y : g_.neighbors(v)) ++count[vc[y]];
                    if (std::none_of(count.begin(), count.end(), [](std::size_t c) { return c % 2 == 1; })) {
                        return false;
                    }
                }
                return true;
            }
            case Notion::nd_vertex: {
                if (!proper_vertex(vc)) return false;
                for (const Edge& e : g_.edges()) {
                    std::vector<bool> a(k), b(k);
                    for (VertexId y : g_.neighbors(e.u)) a[vc[y]] = true;
                    for (VertexId y : g_.neighbors(e.v)) b[vc[y]] = true;
                    if (a == b) return false;
                }
                return true;
            }
            case Notion::nd_edge: {
                if (!proper_edge(ec)) return false;
                for (const Edge& e : g_.edges()) {
                    std::vector<bool> a(k), b(k);
                    for (std::size_t i : g_.incident_edges(e.u)) a[ec[i]] = true;
                    for (std::size_t i : g_.incident_edges(e.v)) b[ec[i]] = true;
                    if (a == b) return false;
                }
                return true;
            }
        }
        return false;
    }

    const FiniteGraph& g_;
    ParameterTraits t_;
    std::vector<Permutation> perms_;
    std::vector<std::vector<std::size_t>> edge_images_;
};

}  // namespace detail

// Independent certifier for compute_parameter: for k = 1, 2, ... enumerate
// every assignment of k colors (vertices by id, then edges by index; no
// pruning) and test it against the definitions. Automorphisms come from the
// factorial-time enumeration. Only feasible for a handful of vertices.
inline ParameterResult oracle_parameter(const FiniteGraph& g, Parameter p,
                                        const OracleOptions& options = {}) {
    if (g.order() == 0) throw PreconditionError("parameters of the empty graph");
    const ParameterTraits t = traits(p);
    if (t.distinguishing && !is_connected(g)) {
        throw PreconditionError(std::string(to_string(p)) + " requires a connected graph");
    }
    detail::OracleCheck checker(g, p);
    const std::size_t nv = colors_vertices(t.kind) ? g.order() : 0;
    const std::size_t ne = colors_edges(t.kind) ? g.size() : 0;
    const std::size_t sites = nv + ne;

    ParameterResult result;
    result.parameter = p;
    result.minimality.first_k = sites == 0 ? 0 : 1;
    std::uint64_t spent = 0;
    std::vector<ColorId> a(sites, 0);
    for (std::size_t k = result.minimality.first_k; k <= std::max<std::size_t>(sites, 1); ++k) {
        std::fill(a.begin(), a.end(), 0);
        std::uint64_t visited = 0;
        bool found = false;
        while (true) {
            ++visited;
            if (++spent > options.assignment_budget) {
                throw ResourceError(std::string(to_string(p)) +
                                        ": oracle assignment budget exhausted at k = " + std::to_string(k),
                                    k == 0 ? 0 : k - 1);
            }
            if (checker.valid(nv ? a.data() : nullptr, ne ? a.data() + nv : nullptr, k)) {
                found = true;
                break;
            }
            // Odometer, site 0 fastest.
            std::size_t i = 0;
            while (i < sites && ++a[i] == k) a[i++] = 0;
            if (i == sites) break;
        }
        if (found) {
            Coloring w;
            w.kind = t.kind;
            if (nv) w.vertex.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(nv));
            for (std::size_t e = 0; e < ne; ++e) w.edge[g.edges()[e]] = a[nv + e];
            result.value = k;
            result.witness = std::move(w);
            return result;
        }
        result.minimality.refuted_nodes.push_back(visited);
        if (sites == 0) break;
    }
    return result;
}

}  // namespace symcolor
