#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symcolor/automorphism.hpp"
#include "symcolor/coloring.hpp"
#include "symcolor/error.hpp"
#include "symcolor/graph.hpp"
#include "symcolor/verify.hpp"

namespace symcolor {

enum class RepairCase { case1, case2, case3_1a, case3_1b, case3_2 };

inline const char* to_string(RepairCase c) {
    switch (c) {
        case RepairCase::case1: return "CASE1";
        case RepairCase::case2: return "CASE2";
        case RepairCase::case3_1a: return "CASE3_1A";
        case RepairCase::case3_1b: return "CASE3_1B";
        case RepairCase::case3_2: return "CASE3_2";
    }
    return "?";
}

struct ColorChange {
    VertexId vertex = 0;
    ColorId from = 0;
    ColorId to = 0;
};

// Conditions (a)-(e) that hold for every non-root vertex carrying the root
// color after the greedy phase:
//   a: c_v in L(x)
//   b: every sibling and every neighbor of x precedes x in BFS order
//   c: |S(x)| = max degree - 2 and |N(x)| = max degree
//   d: no neighbor of x is a sibling of x
//   e: every sibling and neighbor color lies in L(x)
using ClaimConditions = std::array<bool, 5>;

inline bool all_hold(const ClaimConditions& c) {
    return std::all_of(c.begin(), c.end(), [](bool b) { return b; });
}

struct RepairRecord {
    VertexId vertex = 0;
    RepairCase kind = RepairCase::case1;
    std::vector<ColorChange> changes;
    ClaimConditions conditions{};
    std::size_t pass = 0;
};

using RepairTrace = std::vector<RepairRecord>;

// The procedure broke one of its own invariants. Carries the trace so far.
class AlgorithmFailure : public Error {
public:
    AlgorithmFailure(const std::string& what, RepairTrace trace) : Error(what), trace_(std::move(trace)) {}
    const RepairTrace& trace() const noexcept { return trace_; }

private:
    RepairTrace trace_;
};

struct ListDistinguishingResult {
    Coloring coloring;
    RepairTrace trace;
    VertexId root = 0;
    ColorId root_color = 0;
    std::vector<ColorId> root_neighbor_colors;  // c_{v_1}..c_{v_Delta} in BFS order
    std::vector<VertexId> greedy_fallbacks;     // vertices that took the root color in phase 1
    std::size_t passes = 0;                     // phase-2 scans, the last one clean
};

namespace detail {

class ListDistinguisher {
public:
    ListDistinguisher(const FiniteGraph& g, const ListAssignment& lists) : g_(g), lists_(lists) {
        if (lists.size() != g.order()) {
            throw DomainError("lists cover " + std::to_string(lists.size()) + " vertices, graph has " +
                              std::to_string(g.order()));
        }
        if (!is_connected(g)) throw PreconditionError("list-distinguishing coloring needs a connected graph");
        delta_ = max_degree(g);
        if (delta_ < 3) throw PreconditionError("list-distinguishing coloring needs max degree >= 3");
        if (lists.k() != 2 * delta_ - 1) {
            throw PreconditionError("lists must have 2*maxdeg-1 = " + std::to_string(2 * delta_ - 1) +
                                    " colors, got " + std::to_string(lists.k()));
        }
        for (VertexId v = 0; v < g.order(); ++v) {
            if (g.degree(v) == delta_) {
                root_ = v;
                break;
            }
        }
        tree_ = bfs_tree(g, root_);
        siblings_.resize(g.order());
        for (VertexId x = 0; x < g.order(); ++x) {
            if (x == root_) continue;
            for (VertexId y : g.neighbors(tree_.parent[x])) {
                if (y != x && tree_.parent[y] == tree_.parent[x]) siblings_[x].push_back(y);
            }
        }
    }

    ListDistinguishingResult run(const AutomorphismOptions& aut_options) {
        greedy();
        repair();
        Coloring c = Coloring::of_vertices(f_);
        VerificationReport report = verify_structural(g_, c, Notion::proper_vertex);
        report.append(verify_list_containment(c, lists_));
        report.append(verify_distinguishing(g_, c, enumerate_automorphisms(g_, aut_options)));
        if (!report.valid()) {
            throw AlgorithmFailure("final coloring fails verification at " +
                                       to_string(report.violations.front().site) + ": " +
                                       report.violations.front().reason,
                                   trace_);
        }
        ListDistinguishingResult r;
        r.coloring = std::move(c);
        r.trace = std::move(trace_);
        r.root = root_;
        r.root_color = cv_;
        r.root_neighbor_colors = root_neighbor_colors_;
        r.greedy_fallbacks = fallbacks_;
        r.passes = passes_;
        return r;
    }

private:
    bool before(VertexId a, VertexId b) const { return tree_.position[a] < tree_.position[b]; }

    ClaimConditions conditions(VertexId x) const {
        ClaimConditions c{};
        c[0] = lists_.contains(x, cv_);
        c[1] = std::all_of(siblings_[x].begin(), siblings_[x].end(), [&](VertexId y) { return before(y, x); }) &&
               std::all_of(g_.neighbors(x).begin(), g_.neighbors(x).end(),
                           [&](VertexId y) { return before(y, x); });
        c[2] = siblings_[x].size() + 2 == delta_ && g_.degree(x) == delta_;
        c[3] = std::none_of(siblings_[x].begin(), siblings_[x].end(), [&](VertexId y) { return g_.adjacent(x, y); });
        auto in_list = [&](VertexId y) { return lists_.contains(x, f_[y]); };
        c[4] = std::all_of(siblings_[x].begin(), siblings_[x].end(), in_list) &&
               std::all_of(g_.neighbors(x).begin(), g_.neighbors(x).end(), in_list);
        return c;
    }

    void greedy() {
        f_.assign(g_.order(), 0);
        std::vector<bool> colored(g_.order(), false);
        cv_ = lists_[root_].front();
        f_[root_] = cv_;
        colored[root_] = true;
        for (VertexId x : tree_.order) {
            if (x == root_) continue;
            std::set<ColorId> blocked = {cv_};
            for (VertexId y : siblings_[x]) {
                if (colored[y]) blocked.insert(f_[y]);
            }
            for (VertexId y : g_.neighbors(x)) {
                if (colored[y]) blocked.insert(f_[y]);
            }
            std::optional<ColorId> pick;
            for (ColorId c : lists_[x]) {
                if (!blocked.count(c)) {
                    pick = c;
                    break;
                }
            }
            if (pick) {
                f_[x] = *pick;
            } else {
                f_[x] = cv_;
                fallbacks_.push_back(x);
                if (!all_hold(conditions(x))) {
                    throw AlgorithmFailure("greedy fallback at vertex " + std::to_string(x) +
                                               " without conditions (a)-(e)",
                                           trace_);
                }
            }
            colored[x] = true;
        }
        for (VertexId y : tree_.children(root_)) root_neighbor_colors_.push_back(f_[y]);
        root_neighbor_set_.insert(root_neighbor_colors_.begin(), root_neighbor_colors_.end());
    }

    bool has_star(VertexId x) const {
        if (f_[x] != cv_ || g_.degree(x) != delta_) return false;
        std::set<ColorId> seen;
        for (VertexId y : g_.neighbors(x)) seen.insert(f_[y]);
        return seen == root_neighbor_set_;
    }

    bool proper_at(VertexId x) const {
        return std::none_of(g_.neighbors(x).begin(), g_.neighbors(x).end(),
                            [&](VertexId y) { return f_[y] == f_[x]; });
    }

    // Whether a sibling or the parent of z carries the root color.
    bool near_root_color(VertexId z) const {
        if (z == root_) return false;
        if (f_[tree_.parent[z]] == cv_) return true;
        return std::any_of(siblings_[z].begin(), siblings_[z].end(), [&](VertexId y) { return f_[y] == cv_; });
    }

    std::set<ColorId> around(VertexId z) const {
        std::set<ColorId> out;
        for (VertexId y : g_.neighbors(z)) out.insert(f_[y]);
        for (VertexId y : siblings_[z]) out.insert(f_[y]);
        return out;
    }

    void set(RepairRecord& r, VertexId v, ColorId c) {
        r.changes.push_back({v, f_[v], c});
        f_[v] = c;
    }

    RepairRecord repair_one(VertexId x) {
        RepairRecord r;
        r.vertex = x;
        r.pass = passes_;
        r.conditions = conditions(x);
        if (!all_hold(r.conditions)) {
            trace_.push_back(r);
            throw AlgorithmFailure("vertex " + std::to_string(x) + " has property (*) without conditions (a)-(e)",
                                   trace_);
        }
        const auto& sib = siblings_[x];
        std::vector<VertexId> sorted_sib(sib.begin(), sib.end());
        std::sort(sorted_sib.begin(), sorted_sib.end());

        for (VertexId w : sorted_sib) {
            if (g_.degree(w) != g_.degree(x)) {
                r.kind = RepairCase::case1;
                set(r, x, f_[w]);
                return r;
            }
        }
        for (VertexId w : sorted_sib) {
            if (g_.neighbors(w) != g_.neighbors(x)) {
                r.kind = RepairCase::case2;
                set(r, x, f_[w]);
                return r;
            }
        }
        for (VertexId z : g_.neighbors(x)) {
            if (near_root_color(z)) continue;
            const ColorId old = f_[z];
            if (!lists_.contains(z, cv_)) {
                std::set<ColorId> blocked = around(z);
                blocked.insert(old);
                std::optional<ColorId> pick;
                for (ColorId c : lists_[z]) {
                    if (!blocked.count(c)) {
                        pick = c;
                        break;
                    }
                }
                if (!pick) {
                    trace_.push_back(r);
                    throw AlgorithmFailure("no free color for vertex " + std::to_string(z), trace_);
                }
                r.kind = RepairCase::case3_1a;
                set(r, z, *pick);
                set(r, x, old);
            } else {
                r.kind = RepairCase::case3_1b;
                set(r, x, old);
                set(r, z, cv_);
            }
            return r;
        }
        for (VertexId z : g_.neighbors(x)) {
            if (z == root_ || tree_.parent[z] == root_) continue;
            std::set<ColorId> blocked = around(z);
            const ColorId old = f_[z];
            blocked.insert(old);
            std::optional<ColorId> pick;
            for (ColorId c : lists_[z]) {
                if (!blocked.count(c)) {
                    pick = c;
                    break;
                }
            }
            if (!pick) {
                trace_.push_back(r);
                throw AlgorithmFailure("L'(z) is empty at vertex " + std::to_string(z), trace_);
            }
            r.kind = RepairCase::case3_2;
            set(r, x, old);
            set(r, z, *pick);
            return r;
        }
        throw UnsupportedStructureError("vertex " + std::to_string(x) +
                                        " has property (*) and all its neighbors are root children "
                                        "(complete bipartite obstruction)");
    }

    void repair() {
        const std::size_t budget = g_.order();
        while (true) {
            ++passes_;
            if (passes_ > budget) {
                throw AlgorithmFailure("repair did not settle within " + std::to_string(budget) + " passes",
                                       trace_);
            }
            bool changed = false;
            for (VertexId x : tree_.order) {
                if (x == root_ || !has_star(x)) continue;
                RepairRecord r = repair_one(x);
                trace_.push_back(r);
                for (const ColorChange& ch : r.changes) {
                    if (!proper_at(ch.vertex)) {
                        throw AlgorithmFailure(std::string(to_string(r.kind)) + " at vertex " + std::to_string(x) +
                                                   " made vertex " + std::to_string(ch.vertex) + " improper",
                                               trace_);
                    }
                }
                if (has_star(x)) {
                    throw AlgorithmFailure(std::string(to_string(r.kind)) + " left property (*) at vertex " +
                                               std::to_string(x),
                                           trace_);
                }
                changed = true;
            }
            if (!changed) return;
        }
    }

    const FiniteGraph& g_;
    const ListAssignment& lists_;
    std::size_t delta_ = 0;
    VertexId root_ = 0;
    BfsTree tree_;
    std::vector<std::vector<VertexId>> siblings_;
    std::vector<ColorId> f_;
    ColorId cv_ = 0;
    std::vector<ColorId> root_neighbor_colors_;
    std::set<ColorId> root_neighbor_set_;
    std::vector<VertexId> fallbacks_;
    RepairTrace trace_;
    std::size_t passes_ = 0;
};

}  // namespace detail

// Proper, list-respecting, distinguishing vertex coloring from lists of
// size 2*maxdeg-1. Phase 1 colors greedily in BFS order from the least-id
// maximum-degree vertex v, keeping every vertex apart from its siblings, its
// earlier neighbors and the root color c_v, and falls back to c_v only when
// nothing is left. Phase 2 repeatedly repairs every non-root vertex that
// looks like the root (colored c_v, neighbors colored exactly like v's
// neighbors) until none is left, at most |V| scans.
inline ListDistinguishingResult list_distinguishing(const FiniteGraph& g, const ListAssignment& lists,
                                                    const AutomorphismOptions& aut_options = {}) {
    detail::ListDistinguisher run(g, lists);
    return run.run(aut_options);
}

// Lists of size k that differ from vertex to vertex: L(x) = {b, ..., b+k-1}
// with b the BFS position of x from `root`, taken modulo k.
inline ListAssignment rotated_lists(const FiniteGraph& g, VertexId root, std::size_t k) {
    BfsTree t = bfs_tree(g, root);
    std::vector<std::vector<ColorId>> lists(g.order());
    for (VertexId x = 0; x < g.order(); ++x) {
        const ColorId b = static_cast<ColorId>(t.position[x] % k);
        for (ColorId i = 0; i < k; ++i) lists[x].push_back(b + i);
    }
    return ListAssignment(std::move(lists));
}

}  // namespace symcolor
