#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "symcolor/error.hpp"
#include "symcolor/graph.hpp"
#include "symcolor/kpw.hpp"
#include "symcolor/parameter.hpp"
#include "symcolor/solver.hpp"

namespace symcolor {

namespace detail {

// Bit i of the mask stands for the i-th pair (a, b), a < b, in
// lexicographic order.
inline std::vector<std::pair<VertexId, VertexId>> all_pairs(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) out.emplace_back(a, b);
    }
    return out;
}

inline FiniteGraph graph_of_mask(std::size_t n, std::uint64_t mask,
                                 const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1U) edges.push_back(pairs[i]);
    }
    return FiniteGraph::from_edge_list(n, edges);
}

// Least edge mask over all relabelings.
inline std::uint64_t canonical_mask(std::size_t n, std::uint64_t mask,
                                    const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    std::vector<std::vector<std::size_t>> slot(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        slot[pairs[i].first][pairs[i].second] = i;
        slot[pairs[i].second][pairs[i].first] = i;
    }
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), VertexId{0});
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t image = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (mask >> i & 1U) image |= std::uint64_t{1} << slot[perm[pairs[i].first]][perm[pairs[i].second]];
        }
        best = std::min(best, image);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace detail

// Every connected graph on 1..max_order vertices up to isomorphism, found by
// enumerating edge subsets, filtering connected ones and keeping the least
// relabeling of each. Ordered by order, then canonical edge mask.
inline std::vector<FiniteGraph> connected_graphs(std::size_t max_order) {
    if (max_order > 8) throw PreconditionError("edge-subset enumeration is limited to order 8");
    std::vector<FiniteGraph> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
        const auto pairs = detail::all_pairs(n);
        std::set<std::uint64_t> seen;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            if (pairs.size() > 0 && static_cast<std::size_t>(std::popcount(mask)) + 1 < n) continue;
            FiniteGraph g = detail::graph_of_mask(n, mask, pairs);
            if (!is_connected(g)) continue;
            seen.insert(detail::canonical_mask(n, mask, pairs));
        }
        for (std::uint64_t m : seen) out.push_back(detail::graph_of_mask(n, m, pairs));
    }
    return out;
}

// G(n, p) conditioned on connectivity by rejection.
template <class Rng>
FiniteGraph random_connected_graph(std::size_t n, double p, Rng& rng) {
    const auto pairs = detail::all_pairs(n);
    std::bernoulli_distribution coin(p);
    for (std::size_t attempt = 0; attempt < 100000; ++attempt) {
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (const auto& pr : pairs) {
            if (coin(rng)) edges.push_back(pr);
        }
        FiniteGraph g = FiniteGraph::from_edge_list(n, edges);
        if (is_connected(g)) return g;
    }
    throw ResourceError("no connected sample drawn");
}

inline bool is_complete(const FiniteGraph& g) {
    return g.size() == g.order() * (g.order() - 1) / 2;
}

inline bool is_cycle(const FiniteGraph& g) {
    if (g.order() < 3 || g.size() != g.order() || !is_connected(g)) return false;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 2) return false;
    }
    return true;
}

enum class BoundRule {
    brooks,  // chi <= maxdeg unless complete or an odd cycle
    vizing,  // chi' <= maxdeg + 1
    kpw,     // D'' <= ceil(sqrt(maxdeg)) for order >= 3
    odd,     // chi_o <= 2 maxdeg for maxdeg >= 1, C5 excepted
};

inline const char* to_string(BoundRule r) {
    switch (r) {
        case BoundRule::brooks: return "brooks";
        case BoundRule::vizing: return "vizing";
        case BoundRule::kpw: return "kpw";
        case BoundRule::odd: return "odd";
    }
    return "?";
}

inline std::optional<BoundRule> bound_rule_from_string(const std::string& s) {
    for (BoundRule r : {BoundRule::brooks, BoundRule::vizing, BoundRule::kpw, BoundRule::odd}) {
        if (s == to_string(r)) return r;
    }
    return std::nullopt;
}

inline Parameter rule_parameter(BoundRule r) {
    switch (r) {
        case BoundRule::brooks: return Parameter::chi;
        case BoundRule::vizing: return Parameter::chi_prime;
        case BoundRule::kpw: return Parameter::d_total;
        case BoundRule::odd: return Parameter::chi_odd;
    }
    return Parameter::chi;
}

enum class BoundStatus {
    holds,
    violation,
    exception,   // the graph is one of the rule's named exceptions
    skipped,     // the rule's hypotheses do not apply, or the order is above the declared limit
    error,       // the computation failed (budget); reported, not fatal
};

inline const char* to_string(BoundStatus s) {
    switch (s) {
        case BoundStatus::holds: return "holds";
        case BoundStatus::violation: return "violation";
        case BoundStatus::exception: return "exception";
        case BoundStatus::skipped: return "skipped";
        case BoundStatus::error: return "error";
    }
    return "?";
}

struct BoundEntry {
    std::size_t graph = 0;  // index into the corpus
    BoundRule rule = BoundRule::brooks;
    BoundStatus status = BoundStatus::holds;
    std::optional<std::size_t> value;
    std::size_t bound = 0;
    std::string note;
};

struct CorpusOptions {
    // Distinguishing rules only run on graphs up to this order.
    std::size_t distinguishing_max_order = 6;
    SolverOptions solver;
};

struct BoundReport {
    std::size_t graphs = 0;
    std::size_t distinguishing_max_order = 0;
    std::vector<BoundEntry> entries;

    std::size_t count(BoundStatus s) const {
        return static_cast<std::size_t>(
            std::count_if(entries.begin(), entries.end(), [s](const BoundEntry& e) { return e.status == s; }));
    }
    std::size_t count(BoundRule r, BoundStatus s) const {
        return static_cast<std::size_t>(std::count_if(
            entries.begin(), entries.end(), [r, s](const BoundEntry& e) { return e.rule == r && e.status == s; }));
    }
};

// Evaluates every rule on every graph of the corpus and records one entry
// per (graph, rule).
inline BoundReport bound_check_corpus(const std::vector<FiniteGraph>& corpus, const std::vector<BoundRule>& rules,
                                      const CorpusOptions& options = {}) {
    BoundReport report;
    report.graphs = corpus.size();
    report.distinguishing_max_order = options.distinguishing_max_order;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const FiniteGraph& g = corpus[i];
        if (!is_connected(g)) throw PreconditionError("corpus graph " + std::to_string(i) + " is disconnected");
        const std::size_t delta = max_degree(g);
        for (BoundRule rule : rules) {
            BoundEntry e;
            e.graph = i;
            e.rule = rule;
            switch (rule) {
                case BoundRule::brooks:
                    e.bound = delta;
                    if (is_complete(g)) {
                        e.status = BoundStatus::exception;
                        e.note = "complete graph";
                    } else if (is_cycle(g) && g.order() % 2 == 1) {
                        e.status = BoundStatus::exception;
                        e.note = "odd cycle";
                    }
                    break;
                case BoundRule::vizing: e.bound = delta + 1; break;
                case BoundRule::kpw:
                    e.bound = ceil_sqrt(delta);
                    if (g.order() < 3) {
                        e.status = BoundStatus::skipped;
                        e.note = "order < 3";
                    } else if (g.order() > options.distinguishing_max_order) {
                        e.status = BoundStatus::skipped;
                        e.note = "above distinguishing order limit";
                    }
                    break;
                case BoundRule::odd:
                    e.bound = 2 * delta;
                    if (delta == 0) {
                        e.status = BoundStatus::skipped;
                        e.note = "max degree 0";
                    } else if (is_cycle(g) && g.order() == 5) {
                        e.status = BoundStatus::exception;
                        e.note = "C5";
                    }
                    break;
            }
            if (e.status == BoundStatus::skipped) {
                report.entries.push_back(e);
                continue;
            }
            try {
                e.value = compute_parameter(g, rule_parameter(rule), options.solver).value;
                if (e.status == BoundStatus::holds && (!e.value || *e.value > e.bound)) {
                    e.status = BoundStatus::violation;
                }
            } catch (const ResourceError& err) {
                e.status = BoundStatus::error;
                e.note = err.what();
            }
            report.entries.push_back(e);
        }
    }
    return report;
}

}  // namespace symcolor
