#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "symcolor/automorphism.hpp"
#include "symcolor/coloring.hpp"
#include "symcolor/compactness.hpp"
#include "symcolor/corpus.hpp"
#include "symcolor/error.hpp"
#include "symcolor/graph.hpp"
#include "symcolor/kpw.hpp"
#include "symcolor/list_distinguishing.hpp"
#include "symcolor/recolor.hpp"
#include "symcolor/solver.hpp"
#include "symcolor/verify.hpp"

namespace symcolor {

using Json = nlohmann::json;

// ---- graphs ----

inline Json to_json(const FiniteGraph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    Json labels = Json::object();
    for (VertexId v = 0; v < g.order(); ++v) labels[std::to_string(v)] = g.label(v);
    return {{"order", g.order()}, {"edges", edges}, {"labels", labels}};
}

namespace detail {

inline std::size_t vertex_key(const std::string& key, std::size_t order, const char* what) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(key, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != key.size() || key.empty()) throw SchemaError(std::string(what) + " key '" + key + "' is not a vertex id");
    if (v >= order) throw SchemaError(std::string(what) + " key " + key + " is out of range");
    return v;
}

template <class F>
auto schema_guard(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw SchemaError(std::string("schema mismatch: ") + e.what());
    } catch (const GraphError& e) {
        throw SchemaError(std::string("schema mismatch: ") + e.what());
    }
}

}  // namespace detail

inline FiniteGraph graph_from_json(const Json& j) {
    return detail::schema_guard([&] {
        const std::size_t order = j.at("order").get<std::size_t>();
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (const Json& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw SchemaError("schema mismatch: edge entries are [u, v] pairs");
            edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
        }
        std::vector<std::string> labels;
        if (j.contains("labels")) {
            labels.resize(order);
            for (std::size_t v = 0; v < order; ++v) labels[v] = std::to_string(v);
            for (const auto& [key, value] : j.at("labels").items()) {
                labels[detail::vertex_key(key, order, "label")] = value.get<std::string>();
            }
        }
        return FiniteGraph::from_edge_list(order, edges, std::move(labels));
    });
}

// ---- colorings ----

inline Json to_json(const Coloring& c) {
    Json out = {{"kind", to_string(c.kind)}};
    if (colors_vertices(c.kind)) {
        Json v = Json::object();
        for (std::size_t i = 0; i < c.vertex.size(); ++i) v[std::to_string(i)] = c.vertex[i];
        out["vertex"] = v;
    }
    if (colors_edges(c.kind)) {
        Json e = Json::array();
        for (const auto& [edge, col] : c.edge) e.push_back({edge.u, edge.v, col});
        out["edge"] = e;
    }
    return out;
}

inline std::optional<ColoringKind> coloring_kind_from_string(const std::string& s) {
    for (ColoringKind k : {ColoringKind::vertex, ColoringKind::edge, ColoringKind::total}) {
        if (s == to_string(k)) return k;
    }
    return std::nullopt;
}

// Reads a coloring of g and insists that it covers exactly the elements its
// kind colors. Documents that wrap a coloring (algorithm output under
// "coloring", parameter results under "witness") are unwrapped.
inline Coloring coloring_from_json(const Json& doc, const FiniteGraph& g) {
    return detail::schema_guard([&] {
        const Json* inner = &doc;
        if (doc.is_object() && !doc.contains("kind")) {
            if (doc.contains("coloring")) {
                inner = &doc.at("coloring");
            } else if (doc.contains("witness")) {
                inner = &doc.at("witness");
            }
        }
        if (inner->is_null()) throw SchemaError("schema mismatch: document carries no coloring");
        const Json& j = *inner;
        Coloring c;
        auto kind = coloring_kind_from_string(j.at("kind").get<std::string>());
        if (!kind) throw SchemaError("schema mismatch: unknown coloring kind");
        c.kind = *kind;
        if (colors_vertices(c.kind)) {
            std::vector<std::optional<ColorId>> seen(g.order());
            for (const auto& [key, value] : j.at("vertex").items()) {
                seen[detail::vertex_key(key, g.order(), "vertex")] = value.get<ColorId>();
            }
            for (VertexId v = 0; v < g.order(); ++v) {
                if (!seen[v]) throw SchemaError("schema mismatch: vertex " + std::to_string(v) + " uncolored");
                c.vertex.push_back(*seen[v]);
            }
        }
        if (colors_edges(c.kind)) {
            for (const Json& e : j.at("edge")) {
                if (!e.is_array() || e.size() != 3) throw SchemaError("schema mismatch: edge entries are [u, v, c]");
                Edge edge(e[0].get<VertexId>(), e[1].get<VertexId>());
                if (!g.edge_index(edge.u, edge.v)) {
                    throw SchemaError("schema mismatch: " + to_string(edge) + " is not an edge");
                }
                c.edge[edge] = e[2].get<ColorId>();
            }
            for (const Edge& e : g.edges()) {
                if (!c.edge.count(e)) throw SchemaError("schema mismatch: edge " + to_string(e) + " uncolored");
            }
        }
        return c;
    });
}

// ---- lists, groups, reports ----

inline Json to_json(const ListAssignment& l) {
    Json lists = Json::object();
    for (std::size_t v = 0; v < l.size(); ++v) lists[std::to_string(v)] = l[static_cast<VertexId>(v)];
    return {{"k", l.k()}, {"lists", lists}};
}

inline ListAssignment lists_from_json(const Json& j, std::size_t order) {
    return detail::schema_guard([&] {
        std::vector<std::optional<std::vector<ColorId>>> seen(order);
        for (const auto& [key, value] : j.at("lists").items()) {
            seen[detail::vertex_key(key, order, "list")] = value.get<std::vector<ColorId>>();
        }
        std::vector<std::vector<ColorId>> lists;
        for (std::size_t v = 0; v < order; ++v) {
            if (!seen[v]) throw SchemaError("schema mismatch: vertex " + std::to_string(v) + " has no list");
            lists.push_back(*seen[v]);
        }
        ListAssignment out(std::move(lists));
        if (j.contains("k") && j.at("k").get<std::size_t>() != out.k()) {
            throw SchemaError("schema mismatch: lists have " + std::to_string(out.k()) + " colors, k says " +
                              j.at("k").dump());
        }
        return out;
    });
}

inline Json to_json(const AutomorphismSet& a) {
    Json members = Json::array();
    for (const Permutation& p : a.members()) members.push_back(p.images);
    return {{"order", a.order()}, {"members", members}};
}

inline Json to_json(const Site& s) {
    if (const auto* v = std::get_if<VertexId>(&s)) return {{"vertex", *v}};
    if (const auto* e = std::get_if<Edge>(&s)) return {{"edge", {e->u, e->v}}};
    return {{"automorphism", std::get<PermutationIndex>(s).index}};
}

inline Json to_json(const VerificationReport& r) {
    Json violations = Json::array();
    for (const Violation& v : r.violations) violations.push_back({{"site", to_json(v.site)}, {"reason", v.reason}});
    return {{"valid", r.valid()}, {"violations", violations}};
}

inline Json to_json(const ParameterResult& r) {
    Json out = {{"parameter", to_string(r.parameter)}};
    out["value"] = r.value ? Json(*r.value) : Json(nullptr);
    out["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    out["minimality"] = {{"first_k", r.minimality.first_k},
                         {"refuted_nodes", r.minimality.refuted_nodes},
                         {"trivial_lower_bound", r.minimality.trivial_lower_bound()}};
    return out;
}

inline Json to_json(const RepairRecord& r) {
    Json changes = Json::array();
    for (const ColorChange& c : r.changes) changes.push_back({{"vertex", c.vertex}, {"from", c.from}, {"to", c.to}});
    Json conditions = Json::array();
    for (bool b : r.conditions) conditions.push_back(b);
    return {{"vertex", r.vertex}, {"case", to_string(r.kind)}, {"pass", r.pass},
            {"changes", changes}, {"conditions", conditions}};
}

// One JSON document per line, one line per repair.
inline std::string trace_to_json_lines(const RepairTrace& trace) {
    std::string out;
    for (const RepairRecord& r : trace) out += to_json(r).dump() + "\n";
    return out;
}

inline Json to_json(const ListDistinguishingResult& r) {
    Json trace = Json::array();
    for (const RepairRecord& rec : r.trace) trace.push_back(to_json(rec));
    return {{"coloring", to_json(r.coloring)},
            {"root", r.root},
            {"root_color", r.root_color},
            {"root_neighbor_colors", r.root_neighbor_colors},
            {"greedy_fallbacks", r.greedy_fallbacks},
            {"passes", r.passes},
            {"trace", trace}};
}

inline Json to_json(const KpwResult& r) {
    return {{"coloring", to_json(r.coloring)},
            {"palette", r.palette},
            {"route", r.route == KpwRoute::scheme ? "scheme" : "search"},
            {"root", r.root},
            {"ray_child", r.ray_child},
            {"twin", r.twin},
            {"attempts", r.attempts}};
}

inline Json to_json(const EliminationResult& r) {
    Json steps = Json::array();
    for (const EliminationStep& s : r.steps) {
        steps.push_back({{"removed", s.removed},
                         {"index", s.index},
                         {"replacement", s.replacement ? Json(*s.replacement) : Json(nullptr)}});
    }
    return {{"coloring", to_json(r.coloring)}, {"steps", steps}};
}

inline Json to_json(const ExtensionResult& r) {
    return {{"coloring", to_json(r.coloring)},
            {"depth", r.depth},
            {"certified_depth", r.certified_depth},
            {"nodes", r.nodes}};
}

inline Json to_json(const BoundReport& r) {
    Json entries = Json::array();
    for (const BoundEntry& e : r.entries) {
        entries.push_back({{"graph", e.graph},
                           {"rule", to_string(e.rule)},
                           {"status", to_string(e.status)},
                           {"value", e.value ? Json(*e.value) : Json(nullptr)},
                           {"bound", e.bound},
                           {"note", e.note}});
    }
    return {{"graphs", r.graphs},
            {"distinguishing_max_order", r.distinguishing_max_order},
            {"violations", r.count(BoundStatus::violation)},
            {"exceptions", r.count(BoundStatus::exception)},
            {"errors", r.count(BoundStatus::error)},
            {"entries", entries}};
}

// ---- DOT ----

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

class DotReader {
public:
    explicit DotReader(const std::string& text) : s_(text) {}

    FiniteGraph read() {
        expect_word("graph");
        skip();
        if (pos_ < s_.size() && s_[pos_] != '{') word();  // optional graph name
        expect('{');
        std::map<std::size_t, std::string> labels;
        std::vector<std::pair<VertexId, VertexId>> edges;
        std::size_t order = 0;
        while (true) {
            skip();
            if (pos_ >= s_.size()) throw SchemaError("dot: unterminated graph body");
            if (s_[pos_] == '}') {
                ++pos_;
                break;
            }
            if (s_[pos_] == ';') {
                ++pos_;
                continue;
            }
            const std::size_t a = number();
            order = std::max(order, a + 1);
            skip();
            if (s_.compare(pos_, 2, "--") == 0) {
                pos_ += 2;
                const std::size_t b = number();
                order = std::max(order, b + 1);
                edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
            } else if (pos_ < s_.size() && s_[pos_] == '[') {
                ++pos_;
                expect_word("label");
                expect('=');
                skip();
                labels[a] = quoted();
                expect(']');
            } else {
                labels.emplace(a, std::to_string(a));
            }
        }
        std::vector<std::string> names(order);
        for (std::size_t v = 0; v < order; ++v) {
            auto it = labels.find(v);
            names[v] = it == labels.end() ? std::to_string(v) : it->second;
        }
        try {
            return FiniteGraph::from_edge_list(order, edges, std::move(names));
        } catch (const GraphError& e) {
            throw SchemaError(std::string("dot: ") + e.what());
        }
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c) {
            throw SchemaError(std::string("dot: expected '") + c + "' at offset " + std::to_string(pos_));
        }
        ++pos_;
    }
    std::string word() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        return s_.substr(start, pos_ - start);
    }
    void expect_word(const std::string& w) {
        if (word() != w) throw SchemaError("dot: expected '" + w + "'");
    }
    std::size_t number() {
        std::string w = word();
        if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos) {
            throw SchemaError("dot: node ids must be vertex numbers, got '" + w + "'");
        }
        return std::stoul(w);
    }
    std::string quoted() {
        expect('"');
        std::string out;
        while (pos_ < s_.size() && s_[pos_] != '"') {
            if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) ++pos_;
            out += s_[pos_++];
        }
        expect('"');
        return out;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

// Plain undirected DOT, one node statement per vertex carrying its label.
inline std::string to_dot(const FiniteGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (VertexId v = 0; v < g.order(); ++v) out << "  " << v << " [label=" << detail::dot_quote(g.label(v)) << "];\n";
    for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

// Reads the subset of DOT written by to_dot.
inline FiniteGraph graph_from_dot(const std::string& text) { return detail::DotReader(text).read(); }

}  // namespace symcolor
