#pragma once

// JSON and DOT serialization. Needs the single-header nlohmann json.hpp on the include path.

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "xtal/crystal.hpp"
#include "xtal/keymap.hpp"
#include "xtal/poset.hpp"

namespace xtal::io {

using json = nlohmann::ordered_json;

inline json rows_json(const Tableau& t) { return json(t.rows()); }

/// { "shape", "n", "vertices", "edges": [[src, dst, color]], "rank" }.
inline json crystal_to_json(const CrystalGraph& g) {
    json j;
    j["shape"] = g.shape().parts();
    j["n"] = g.n();
    j["vertices"] = json::array();
    for (VertexId v = 0; v < g.size(); ++v) j["vertices"].push_back(rows_json(g.tableau(v)));
    j["edges"] = json::array();
    for (const auto& e : g.edges()) j["edges"].push_back({e.source, e.target, e.color});
    j["rank"] = json::array();
    for (VertexId v = 0; v < g.size(); ++v) j["rank"].push_back(g.rank(v));
    return j;
}

/// Reads the crystal schema back. Ranks, if present, are ignored; the
/// graph recomputes them.
inline CrystalData crystal_from_json(const json& j) {
    CrystalData d;
    d.shape = Shape(j.at("shape").get<std::vector<int>>());
    d.n = j.at("n").get<int>();
    for (const auto& rows : j.at("vertices")) {
        auto t = Tableau::from_rows(rows.get<std::vector<std::vector<int>>>());
        if (!(t.shape() == d.shape)) throw std::invalid_argument("vertex shape differs from the declared shape");
        if (t.max_entry() > d.n) throw std::invalid_argument("vertex entry exceeds n");
        d.vertices.push_back(std::move(t));
    }
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3) throw std::invalid_argument("edge must be [src, dst, color]");
        d.edges.push_back({e[0].get<VertexId>(), e[1].get<VertexId>(), e[2].get<int>()});
    }
    return d;
}

inline CrystalData crystal_from_string(const std::string& text) { return crystal_from_json(json::parse(text)); }

namespace detail {

inline const char* color_name(int i) {
    static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown",
                                    "magenta", "cyan", "gold", "gray", "navy"};
    return palette[(i - 1) % 11];
}

}  // namespace detail

inline std::string crystal_to_dot(const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph crystal {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (VertexId v = 0; v < g.size(); ++v) os << "  v" << v << " [label=\"" << to_string(g.tableau(v)) << "\"];\n";
    for (const auto& e : g.edges())
        os << "  v" << e.source << " -> v" << e.target << " [label=\"" << e.color << "\", color=\""
           << detail::color_name(e.color) << "\"];\n";
    os << "}\n";
    return os.str();
}

/// Crystal schema restricted to I, plus "bottom" and "top" (local ids).
/// Ranks are relative to the bottom.
inline json interval_to_json(const CrystalGraph& g, const Interval<VertexId>& I) {
    json j;
    j["shape"] = g.shape().parts();
    j["n"] = g.n();
    j["vertices"] = json::array();
    for (LocalId k = 0; k < I.size(); ++k) j["vertices"].push_back(rows_json(g.tableau(I.vertex(k))));
    j["edges"] = json::array();
    for (const auto& e : I.edges()) j["edges"].push_back({e.source, e.target, e.color});
    j["rank"] = json::array();
    for (LocalId k = 0; k < I.size(); ++k) j["rank"].push_back(I.rank(k));
    j["bottom"] = I.bottom();
    j["top"] = I.top();
    return j;
}

inline json components_to_json(const ChainComponents& c) {
    json j;
    j["chains"] = c.chains.size();
    j["components"] = json::array();
    for (const auto& comp : c.components)
        j["components"].push_back({{"size", comp.size()}, {"representative", c.chains[comp.front()].labels}});
    return j;
}

/// Vertex index -> one-line key, in vertex order.
inline json keys_to_json(const KeyTable& keys) {
    json j = json::object();
    for (VertexId v = 0; v < keys.size(); ++v) j[std::to_string(v)] = to_string(keys[v]);
    return j;
}

inline json fiber_to_json(const CrystalGraph& g, const Fiber& f) {
    json j;
    j["key"] = to_string(f.key);
    j["elements"] = json::array();
    for (auto v : f.elements) j["elements"].push_back({{"vertex", v}, {"tableau", to_string(g.tableau(v))}});
    j["covers"] = json::array();
    for (const auto& e : f.covers) j["covers"].push_back({e.source, e.target, e.color});
    j["components"] = json::array();
    for (const auto& comp : f.components) {
        // Extremes of each component in the induced order.
        std::vector<VertexId> minima, maxima;
        for (auto x : comp) {
            bool below = false, above = false;
            for (const auto& e : f.covers) {
                if (e.target == x) below = true;
                if (e.source == x) above = true;
            }
            if (!below) minima.push_back(x);
            if (!above) maxima.push_back(x);
        }
        j["components"].push_back({{"size", comp.size()}, {"vertices", comp}, {"minima", minima}, {"maxima", maxima}});
    }
    return j;
}

}  // namespace xtal::io
