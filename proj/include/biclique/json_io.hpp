#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "biclique/enumerate.hpp"
#include "biclique/families.hpp"
#include "biclique/graph.hpp"
#include "biclique/skeleton.hpp"
#include "biclique/solvers.hpp"

namespace biclique {

using nlohmann::json;

// ---- weights ----------------------------------------------------------

inline json weight_to_json(const ExtendedWeight& w) { return w.str(); }

inline ExtendedWeight weight_from_json(const json& j) {
    if (j.is_string()) return parse_extended_weight(j.get<std::string>());
    if (j.is_number_integer()) return ExtendedWeight(Rational(j.get<long long>()));
    throw InstanceError("weight must be a string like \"p/q\", an integer, or \"inf\"");
}

// ---- instances --------------------------------------------------------

inline json instance_to_json(const BipartiteGraph& g) {
    json rows = json::array();
    for (int i = 0; i < g.n; ++i) {
        json row = json::array();
        for (int j = 0; j < g.n; ++j) row.push_back(weight_to_json(g.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"n", g.n}, {"weights", rows}};
}

inline BipartiteGraph instance_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("weights"))
        throw InstanceError("instance needs fields \"n\" and \"weights\"");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
        throw InstanceError("instance field \"n\" must be a positive integer");
    const int n = j["n"].get<int>();
    const json& rows = j["weights"];
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
        throw InstanceError("instance needs an n-by-n weight matrix");
    BipartiteGraph g(n);
    for (int i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw InstanceError("instance needs an n-by-n weight matrix");
        for (int jj = 0; jj < n; ++jj) g.at(i, jj) = weight_from_json(row[jj]);
    }
    return g;
}

inline json unweighted_to_json(const UnweightedBipartiteGraph& g) {
    json rows = json::array();
    for (int i = 0; i < g.n; ++i) {
        json row = json::array();
        for (int j = 0; j < g.n; ++j) row.push_back(g.edge(i, j) ? "1" : "0");
        rows.push_back(std::move(row));
    }
    return json{{"n", g.n}, {"weights", rows}};
}

inline UnweightedBipartiteGraph unweighted_from_json(const json& j) {
    BipartiteGraph w = instance_from_json(j);
    UnweightedBipartiteGraph g(w.n);
    for (int i = 0; i < w.n; ++i) {
        for (int jj = 0; jj < w.n; ++jj) {
            const ExtendedWeight& e = w.at(i, jj);
            if (e.is_infinite() || (e.value() != 0 && e.value() != 1))
                throw InstanceError("unweighted instance entries must be 0 or 1");
            g.set_edge(i, jj, e.value() == 1);
        }
    }
    return g;
}

// ---- solutions and bicliques ------------------------------------------

inline json biclique_to_json(const Biclique& b) { return json{{"u", b.u}, {"v", b.v}}; }

inline Biclique biclique_from_json(const json& j) {
    if (!j.is_object() || !j.contains("u") || !j.contains("v"))
        throw InstanceError("biclique needs fields \"u\" and \"v\"");
    Biclique b;
    try {
        b.u = j["u"].get<std::vector<int>>();
        b.v = j["v"].get<std::vector<int>>();
    } catch (const json::exception&) {
        throw InstanceError("biclique parts must be integer arrays");
    }
    return b;
}

inline json solution_to_json(const Solution& s) {
    return json{{"value", s.value.str()}, {"u", s.biclique.u}, {"v", s.biclique.v}};
}

// ---- skeletons, cliques, families --------------------------------------

inline json skeleton_to_json(const SkeletonGraph& sg) {
    json vertices = json::array();
    for (const Biclique& b : sg.feasible.members) vertices.push_back(biclique_to_json(b));
    json edges = json::array();
    for (auto [i, j] : sg.edges) edges.push_back(json::array({i, j}));
    return json{{"n", sg.feasible.n},     {"k", sg.feasible.k},
                {"kind", to_string(sg.feasible.kind)},
                {"method", to_string(sg.method)},
                {"vertices", vertices},   {"edges", edges}};
}

inline json clique_report_to_json(const CliqueResult& r) {
    return json{{"omega", r.omega},
                {"witness", r.witness},
                {"lower_bound_direct_type", r.omega - 1}};
}

inline json family_to_json(const CliqueFamily& f) {
    json members = json::array();
    for (const Biclique& b : f.members) members.push_back(biclique_to_json(b));
    json out{{"kind", to_string(f.kind)}, {"n", f.n}, {"k", f.k}, {"members", members}};
    if (f.kind == FamilyKind::MinPartition) {
        out["m"] = f.m;
        out["s"] = f.s;
    }
    return out;
}

inline json certificate_to_json(const BipartiteGraph& cert) { return instance_to_json(cert); }

// ---- files --------------------------------------------------------------

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InstanceError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InstanceError("invalid JSON in " + path + ": " + e.what());
    }
}

}  // namespace biclique
