// Command-line front end. Every subcommand is a thin adapter over the
// library: parse flags, call one operation, print JSON (or DOT/CSV) on
// stdout. Errors come back as a structured JSON object and a nonzero exit.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "biclique/biclique.hpp"

namespace {

using namespace biclique;

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

FeasibleSet feasible_from_flags(const std::string& kind, int n, int k) {
    if (kind == "balanced") return enumerate_balanced(n, k);
    if (kind == "unbalanced") return enumerate_unbalanced(n, k);
    throw ParameterError("kind must be balanced or unbalanced");
}

AdjacencyMethod method_from_name(const std::string& name) {
    if (name == "criterion") return AdjacencyMethod::Criterion;
    if (name == "midpoint-lp") return AdjacencyMethod::MidpointLP;
    if (name == "cone-max") return AdjacencyMethod::ConeMarginMax;
    if (name == "cone-min") return AdjacencyMethod::ConeMarginMin;
    throw ParameterError("method must be criterion, midpoint-lp, cone-max, or cone-min");
}

std::string skeleton_csv(const SkeletonGraph& sg) {
    std::string out;
    for (auto [i, j] : sg.edges) out += std::to_string(i) + "," + std::to_string(j) + "\n";
    return out;
}

std::string family_csv(const CliqueFamily& f) {
    std::string out;
    for (const Biclique& b : f.members) {
        std::string row;
        for (std::size_t i = 0; i < b.u.size(); ++i) row += (i ? " " : "") + std::to_string(b.u[i]);
        row += ",";
        for (std::size_t i = 0; i < b.v.size(); ++i) row += (i ? " " : "") + std::to_string(b.v[i]);
        out += row + "\n";
    }
    return out;
}

struct PairSelection {
    Biclique x, y;
    std::optional<std::size_t> x_idx, y_idx;
};

PairSelection resolve_pair(const std::string& pair_file, int x_idx, int y_idx,
                           const FeasibleSet* fs) {
    PairSelection sel;
    if (!pair_file.empty()) {
        json j = load_json_file(pair_file);
        if (!j.contains("x") || !j.contains("y"))
            throw InstanceError("pair file needs fields \"x\" and \"y\"");
        sel.x = biclique_from_json(j["x"]);
        sel.y = biclique_from_json(j["y"]);
        if (fs) {
            sel.x_idx = fs->index_of(sel.x);
            sel.y_idx = fs->index_of(sel.y);
        }
        return sel;
    }
    if (x_idx < 0 || y_idx < 0)
        throw ParameterError("give either --pair FILE or both --x and --y member indices");
    if (!fs) throw ParameterError("--x/--y indices need -n/-k/--kind to fix the feasible set");
    if (static_cast<std::size_t>(x_idx) >= fs->size() ||
        static_cast<std::size_t>(y_idx) >= fs->size())
        throw ParameterError("member index out of range for the feasible set");
    sel.x = fs->members[x_idx];
    sel.y = fs->members[y_idx];
    sel.x_idx = x_idx;
    sel.y_idx = y_idx;
    return sel;
}

json certificate_report(const FeasibleSet& fs, std::size_t xi, std::size_t yi,
                        const BipartiteGraph& cert, Sense sense) {
    CertificateCheck check = verify_certificate(fs, xi, yi, cert, sense);
    json out = certificate_to_json(cert);
    out["value"] = check.value.str();
    out["margin"] = check.margin.str();
    out["adjacent"] = check.tie && check.strict;
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"exact toolkit for weighted biclique problems"};
    app.fallthrough();
    app.require_subcommand(1);
    unsigned threads = 1;
    unsigned seed = 0;
    app.add_option("--threads", threads, "worker threads for pairwise scans");
    app.add_option("--seed", seed, "accepted for script compatibility; output is deterministic");

    std::string input, problem, sense_name = "max", kind = "balanced", method_name = "criterion";
    std::string format = "json", reduction, pair_file, family_kind;
    int n = 0, k = 0, x_idx = -1, y_idx = -1;
    bool certify_flag = false;

    auto* solve = app.add_subcommand("solve", "solve one problem instance exactly");
    solve->add_option("-i,--input", input)->required();
    solve->add_option("-k", k)->required();
    solve->add_option("--problem", problem)->required()
        ->check(CLI::IsMember({"wbcbs", "maxwcbs", "minwcbs"}));
    solve->add_option("--sense", sense_name)->check(CLI::IsMember({"max", "min"}));

    auto* oracle = app.add_subcommand("oracle", "brute-force scan of the full feasible set");
    oracle->add_option("-i,--input", input)->required();
    oracle->add_option("-k", k)->required();
    oracle->add_option("--kind", kind)->check(CLI::IsMember({"balanced", "unbalanced"}));
    oracle->add_option("--sense", sense_name)->check(CLI::IsMember({"max", "min"}));

    auto* skeleton = app.add_subcommand("skeleton", "adjacency graph of a feasible set");
    skeleton->add_flag("--balanced", [&kind](std::size_t) { kind = "balanced"; });
    skeleton->add_flag("--unbalanced", [&kind](std::size_t) { kind = "unbalanced"; });
    skeleton->add_option("-n", n)->required();
    skeleton->add_option("-k", k)->required();
    skeleton->add_option("--method", method_name);
    skeleton->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "csv"}));

    auto* clique = app.add_subcommand("clique", "exact clique number of a skeleton");
    clique->add_flag("--balanced", [&kind](std::size_t) { kind = "balanced"; });
    clique->add_flag("--unbalanced", [&kind](std::size_t) { kind = "unbalanced"; });
    clique->add_option("-n", n)->required();
    clique->add_option("-k", k)->required();
    clique->add_option("--method", method_name);

    auto* family = app.add_subcommand("family", "construct a pairwise-adjacent family");
    family->add_option("--kind", family_kind)->required()
        ->check(CLI::IsMember({"balanced", "max", "min"}));
    family->add_option("-n", n)->required();
    family->add_option("-k", k)->required();
    family->add_flag("--certify", certify_flag, "attach pairwise tie certificates");
    family->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* certify = app.add_subcommand("certify", "tie certificates and adjacency witnesses");
    certify->add_option("--method", method_name)->required()
        ->check(CLI::IsMember({"disjoint-parts", "common-part", "min-family", "margin-lp",
                               "witness"}));
    certify->add_option("--pair", pair_file, "JSON file {\"x\": {u,v}, \"y\": {u,v}}");
    certify->add_option("--x", x_idx, "member index in the canonical feasible set");
    certify->add_option("--y", y_idx, "member index in the canonical feasible set");
    certify->add_option("-n", n)->required();
    certify->add_option("-k", k);
    certify->add_option("--kind", kind)->check(CLI::IsMember({"balanced", "unbalanced"}));
    certify->add_option("--sense", sense_name)->check(CLI::IsMember({"max", "min"}));
    std::string domain_name = "orthant";
    certify->add_option("--domain", domain_name)->check(CLI::IsMember({"orthant", "full"}));

    auto* reduce = app.add_subcommand("reduce", "materialize a hardness reduction");
    reduce->add_option("--reduction", reduction)->required()
        ->check(CLI::IsMember({"bcbs-to-wbcbs", "bcbs-to-maxwcbs", "minwcbs-to-qcover"}));
    reduce->add_option("-i,--input", input)->required();
    reduce->add_option("-k", k)->required();

    auto* matching = app.add_subcommand("matching", "matching, cover, and unweighted biclique");
    matching->add_option("-i,--input", input)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        emit(json{{"error", {{"type", "usage"}, {"message", e.what()}}}});
        return 2;
    }

    try {
        if (solve->parsed()) {
            BipartiteGraph g = instance_from_json(load_json_file(input));
            Solution s;
            if (problem == "wbcbs") {
                s = solve_wbcbs(g, k, sense_name == "min" ? Sense::Min : Sense::Max);
            } else if (problem == "maxwcbs") {
                if (solve->count("--sense") && sense_name != "max")
                    throw ParameterError("maxwcbs is a maximization problem");
                s = solve_maxwcbs(g, k);
            } else {
                if (solve->count("--sense") && sense_name != "min")
                    throw ParameterError("minwcbs is a minimization problem");
                s = solve_minwcbs(g, k);
            }
            emit(solution_to_json(s));
        } else if (oracle->parsed()) {
            BipartiteGraph g = instance_from_json(load_json_file(input));
            Solution s = brute_force_oracle(
                g, k, kind == "balanced" ? SetKind::Balanced : SetKind::Unbalanced,
                sense_name == "min" ? Sense::Min : Sense::Max);
            emit(solution_to_json(s));
        } else if (skeleton->parsed()) {
            FeasibleSet fs = feasible_from_flags(kind, n, k);
            SkeletonGraph sg = build_skeleton(fs, method_from_name(method_name), threads);
            if (format == "dot")
                std::cout << to_dot(sg);
            else if (format == "csv")
                std::cout << skeleton_csv(sg);
            else
                emit(skeleton_to_json(sg));
        } else if (clique->parsed()) {
            FeasibleSet fs = feasible_from_flags(kind, n, k);
            SkeletonGraph sg = build_skeleton(fs, method_from_name(method_name), threads);
            emit(clique_report_to_json(max_clique(sg)));
        } else if (family->parsed()) {
            CliqueFamily f;
            FeasibleSet fs;
            Sense sense = Sense::Max;
            if (family_kind == "balanced") {
                f = family_balanced(n, k);
                if (certify_flag) fs = enumerate_balanced(n, k);
            } else if (family_kind == "max") {
                f = family_max(n, k);
                if (certify_flag) fs = enumerate_unbalanced(n, k);
            } else {
                f = family_min(n, k);
                sense = Sense::Min;
                if (certify_flag) fs = enumerate_unbalanced(n, k);
            }
            if (format == "csv") {
                std::cout << family_csv(f);
            } else {
                json out = family_to_json(f);
                if (certify_flag) {
                    json certs = json::array();
                    for (std::size_t i = 0; i < f.size(); ++i) {
                        for (std::size_t j = i + 1; j < f.size(); ++j) {
                            BipartiteGraph cert =
                                family_kind == "min"
                                    ? cert_min_family(f.members[i], f.members[j], n, k)
                                    : cert_disjoint_parts(f.members[i], f.members[j], n);
                            auto xi = fs.index_of(f.members[i]);
                            auto yi = fs.index_of(f.members[j]);
                            if (!xi || !yi)
                                throw ParameterError("family member missing from feasible set");
                            json rep = certificate_report(fs, *xi, *yi, cert, sense);
                            rep["x"] = i;
                            rep["y"] = j;
                            certs.push_back(std::move(rep));
                        }
                    }
                    out["certificates"] = certs;
                }
                emit(out);
            }
        } else if (certify->parsed()) {
            if (method_name == "margin-lp") {
                FeasibleSet fs = feasible_from_flags(kind, n, k);
                PairSelection sel = resolve_pair(pair_file, x_idx, y_idx, &fs);
                if (!sel.x_idx || !sel.y_idx)
                    throw ParameterError("pair members must belong to the feasible set");
                auto res = cone_adjacent_margin(
                    *sel.x_idx, *sel.y_idx, fs, sense_name == "min" ? Sense::Min : Sense::Max,
                    domain_name == "full" ? Domain::FullSpace : Domain::Orthant);
                json out = certificate_to_json(res.certificate.c);
                out["margin"] = res.certificate.margin.str();
                out["adjacent"] = res.adjacent;
                emit(out);
            } else if (method_name == "witness") {
                PairSelection sel = resolve_pair(pair_file, x_idx, y_idx, nullptr);
                auto [z, t] = nonadjacency_witness(sel.x, sel.y);
                CharacteristicVector cx = characteristic_vector(sel.x, n);
                CharacteristicVector cy = characteristic_vector(sel.y, n);
                CharacteristicVector cz = characteristic_vector(z, n);
                CharacteristicVector ct = characteristic_vector(t, n);
                bool identity = true;
                for (int e = 0; e < cx.dimension(); ++e)
                    identity &= (int(cx.bits[e]) + cy.bits[e]) == (int(cz.bits[e]) + ct.bits[e]);
                emit(json{{"z", biclique_to_json(z)},
                          {"t", biclique_to_json(t)},
                          {"identity", identity}});
            } else {
                PairSelection sel = resolve_pair(pair_file, x_idx, y_idx, nullptr);
                BipartiteGraph cert;
                FeasibleSet fs;
                Sense sense = Sense::Max;
                if (method_name == "disjoint-parts") {
                    cert = cert_disjoint_parts(sel.x, sel.y, n);
                    fs = enumerate_balanced(n, static_cast<int>(sel.x.u.size()));
                } else if (method_name == "common-part") {
                    cert = cert_common_part(sel.x, sel.y, n);
                    fs = enumerate_balanced(n, static_cast<int>(sel.x.u.size()));
                } else {
                    if (k == 0) k = sel.x.total_vertices();
                    cert = cert_min_family(sel.x, sel.y, n, k);
                    fs = enumerate_unbalanced(n, k);
                    sense = Sense::Min;
                }
                auto xi = fs.index_of(sel.x);
                auto yi = fs.index_of(sel.y);
                if (!xi || !yi) throw ParameterError("pair members are not feasible for (n, k)");
                emit(certificate_report(fs, *xi, *yi, cert, sense));
            }
        } else if (reduce->parsed()) {
            if (reduction == "minwcbs-to-qcover") {
                BipartiteGraph g = instance_from_json(load_json_file(input));
                QCoverReduction r = minwcbs_to_qcover(g, k);
                emit(json{{"graph", unweighted_to_json(r.graph)}, {"q", r.q}, {"k", k}});
            } else {
                UnweightedBipartiteGraph g = unweighted_from_json(load_json_file(input));
                ReductionOutput r = reduction == "bcbs-to-wbcbs" ? bcbs_to_wbcbs(g, k)
                                                                 : bcbs_to_maxwcbs(g, k);
                emit(json{{"instance", instance_to_json(r.instance)},
                          {"k", r.k_out},
                          {"threshold", r.threshold.str()},
                          {"direction", r.direction}});
            }
        } else if (matching->parsed()) {
            UnweightedBipartiteGraph g = unweighted_from_json(load_json_file(input));
            Matching m = max_matching(g);
            VertexCover cover = min_vertex_cover(g, m);
            IndependentSet is = max_independent_set(g);
            auto best = max_unbalanced_biclique_unweighted(g);
            json pairs = json::array();
            for (auto [i, j] : m.pairs) pairs.push_back(json::array({i, j}));
            emit(json{{"matching", pairs},
                      {"cover", {{"left", cover.left}, {"right", cover.right}}},
                      {"independent_set", {{"left", is.left}, {"right", is.right}}},
                      {"biclique", best ? biclique_to_json(*best) : json(nullptr)}});
        }
    } catch (const ParameterError& e) {
        emit(json{{"error", {{"type", "parameter"}, {"message", e.what()}}}});
        return 1;
    } catch (const ContractError& e) {
        emit(json{{"error", {{"type", "contract"}, {"message", e.what()}}}});
        return 1;
    } catch (const InstanceError& e) {
        emit(json{{"error", {{"type", "instance"}, {"message", e.what()}}}});
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
