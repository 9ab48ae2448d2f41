#include "pet/cli.hpp"

#include "pet/bounds.hpp"
#include "pet/graph.hpp"
#include "pet/homomorphism.hpp"
#include "pet/odd_girth.hpp"
#include "pet/petersen.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace pet {

namespace {

using nlohmann::json;

json vertex_map_json(const VertexMap& map) {
    return {{"source", map.source.name()},
            {"target", map.target.name()},
            {"assignment", map.assignment},
            {"verified", map.verified}};
}

json coloring_json(const CircularColoring& coloring, bool verified) {
    return {{"modulus", coloring.modulus},
            {"threshold", {{"num", coloring.threshold.num().str()},
                           {"den", coloring.threshold.den().str()}}},
            {"values", coloring.values},
            {"verified", verified}};
}

std::string odd_girth_cell(const std::optional<int>& value) {
    return value ? std::to_string(*value) : "bipartite";
}

struct TargetSpec {
    SimpleGraph graph;
};

TargetSpec parse_target(const std::string& spec) {
    if (spec == "c5") return {make_cycle(5)};
    if (spec == "c7") return {make_cycle(7)};
    if (spec.rfind("cycle:", 0) == 0) {
        int len = std::stoi(spec.substr(6));
        return {make_cycle(len)};
    }
    if (spec.rfind("circ:", 0) == 0) {
        std::string rest = spec.substr(5);
        auto slash = rest.find('/');
        if (slash == std::string::npos)
            throw std::invalid_argument("target circ:p/q needs a slash");
        int p = std::stoi(rest.substr(0, slash));
        int q = std::stoi(rest.substr(slash + 1));
        return {make_circular_complete(p, q)};
    }
    throw std::invalid_argument("unknown target '" + spec + "' (use c5|c7|cycle:L|circ:p/q)");
}

int cmd_oddgirth(int n, int k, const std::string& method, const std::string& format,
                 std::ostream& out) {
    GPParams params(n, k);
    if (method == "all") {
        auto formula = odd_girth_formula(params);
        auto ip = odd_girth_from_ip(params);
        auto bfs = odd_girth_bfs(build_petersen(params));
        bool match = formula == ip && ip == bfs;
        if (format == "json") {
            json j{{"n", n}, {"k", k}, {"match", match}};
            j["formula"] = formula ? json(*formula) : json(nullptr);
            j["ip"] = ip ? json(*ip) : json(nullptr);
            j["bfs"] = bfs ? json(*bfs) : json(nullptr);
            out << j.dump(2) << "\n";
        } else {
            out << odd_girth_cell(formula) << " " << odd_girth_cell(ip) << " "
                << odd_girth_cell(bfs) << " " << (match ? "match" : "MISMATCH") << "\n";
        }
        return match ? 0 : 2;
    }
    std::optional<int> value;
    if (method == "formula")
        value = odd_girth_formula(params);
    else if (method == "ip")
        value = odd_girth_from_ip(params);
    else if (method == "bfs")
        value = odd_girth_bfs(build_petersen(params));
    else
        throw std::invalid_argument("method must be formula|ip|bfs|all");
    if (format == "json") {
        json j{{"n", n}, {"k", k}, {"method", method}};
        j["odd_girth"] = value ? json(*value) : json(nullptr);
        out << j.dump(2) << "\n";
    } else {
        out << odd_girth_cell(value) << "\n";
    }
    return 0;
}

int cmd_scan(int n_max, const std::string& format, std::ostream& out) {
    ScanReport report = cross_validate(n_max);
    if (format == "json")
        out << scan_json(report);
    else
        out << scan_tsv(report);
    return report.mismatches == 0 ? 0 : 2;
}

int cmd_bounds(int n, int k, const std::string& format, bool decimal, std::ostream& out) {
    GPParams params(n, k);
    BoundReport report = bound_report(params);
    if (format == "json") {
        out << bound_report_json(report);
    } else if (format == "tsv") {
        out << "name\tkind\tvalue\tapplicable\n";
        for (const auto& entry : report.entries)
            out << entry.name << '\t' << (entry.is_lower ? "lower" : "upper") << '\t'
                << (entry.value ? entry.value->str() : "-") << '\t'
                << (entry.applicable ? "yes" : "no") << '\n';
    } else {
        out << bound_report_table(report, decimal);
    }
    if (report.best_lower && report.best_upper && *report.best_upper < *report.best_lower)
        return 2;
    return 0;
}

int cmd_hom(const std::string& construction, int n, int k, int q, std::ostream& out) {
    GPParams params(n, k);
    json j;
    int code = 0;
    if (construction == "pet-pb") {
        j = vertex_map_json(collapse_pet_to_pb(params));
    } else if (construction == "pet-cnk") {
        j = vertex_map_json(pet_to_cycle_power(params));
    } else if (construction == "pb-circ") {
        j = coloring_json(pb_circular_coloring(params), true);
    } else if (construction == "eta") {
        j = coloring_json(eta_cycle_power_coloring(params), true);
    } else if (construction == "c5") {
        j = vertex_map_json(c5_coloring(params));
    } else if (construction == "clique") {
        auto opt = ip_enumerate(params);
        if (!opt) throw std::domain_error("clique: integer program infeasible (bipartite)");
        if (opt->trivial_attains_optimum)
            throw std::domain_error("clique: a trivial solution attains the optimum");
        const IpSolution* pick = nullptr;
        for (const auto& sol : opt->optima)
            if (sol.t > 0) { pick = &sol; break; }
        if (!pick)
            for (const auto& sol : opt->optima)
                if (sol.t < 0) { pick = &sol; break; }
        if (!pick) throw std::domain_error("clique: no t != 0 optimal solution");
        CliqueWitness witness = clique_embedding(params, *pick);
        j = json{{"host", witness.host.name()},
                 {"power", witness.power},
                 {"solution", {{"u", pick->u}, {"v", pick->v}, {"t", pick->t}}},
                 {"vertices", witness.vertices},
                 {"description", witness.description},
                 {"verified", witness.verified}};
        if (!witness.verified) {
            j["failures"] = witness.failures;
            code = 2;
        }
    } else if (construction == "interleave") {
        InterleaveReport report = interleave_embedding(params, q);
        j = json{{"power", report.power},
                 {"q", report.requested_q},
                 {"max_verified_offset", report.max_verified_offset},
                 {"verified", report.requested_ok}};
        if (!report.requested_ok) {
            j["failures"] = report.failures;
            code = 2;
        }
    } else {
        throw std::invalid_argument(
            "construction must be pet-pb|pet-cnk|pb-circ|eta|clique|interleave|c5");
    }
    out << j.dump(2) << "\n";
    return code;
}

int cmd_search(int n, int k, const std::string& target_spec, std::uint64_t budget,
               std::ostream& out) {
    GPParams params(n, k);
    TargetSpec target = parse_target(target_spec);
    SearchOptions opts;
    opts.node_budget = budget;
    SearchResult result = search_hom(build_petersen(params), target.graph, opts);
    switch (result.outcome) {
        case SearchOutcome::found: {
            json j = vertex_map_json(*result.witness);
            j["nodes"] = result.nodes;
            out << j.dump(2) << "\n";
            return 0;
        }
        case SearchOutcome::none:
            out << "none\n";
            return 3;
        case SearchOutcome::budget_exhausted:
            out << "budget\n";
            return 4;
    }
    return 1;
}

int cmd_export(int n, int k, const std::string& what, const std::string& path,
               std::ostream& err) {
    GPParams params(n, k);
    SimpleGraph graph;
    if (what == "pet")
        graph = build_petersen(params);
    else if (what == "pb")
        graph = build_pb(params);
    else if (what == "cnk")
        graph = build_cycle_power_k(params);
    else if (what.rfind("power:", 0) == 0)
        graph = walk_power(build_petersen(params), std::stoi(what.substr(6)));
    else
        throw std::invalid_argument("what must be pet|pb|cnk|power:r");
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "cannot open '" << path << "' for writing\n";
        return 1;
    }
    write_edge_list(graph, file);
    file.flush();
    if (!file) {
        err << "write to '" << path << "' failed\n";
        return 1;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"generalized Petersen graph odd girth and circular chromatic bounds"};
    app.require_subcommand(1);

    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "tsv", "json"}))
        ->envname("PET_FORMAT");
    bool decimal = false;
    app.add_flag("--decimal", decimal, "add decimal renderings of rationals");

    int n = 0, k = 0;

    auto* oddgirth = app.add_subcommand("oddgirth", "odd girth of Pet(n,k)");
    std::string method = "formula";
    oddgirth->add_option("--n", n, "outer cycle length")->required();
    oddgirth->add_option("--k", k, "inner step")->required();
    oddgirth->add_option("--method", method, "formula|ip|bfs|all")
        ->check(CLI::IsMember({"formula", "ip", "bfs", "all"}));

    auto* scan = app.add_subcommand("scan", "cross-validate odd girth over a grid");
    int n_max = 0;
    scan->add_option("--n-max", n_max, "largest n")->required();

    auto* bounds = app.add_subcommand("bounds", "circular chromatic bounds for Pet(n,k)");
    bounds->add_option("--n", n, "outer cycle length")->required();
    bounds->add_option("--k", k, "inner step")->required();

    auto* hom = app.add_subcommand("hom", "explicit homomorphism constructions");
    std::string construction;
    int q = -1;
    hom->add_option("construction", construction,
                    "pet-pb|pet-cnk|pb-circ|eta|clique|interleave|c5")
        ->required();
    hom->add_option("--n", n, "outer cycle length")->required();
    hom->add_option("--k", k, "inner step")->required();
    hom->add_option("--q", q, "offset bound for interleave (default 2k+2)");

    auto* search = app.add_subcommand("search", "exhaustive homomorphism search from Pet(n,k)");
    std::string target;
    std::uint64_t budget = UINT64_C(4'000'000'000);
    search->add_option("--n", n, "outer cycle length")->required();
    search->add_option("--k", k, "inner step")->required();
    search->add_option("--target", target, "c5|c7|cycle:L|circ:p/q")->required();
    search->add_option("--budget", budget, "node budget");

    auto* export_cmd = app.add_subcommand("export", "write an edge list");
    std::string what, path;
    export_cmd->add_option("--n", n, "outer cycle length")->required();
    export_cmd->add_option("--k", k, "inner step")->required();
    export_cmd->add_option("--what", what, "pet|pb|cnk|power:r")->required();
    export_cmd->add_option("--path", path, "output file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (oddgirth->parsed()) return cmd_oddgirth(n, k, method, format, out);
        if (scan->parsed()) return cmd_scan(n_max, format == "table" ? "tsv" : format, out);
        if (bounds->parsed()) return cmd_bounds(n, k, format, decimal, out);
        if (hom->parsed()) return cmd_hom(construction, n, k, q, out);
        if (search->parsed()) return cmd_search(n, k, target, budget, out);
        if (export_cmd->parsed()) return cmd_export(n, k, what, path, err);
    } catch (const verification_error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const partial_result_error& e) {
        err << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace pet
