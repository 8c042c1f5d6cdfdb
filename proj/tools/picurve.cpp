// Command-line front end: one JSON document in, one JSON report out.
// Subcommands: group-info, cohomology, realizability, tower, gos,
// verify-suite. Exit code 0 means no errors (and, for verify-suite, that
// every property passed).

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "picurve/json_io.hpp"
#include "picurve/suite.hpp"

#ifndef CATALOG_PATH
#define CATALOG_PATH "data/catalog.json"
#endif

using namespace picurve;

namespace {

Json read_input(const std::string& path) {
    if (path.empty() || path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open input file: " + path);
    return Json::parse(in);
}

void write_output(const std::string& path, const Json& j) {
    std::string text = j.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw validation_error("cannot open output file: " + path);
    out << text;
}

struct Options {
    std::string input;
    std::string output;
    std::string catalog = CATALOG_PATH;
    long long budget_tuples = kDefaultTupleBudget;
    long long budget_sections = kDefaultSectionBudget;
    bool override_nonsolvable = false;
};

Json cmd_group_info(const Options& opt) {
    Json in = read_input(opt.input);
    return group_info_report(group_from_json(in), opt.budget_tuples);
}

Json cmd_cohomology(const Options& opt) {
    Json in = read_input(opt.input);
    ModuleDescriptor d = module_from_json(in);
    Json out;
    out["order"] = d.group->order;
    out["l"] = d.mod.l;
    out["dim"] = d.mod.dim;
    out["fixed_dim"] = fixed_subspace(d.mod).dim();
    out["irreducible"] = is_irreducible(d.mod);
    out["h1"] = h1(d.group, d.mod).dimension;
    out["h2"] = h2(d.group, d.mod).dimension;
    return out;
}

Json cmd_realizability(const Options& opt) {
    Json in = read_input(opt.input);
    CurveSignature sig = signature_from_json(in.at("signature"));
    GroupPtr g = group_from_json(in.at("group"));
    RealizabilityDecision d = p_g_check(sig, g, opt.override_nonsolvable, opt.budget_tuples);
    Json out = decision_to_json(d);
    out["signature"] = signature_to_json(sig);
    return out;
}

Json cmd_tower(const Options& opt) {
    Json in = read_input(opt.input);
    CurveSignature sig = signature_from_json(in.at("signature"));
    GroupPtr g = group_from_json(in.at("group"));
    TowerCertificate cert = plan_tower(sig, g, opt.budget_tuples);
    Json out = tower_certificate_to_json(cert);
    out["self_check"] = tower_report_to_json(verify_tower(cert.tower));
    return out;
}

Json cmd_gos(const Options& opt) {
    Json in = read_input(opt.input);
    std::vector<PointData> points;
    if (in.contains("points"))
        for (const auto& pj : in.at("points")) {
            RamificationDescriptor rd = ramification_from_json(pj);
            points.push_back({rd.filtration, rd.stalk_dim});
        }
    if (in.contains("signature")) {
        CurveSignature sig = signature_from_json(in.at("signature"));
        int dim = in.at("dim").get<int>();
        std::vector<Rational> swans;
        for (const auto& p : points) swans.push_back(swan(p.filtration));
        Json out = euler_report_to_json(euler_char_affine(sig, dim, swans));
        out["curve"] = "affine";
        return out;
    }
    int genus = in.at("genus").get<int>();
    int dim = in.at("dim").get<int>();
    Json out = euler_report_to_json(euler_char_projective(genus, dim, points));
    out["curve"] = "projective";
    return out;
}

Json suite_to_json(const SuiteReport& report) {
    Json out;
    out["all_pass"] = report.all_pass;
    Json items = Json::array();
    for (const auto& item : report.items) {
        Json ij;
        ij["name"] = item.name;
        ij["pass"] = item.pass;
        ij["cases"] = item.cases;
        if (!item.detail.empty()) ij["detail"] = item.detail;
        items.push_back(std::move(ij));
    }
    out["items"] = items;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-scale certificates for fundamental groups of affine curves"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global --input/--output flags after the subcommand

    Options opt;
    app.add_option("--input", opt.input, "input JSON file ('-' for stdin)");
    app.add_option("--output", opt.output, "output JSON file ('-' for stdout)");
    app.add_option("--catalog", opt.catalog, "catalog data file");
    app.add_option("--budget-tuples", opt.budget_tuples, "generator-tuple search budget");
    app.add_option("--budget-sections", opt.budget_sections, "section enumeration budget");
    app.add_flag("--override-nonsolvable", opt.override_nonsolvable,
                 "allow non-solvable groups (decision carries a transcendental-scope warning)");

    auto* sub_group = app.add_subcommand("group-info", "order, minimal generator count, derived series");
    auto* sub_coh = app.add_subcommand("cohomology", "h1/h2 dimensions of a module");
    auto* sub_real = app.add_subcommand("realizability", "decide n_G <= 2g+r-1 for a signature");
    auto* sub_tower = app.add_subcommand("tower", "full tower certificate for a solvable group");
    auto* sub_gos = app.add_subcommand("gos", "Euler characteristic with Swan conductors");
    auto* sub_suite = app.add_subcommand("verify-suite", "run the full property suite over the catalog");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sub_suite->parsed()) {
            SuiteReport report = run_suite(load_catalog(opt.catalog));
            write_output(opt.output, suite_to_json(report));
            return report.all_pass ? 0 : 1;
        }
        Json out;
        if (sub_group->parsed()) out = cmd_group_info(opt);
        else if (sub_coh->parsed()) out = cmd_cohomology(opt);
        else if (sub_real->parsed()) out = cmd_realizability(opt);
        else if (sub_tower->parsed()) out = cmd_tower(opt);
        else if (sub_gos->parsed()) out = cmd_gos(opt);
        write_output(opt.output, out);
        return 0;
    } catch (const scope_error& ex) {
        std::cerr << "scope error: " << ex.what() << "\n";
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
