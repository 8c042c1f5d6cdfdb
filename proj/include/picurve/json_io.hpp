#pragma once

// JSON descriptors for the external interfaces: groups by permutation
// generators, modules by generator matrices, curve signatures, ramification
// data, and the report payloads. Reports use ordered JSON so identical
// inputs produce byte-identical output.

#include <string>
#include <vector>

#include <json.hpp>

#include "picurve/cohomology.hpp"
#include "picurve/devissage.hpp"
#include "picurve/fl.hpp"
#include "picurve/gos.hpp"
#include "picurve/group.hpp"
#include "picurve/module.hpp"
#include "picurve/realizability.hpp"

namespace picurve {

using Json = nlohmann::ordered_json;

inline void reject_unknown_fields(const Json& j, const std::vector<std::string>& allowed,
                                  const std::string& where) {
    if (!j.is_object()) throw validation_error(where + ": expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw validation_error(where + ": unknown field '" + it.key() + "'");
}

inline GroupPtr group_from_json(const Json& j, int size_cap = kDefaultGroupSizeCap) {
    reject_unknown_fields(j, {"degree", "generators"}, "group descriptor");
    if (!j.contains("degree") || !j.contains("generators"))
        throw validation_error("group descriptor needs 'degree' and 'generators'");
    int degree = j.at("degree").get<int>();
    std::vector<std::vector<int>> gens = j.at("generators").get<std::vector<std::vector<int>>>();
    return group_from_permutations(degree, gens, size_cap);
}

inline FlMatrix matrix_from_json(const Json& j, int l) {
    auto rows = j.get<std::vector<std::vector<int>>>();
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    return FlMatrix::from_rows(l, rows, c);
}

inline Json matrix_to_json(const FlMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows; ++i) rows.push_back(m.row(i));
    return rows;
}

struct ModuleDescriptor {
    GroupPtr group;
    FlModule mod;
};

inline ModuleDescriptor module_from_json(const Json& j, int size_cap = kDefaultGroupSizeCap) {
    reject_unknown_fields(j, {"l", "dim", "generator_matrices", "group"}, "module descriptor");
    for (const char* key : {"l", "dim", "generator_matrices", "group"})
        if (!j.contains(key)) throw validation_error(std::string("module descriptor needs '") + key + "'");
    int l = j.at("l").get<int>();
    int dim = j.at("dim").get<int>();
    ModuleDescriptor d;
    d.group = group_from_json(j.at("group"), size_cap);
    std::vector<FlMatrix> mats;
    for (const auto& mj : j.at("generator_matrices")) mats.push_back(matrix_from_json(mj, l));
    for (const auto& m : mats)
        if (m.rows != dim || m.cols != dim) throw validation_error("generator matrix shape != dim");
    d.mod = module_from_generator_action(d.group, l, mats, dim);
    return d;
}

inline CurveSignature signature_from_json(const Json& j) {
    reject_unknown_fields(j, {"g", "r", "p"}, "signature");
    CurveSignature sig;
    sig.g = j.at("g").get<int>();
    sig.r = j.at("r").get<int>();
    sig.p = j.value("p", 0);
    sig.validate();
    return sig;
}

inline Json signature_to_json(const CurveSignature& sig) {
    return Json{{"g", sig.g}, {"r", sig.r}, {"p", sig.p}};
}

struct RamificationDescriptor {
    RamificationFiltration filtration;
    int stalk_dim = 0;
};

inline RamificationDescriptor ramification_from_json(const Json& j) {
    reject_unknown_fields(j, {"group", "chain", "module", "stalk_dim"}, "ramification descriptor");
    RamificationDescriptor d;
    ModuleDescriptor md = module_from_json(j.at("module"));
    d.filtration.galois_group = md.group;
    d.filtration.generic_module = md.mod;
    for (const auto& cj : j.at("chain")) {
        Subgroup s;
        s.parent = md.group;
        s.members = cj.get<std::vector<int>>();
        std::sort(s.members.begin(), s.members.end());
        if (s.members.empty() || s.members[0] != 0)
            throw validation_error("chain subgroup must contain the identity");
        Subgroup closed = close(md.group, s.members);
        if (closed.members != s.members) throw validation_error("chain entry is not a subgroup");
        d.filtration.chain.push_back(std::move(s));
    }
    d.stalk_dim = j.value("stalk_dim", md.mod.dim);
    d.filtration.validate();
    return d;
}

inline Json rational_to_json(const Rational& r) {
    if (r.is_integer()) return Json(r.num);
    return Json{{"num", r.num}, {"den", r.den}};
}

inline Json group_info_report(GroupPtr g, long long budget = kDefaultTupleBudget) {
    Json rep;
    rep["order"] = g->order;
    rep["n"] = min_generators(g, budget);
    auto series = derived_series(g);
    Json orders = Json::array();
    for (const auto& s : series) orders.push_back(s.order());
    rep["derived_series_orders"] = orders;
    rep["solvable"] = series.back().order() == 1;
    rep["abelian"] = g->is_abelian();
    return rep;
}

inline Json decision_to_json(const RealizabilityDecision& d) {
    Json j;
    j["realizable"] = d.realizable;
    j["n_G"] = d.n_g;
    j["bound"] = d.bound;
    j["justification"] = d.justification;
    if (!d.warning.empty()) j["warning"] = d.warning;
    return j;
}

inline Json tower_certificate_to_json(const TowerCertificate& cert) {
    Json j;
    j["signature"] = signature_to_json(cert.signature);
    j["order"] = cert.target->order;
    j["n_G"] = cert.n_g;
    j["bound"] = cert.bound;
    j["verdict"] = cert.verdict;
    Json layers = Json::array();
    for (const auto& s : cert.tower.steps) {
        Json lj;
        lj["order"] = s.kernel_layer.order();
        lj["prime"] = s.layer_prime();
        lj["dim"] = s.layer_dim();
        lj["reduction_tag"] = to_string(s.reduction_tag);
        layers.push_back(std::move(lj));
    }
    j["tower_layers"] = layers;
    Json steps = Json::array();
    for (const auto& r : cert.steps) {
        Json sj;
        sj["step_type"] = r.step_type;
        sj["prime"] = r.layer_prime;
        sj["dim_A"] = r.dim_a;
        sj["dim_A_fixed"] = r.dim_fixed;
        sj["h1"] = r.h1_dim;
        sj["h2"] = r.h2_dim;
        sj["lemma4"] = r.lemma4_value ? Json(*r.lemma4_value) : Json(nullptr);
        sj["lemma5_lhs"] = r.lemma5_lhs ? Json(*r.lemma5_lhs) : Json(nullptr);
        sj["lemma5_rhs"] = r.lemma5_rhs ? Json(*r.lemma5_rhs) : Json(nullptr);
        sj["n_quotient"] = r.n_quotient;
        sj["n_total"] = r.n_total;
        steps.push_back(std::move(sj));
    }
    j["walk"] = steps;
    return j;
}

inline Json euler_report_to_json(const EulerReport& rep) {
    Json j;
    j["chi"] = rep.chi;
    Json swans = Json::array();
    for (const auto& s : rep.swans) swans.push_back(rational_to_json(s));
    j["swans"] = swans;
    Json eps = Json::array();
    for (const auto& e : rep.epsilons) eps.push_back(rational_to_json(e));
    j["conductor_exponents"] = eps;
    j["formula"] = rep.formula;
    return j;
}

inline Json tower_report_to_json(const TowerReport& rep) {
    Json j;
    j["all_pass"] = rep.all_pass;
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json ej;
        ej["step"] = e.step_index;
        ej["check"] = e.check;
        ej["pass"] = e.pass;
        entries.push_back(std::move(ej));
    }
    j["checks"] = entries;
    return j;
}

}  // namespace picurve
