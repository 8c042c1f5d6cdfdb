#pragma once

// Loader for the built-in catalog data file: every group of order <= 24
// (stored as permutation generators), the order-60 alternating group, and a
// curated list of module examples. Counts per order are re-checked on load.

#include <array>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "picurve/json_io.hpp"

namespace picurve {

// number of isomorphism classes of groups of order 1..24
inline constexpr std::array<int, 24> kGroupCounts = {1, 1, 1, 2, 1, 2,  1, 5, 2, 2, 1, 5,
                                                     1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15};

struct CatalogGroup {
    std::string name;
    GroupPtr group;
};

struct CatalogModule {
    std::string name;
    GroupPtr group;
    FlModule mod;
};

struct Catalog {
    std::vector<CatalogGroup> groups;
    std::vector<CatalogModule> modules;
};

inline Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open catalog file: " + path);
    Json j = Json::parse(in);

    Catalog cat;
    std::map<int, int> per_order;
    for (const auto& gj : j.at("groups")) {
        CatalogGroup cg;
        cg.name = gj.at("name").get<std::string>();
        cg.group = group_from_json(Json{{"degree", gj.at("degree")}, {"generators", gj.at("generators")}});
        if (cg.group->order != gj.at("order").get<int>())
            throw validation_error("catalog group '" + cg.name + "' has the wrong order");
        per_order[cg.group->order] += 1;
        cat.groups.push_back(std::move(cg));
    }
    for (int n = 1; n <= 24; ++n)
        if (per_order[n] != kGroupCounts[static_cast<size_t>(n - 1)])
            throw validation_error("catalog is missing groups of order " + std::to_string(n));
    if (per_order[60] != 1) throw validation_error("catalog is missing the order-60 group");

    for (const auto& mj : j.at("modules")) {
        CatalogModule cm;
        cm.name = mj.at("name").get<std::string>();
        Json desc = mj;
        desc.erase("name");
        ModuleDescriptor d = module_from_json(desc);
        cm.group = d.group;
        cm.mod = std::move(d.mod);
        cat.modules.push_back(std::move(cm));
    }
    if (cat.modules.empty()) throw validation_error("catalog has no module examples");
    return cat;
}

}  // namespace picurve
