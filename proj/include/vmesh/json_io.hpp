#pragma once

#include <string>

#include <json.hpp>

#include "vmesh/clusters.hpp"
#include "vmesh/tessellation.hpp"

namespace vmesh {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline json to_json(const Point2& p) { return json::array({p.x, p.y}); }

inline json mesh_to_json(const Tessellation& t) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["bbox"] = {{"min", to_json(t.bbox.min)}, {"max", to_json(t.bbox.max)}};
    json sites = json::array();
    for (const Point2& s : t.sites) sites.push_back(to_json(s));
    j["sites"] = sites;
    json regions = json::array();
    for (const ConvexPolygon& r : t.regions) {
        json poly = json::array();
        for (const Point2& v : r.vertices) poly.push_back(to_json(v));
        regions.push_back(poly);
    }
    j["regions"] = regions;
    json adj = json::array();
    for (const SharedEdge& e : t.shared_edges) {
        adj.push_back({{"i", e.a},
                       {"j", e.b},
                       {"length", e.length},
                       {"segment", json::array({to_json(e.p), to_json(e.q)})}});
    }
    j["adjacency"] = adj;
    if (!t.warnings.empty()) j["warnings"] = t.warnings;
    return j;
}

inline std::vector<Point2> sites_from_mesh_json(const json& j) {
    std::vector<Point2> out;
    for (const auto& s : j.at("sites")) out.push_back({s.at(0).get<double>(), s.at(1).get<double>()});
    return out;
}

inline json clusters_to_json(const Tessellation& t, const std::vector<NucleusCluster>& all,
                             const std::vector<NucleusCluster>& maximal) {
    json j;
    j["schema_version"] = kSchemaVersion;
    std::set<std::size_t> max_nuclei;
    for (const NucleusCluster& c : maximal) max_nuclei.insert(c.nucleus);
    json cs = json::array();
    for (const NucleusCluster& c : all) {
        cs.push_back({{"nucleus", c.nucleus},
                      {"members", c.members},
                      {"adjacency_count", c.adjacency_count},
                      {"maximal", max_nuclei.count(c.nucleus) > 0}});
    }
    j["clusters"] = cs;
    j["max_adjacency_count"] = maximal.empty() ? 0 : maximal.front().adjacency_count;
    (void)t;
    return j;
}

inline json report_to_json(const ValidationReport& rep) {
    json j;
    j["schema_version"] = kSchemaVersion;
    json checks = json::array();
    for (const CheckResult& c : rep.checks) {
        const char* status = c.status == CheckStatus::Pass ? "pass"
                           : c.status == CheckStatus::Fail ? "fail"
                                                           : "info";
        checks.push_back({{"id", c.id}, {"status", status}, {"detail", c.detail}});
    }
    j["checks"] = checks;
    j["all_passed"] = rep.all_passed();
    return j;
}

} // namespace vmesh
