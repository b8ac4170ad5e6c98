#pragma once

#include <cstdio>
#include <set>
#include <string>

#include "vmesh/clusters.hpp"
#include "vmesh/tessellation.hpp"

namespace vmesh {

// Deterministic SVG rendering of a tessellation: region polygons, site
// dots, shared adjacency edges, and maximal-cluster highlighting (nuclei
// filled, member regions tinted). The y axis is flipped so the mesh
// renders in screen orientation.
inline std::string render_svg(const Tessellation& t, const std::vector<NucleusCluster>& maximal,
                              double pixel_size = 640.0) {
    const BoundingBox& b = t.bbox;
    double scale = pixel_size / b.scale();
    double w = b.width() * scale;
    double h = b.height() * scale;
    auto X = [&](double x) { return (x - b.min.x) * scale; };
    auto Y = [&](double y) { return h - (y - b.min.y) * scale; };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", v);
        return std::string(buf);
    };

    std::set<std::size_t> nuclei, members;
    for (const NucleusCluster& c : maximal) {
        nuclei.insert(c.nucleus);
        members.insert(c.members.begin(), c.members.end());
    }

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" +
           num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
    out += "<rect width=\"" + num(w) + "\" height=\"" + num(h) + "\" fill=\"white\"/>\n";
    for (std::size_t i = 0; i < t.regions.size(); ++i) {
        const ConvexPolygon& r = t.regions[i];
        if (r.size() < 3) continue;
        std::string fill = nuclei.count(i)    ? "#d8456c"
                           : members.count(i) ? "#f2c3cf"
                                              : "#eef2f7";
        out += "<polygon points=\"";
        for (std::size_t v = 0; v < r.size(); ++v) {
            if (v) out += " ";
            out += num(X(r.vertices[v].x)) + "," + num(Y(r.vertices[v].y));
        }
        out += "\" fill=\"" + fill + "\" stroke=\"#33415c\" stroke-width=\"1\"/>\n";
    }
    for (const SharedEdge& e : t.shared_edges) {
        out += "<line x1=\"" + num(X(e.p.x)) + "\" y1=\"" + num(Y(e.p.y)) + "\" x2=\"" +
               num(X(e.q.x)) + "\" y2=\"" + num(Y(e.q.y)) +
               "\" stroke=\"#7d8597\" stroke-width=\"0.5\"/>\n";
    }
    for (const Point2& s : t.sites) {
        out += "<circle cx=\"" + num(X(s.x)) + "\" cy=\"" + num(Y(s.y)) +
               "\" r=\"2.5\" fill=\"#111\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace vmesh
