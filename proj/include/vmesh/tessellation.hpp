#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vmesh/delaunay.hpp"
#include "vmesh/geometry.hpp"

namespace vmesh {

// Positive-length boundary segment shared by regions a < b. Both regions
// reference the same record, so the segment coordinates are bitwise
// identical from either side.
struct SharedEdge {
    std::size_t a = 0;
    std::size_t b = 0;
    Point2 p;
    Point2 q;
    double length = 0.0;
};

struct Tessellation {
    std::vector<Point2> sites;            // merged sites, index-aligned with regions
    std::vector<ConvexPolygon> regions;   // clipped to bbox, CCW
    BoundingBox bbox;
    std::vector<SharedEdge> shared_edges;
    // per region: indices into shared_edges, sorted by the other region's index
    std::vector<std::vector<std::size_t>> neighbors;
    std::vector<std::string> warnings;

    std::size_t size() const { return regions.size(); }

    bool valid_index(std::size_t i) const { return i < regions.size(); }

    std::size_t degree(std::size_t i) const { return neighbors[i].size(); }

    std::size_t other_region(std::size_t edge, std::size_t i) const {
        const SharedEdge& e = shared_edges[edge];
        return e.a == i ? e.b : e.a;
    }

    // true iff a positive-length shared segment is stored for i under j
    bool adjacent(std::size_t i, std::size_t j) const {
        for (std::size_t e : neighbors[i])
            if (other_region(e, i) == j) return true;
        return false;
    }

    std::optional<std::size_t> shared_edge_between(std::size_t i, std::size_t j) const {
        for (std::size_t e : neighbors[i])
            if (other_region(e, i) == j) return e;
        return std::nullopt;
    }

    std::size_t nearest_site(Point2 p) const {
        std::size_t best = 0;
        double bd = norm2(p - sites[0]);
        for (std::size_t i = 1; i < sites.size(); ++i) {
            double d = norm2(p - sites[i]);
            if (d < bd) { bd = d; best = i; }
        }
        return best;
    }
};

namespace detail {

// Clip the bbox rectangle by the bisector half-planes of `site` against
// each candidate. Keeps the side nearer `site`.
inline ConvexPolygon clip_region(Point2 site, const std::vector<Point2>& candidates,
                                 const BoundingBox& bbox, double eps) {
    ConvexPolygon poly = rectangle_polygon(bbox);
    for (const Point2& q : candidates) {
        Point2 n = q - site;
        double c = dot(n, 0.5 * (site + q));
        poly = clip_half_plane(poly, n, c);
        if (poly.empty()) break;
    }
    return cleanup_polygon(std::move(poly), eps);
}

inline bool on_bbox_boundary(Point2 a, Point2 b, const BoundingBox& box, double eps) {
    auto both_on = [&](double va, double vb, double target) {
        return std::abs(va - target) <= eps && std::abs(vb - target) <= eps;
    };
    return both_on(a.x, b.x, box.min.x) || both_on(a.x, b.x, box.max.x) ||
           both_on(a.y, b.y, box.min.y) || both_on(a.y, b.y, box.max.y);
}

// Adjacency from region boundary edges: every interior edge of region i
// lies on the bisector with exactly one other site, found as the nearest
// co-equidistant site to the edge midpoint. Pairs are recorded once, from
// the lower-index region, so both sides share one segment record.
inline void build_adjacency(Tessellation& t, double scale) {
    const double len_eps = kAdjacencyLengthEps * scale;
    const double eq_eps = 1e-6 * scale;
    t.neighbors.assign(t.regions.size(), {});
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < t.regions.size(); ++i) {
        const auto& v = t.regions[i].vertices;
        const std::size_t n = v.size();
        if (n < 2) continue;
        for (std::size_t e = 0; e < n; ++e) {
            Point2 a = v[e], b = v[(e + 1) % n];
            if (n == 2 && e == 1) break;
            double len = dist(a, b);
            if (len <= len_eps) continue;
            if (on_bbox_boundary(a, b, t.bbox, 1e-9 * scale)) continue;
            Point2 m = 0.5 * (a + b);
            double di = dist(m, t.sites[i]);
            std::size_t j = Triangulation::npos;
            double dj = std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < t.sites.size(); ++k) {
                if (k == i) continue;
                double d = dist(m, t.sites[k]);
                if (d < dj) { dj = d; j = k; }
            }
            if (j == Triangulation::npos) continue;
            if (std::abs(dj - di) > eq_eps) continue; // not a bisector edge
            auto key = std::minmax(i, j);
            if (seen.count(key)) continue;
            if (i > j) continue; // recorded when region j is processed
            seen.insert(key);
            t.shared_edges.push_back({i, j, a, b, len});
        }
    }
    for (std::size_t e = 0; e < t.shared_edges.size(); ++e) {
        t.neighbors[t.shared_edges[e].a].push_back(e);
        t.neighbors[t.shared_edges[e].b].push_back(e);
    }
    for (std::size_t i = 0; i < t.neighbors.size(); ++i) {
        auto& lst = t.neighbors[i];
        std::sort(lst.begin(), lst.end(), [&](std::size_t x, std::size_t y) {
            return t.other_region(x, i) < t.other_region(y, i);
        });
    }
}

struct NormalizedInput {
    std::vector<Point2> sites;   // merged, normalized
    BoundingBox nbox;            // normalized bbox (inside the unit box)
    Point2 origin;               // original bbox.min
    double scale;                // original bbox longest side
    std::vector<std::string> warnings;
};

inline NormalizedInput normalize_sites(const std::vector<Point2>& sites, const BoundingBox& bbox) {
    if (!bbox.valid()) throw DegenerateInput("bounding box must have positive area");
    if (sites.empty()) throw TooFewSites("no sites");
    for (const Point2& s : sites) {
        if (!finite(s)) throw DegenerateInput("non-finite site coordinate");
        if (!bbox.strictly_contains(s)) throw SiteOutsideBox("site outside bounding box");
    }
    NormalizedInput out;
    out.origin = bbox.min;
    out.scale = bbox.scale();
    out.nbox = {{0.0, 0.0}, {bbox.width() / out.scale, bbox.height() / out.scale}};
    std::vector<Point2> norm;
    norm.reserve(sites.size());
    for (const Point2& s : sites)
        norm.push_back({(s.x - out.origin.x) / out.scale, (s.y - out.origin.y) / out.scale});
    out.sites = merge_close_points(norm, kMergeEps, &out.warnings);
    return out;
}

// Per-site candidate lists; empty outer vector means "all other sites".
inline Tessellation build_tessellation(const NormalizedInput& in,
                                       const std::vector<std::vector<std::size_t>>& candidates) {
    Tessellation t;
    t.bbox = in.nbox;
    t.sites = in.sites;
    t.warnings = in.warnings;
    t.regions.reserve(in.sites.size());
    for (std::size_t i = 0; i < in.sites.size(); ++i) {
        std::vector<Point2> others;
        if (candidates.empty()) {
            for (std::size_t j = 0; j < in.sites.size(); ++j)
                if (j != i) others.push_back(in.sites[j]);
        } else {
            for (std::size_t j : candidates[i]) others.push_back(in.sites[j]);
        }
        t.regions.push_back(clip_region(in.sites[i], others, in.nbox, kVertexEps));
    }
    build_adjacency(t, 1.0); // normalized units
    // map back to input coordinates
    auto denorm = [&](Point2 p) {
        return Point2{p.x * in.scale + in.origin.x, p.y * in.scale + in.origin.y};
    };
    for (Point2& s : t.sites) s = denorm(s);
    for (ConvexPolygon& r : t.regions)
        for (Point2& v : r.vertices) v = denorm(v);
    for (SharedEdge& e : t.shared_edges) {
        e.p = denorm(e.p);
        e.q = denorm(e.q);
        e.length *= in.scale;
    }
    t.bbox = {denorm(in.nbox.min), denorm(in.nbox.max)};
    return t;
}

} // namespace detail

// Direct definition: each region is the bbox clipped by the bisector
// half-planes of every other site. Serves as the oracle and as the path
// for 1-2 sites or collinear inputs.
inline Tessellation voronoi_bruteforce(const std::vector<Point2>& sites, const BoundingBox& bbox) {
    detail::NormalizedInput in = detail::normalize_sites(sites, bbox);
    return detail::build_tessellation(in, {});
}

// Dual route: each region is clipped only by the bisectors of its
// Delaunay 2-ring, which always contains every binding neighbor.
inline Tessellation voronoi_from_delaunay(const Triangulation& tri, const BoundingBox& bbox) {
    detail::NormalizedInput in = detail::normalize_sites(tri.sites, bbox);
    if (in.sites.size() != tri.sites.size())
        throw DegenerateInput("triangulation contains duplicate sites");
    auto ring1 = tri.vertex_neighbors();
    std::vector<std::vector<std::size_t>> cand(in.sites.size());
    for (std::size_t i = 0; i < in.sites.size(); ++i) {
        std::set<std::size_t> s(ring1[i].begin(), ring1[i].end());
        for (std::size_t j : ring1[i]) s.insert(ring1[j].begin(), ring1[j].end());
        s.erase(i);
        cand[i].assign(s.begin(), s.end());
    }
    return detail::build_tessellation(in, cand);
}

// End-to-end construction: merges duplicates, then picks the dual route,
// falling back to brute force for fewer than 3 distinct sites or an
// all-collinear set.
inline Tessellation tessellate(const std::vector<Point2>& sites, const BoundingBox& bbox) {
    detail::NormalizedInput in = detail::normalize_sites(sites, bbox);
    if (in.sites.size() < 3 || detail::all_collinear(in.sites, kPredicateEps))
        return detail::build_tessellation(in, {});
    detail::BowyerWatson bw;
    Triangulation tri = bw.build(in.sites, kPredicateEps);
    auto ring1 = tri.vertex_neighbors();
    std::vector<std::vector<std::size_t>> cand(in.sites.size());
    for (std::size_t i = 0; i < in.sites.size(); ++i) {
        std::set<std::size_t> s(ring1[i].begin(), ring1[i].end());
        for (std::size_t j : ring1[i]) s.insert(ring1[j].begin(), ring1[j].end());
        s.erase(i);
        cand[i].assign(s.begin(), s.end());
    }
    return detail::build_tessellation(in, cand);
}

} // namespace vmesh
