#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "vmesh/errors.hpp"

namespace vmesh {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double k, Point2 p) { return {k * p.x, k * p.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point2 a) { return dot(a, a); }
inline double norm(Point2 a) { return std::sqrt(norm2(a)); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

inline bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct BoundingBox {
    Point2 min;
    Point2 max;

    double width() const { return max.x - min.x; }
    double height() const { return max.y - min.y; }
    double area() const { return width() * height(); }
    // uniform normalization scale: longest side
    double scale() const { return std::max(width(), height()); }

    bool valid() const {
        return finite(min) && finite(max) && min.x < max.x && min.y < max.y;
    }
    bool contains(Point2 p) const {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
    }
    bool strictly_contains(Point2 p) const {
        return p.x > min.x && p.x < max.x && p.y > min.y && p.y < max.y;
    }
};

// Decision threshold for sign classification of predicates, stated on
// coordinates normalized to the unit box.
inline constexpr double kPredicateEps = 1e-12;
// Sites closer than this (normalized) are merged before tessellation.
inline constexpr double kMergeEps = 1e-9;
// Shared boundary segments shorter than this (normalized) do not count
// as adjacency; corner-only contact falls below it.
inline constexpr double kAdjacencyLengthEps = 1e-9;
// Vertex cleanup threshold (normalized): duplicate and collinear removal.
inline constexpr double kVertexEps = 1e-12;

// Signed double area of triangle abc; positive when CCW.
inline long double orient2d(Point2 a, Point2 b, Point2 c) {
    long double acx = (long double)a.x - (long double)c.x;
    long double acy = (long double)a.y - (long double)c.y;
    long double bcx = (long double)b.x - (long double)c.x;
    long double bcy = (long double)b.y - (long double)c.y;
    return acx * bcy - acy * bcx;
}

// Positive when d lies strictly inside the circumcircle of CCW triangle abc.
inline long double incircle(Point2 a, Point2 b, Point2 c, Point2 d) {
    long double adx = (long double)a.x - (long double)d.x;
    long double ady = (long double)a.y - (long double)d.y;
    long double bdx = (long double)b.x - (long double)d.x;
    long double bdy = (long double)b.y - (long double)d.y;
    long double cdx = (long double)c.x - (long double)d.x;
    long double cdy = (long double)c.y - (long double)d.y;

    long double ad2 = adx * adx + ady * ady;
    long double bd2 = bdx * bdx + bdy * bdy;
    long double cd2 = cdx * cdx + cdy * cdy;

    return adx * (bdy * cd2 - cdy * bd2)
         - ady * (bdx * cd2 - cdx * bd2)
         + ad2 * (bdx * cdy - cdx * bdy);
}

// Convex polygon, CCW vertex order. Zero vertices (empty set) and one
// vertex (single point) are valid and convex; two vertices represent a
// segment.
struct ConvexPolygon {
    std::vector<Point2> vertices;

    std::size_t size() const { return vertices.size(); }
    bool empty() const { return vertices.empty(); }
};

// All turns share a sign (zero turns allowed); vertex count <= 2 is
// convex by definition.
inline bool is_convex(const ConvexPolygon& p) {
    const std::size_t n = p.vertices.size();
    if (n <= 2) return true;
    bool pos = false, neg = false;
    for (std::size_t i = 0; i < n; ++i) {
        Point2 a = p.vertices[i];
        Point2 b = p.vertices[(i + 1) % n];
        Point2 c = p.vertices[(i + 2) % n];
        double cr = cross(b - a, c - b);
        double tol = 1e-9 * norm(b - a) * norm(c - b);
        if (cr > tol) pos = true;
        if (cr < -tol) neg = true;
    }
    return !(pos && neg);
}

inline double polygon_area(const ConvexPolygon& p) {
    const std::size_t n = p.vertices.size();
    if (n < 3) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Point2 a = p.vertices[i];
        Point2 b = p.vertices[(i + 1) % n];
        s += cross(a, b);
    }
    return 0.5 * s;
}

inline Point2 polygon_centroid(const ConvexPolygon& p) {
    const std::size_t n = p.vertices.size();
    if (n == 0) return {0, 0};
    if (n == 1) return p.vertices[0];
    if (n == 2) return 0.5 * (p.vertices[0] + p.vertices[1]);
    double a = 0.0;
    Point2 c{0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        Point2 u = p.vertices[i];
        Point2 v = p.vertices[(i + 1) % n];
        double w = cross(u, v);
        a += w;
        c.x += (u.x + v.x) * w;
        c.y += (u.y + v.y) * w;
    }
    if (std::abs(a) < std::numeric_limits<double>::min()) return p.vertices[0];
    return {c.x / (3.0 * a), c.y / (3.0 * a)};
}

inline double polygon_diameter(const ConvexPolygon& p) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < p.vertices.size(); ++j)
            d2 = std::max(d2, norm2(p.vertices[i] - p.vertices[j]));
    return std::sqrt(d2);
}

inline double polygon_perimeter(const ConvexPolygon& p) {
    const std::size_t n = p.vertices.size();
    if (n < 2) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += dist(p.vertices[i], p.vertices[(i + 1) % n]);
    return s;
}

// Boundary-inclusive point-in-convex-polygon test (CCW polygon).
inline bool polygon_contains(const ConvexPolygon& p, Point2 q, double tol = 0.0) {
    const std::size_t n = p.vertices.size();
    if (n == 0) return false;
    if (n == 1) return dist(p.vertices[0], q) <= tol;
    for (std::size_t i = 0; i < n; ++i) {
        Point2 a = p.vertices[i];
        Point2 b = p.vertices[(i + 1) % std::max<std::size_t>(n, 1)];
        if (n == 2 && i == 1) break;
        double len = dist(a, b);
        if (len <= 0) continue;
        if (cross(b - a, q - a) / len < -tol) return false;
    }
    if (n == 2) {
        // segment: also require q within the strip between endpoints
        Point2 a = p.vertices[0], b = p.vertices[1];
        double len = dist(a, b);
        if (len <= 0) return dist(a, q) <= tol;
        if (std::abs(cross(b - a, q - a)) / len > tol) return false;
        double t = dot(q - a, b - a) / (len * len);
        return t >= -tol / len && t <= 1.0 + tol / len;
    }
    return true;
}

inline double point_segment_distance(Point2 p, Point2 a, Point2 b) {
    Point2 ab = b - a;
    double l2 = norm2(ab);
    if (l2 <= 0) return dist(p, a);
    double t = std::clamp(dot(p - a, ab) / l2, 0.0, 1.0);
    return dist(p, a + t * ab);
}

inline double distance_to_boundary(const ConvexPolygon& p, Point2 q) {
    const std::size_t n = p.vertices.size();
    if (n == 0) return std::numeric_limits<double>::infinity();
    if (n == 1) return dist(p.vertices[0], q);
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        d = std::min(d, point_segment_distance(q, p.vertices[i], p.vertices[(i + 1) % n]));
    return d;
}

// Removes consecutive near-duplicate vertices, then vertices lying on the
// line through their neighbors. `eps` is an absolute distance.
inline ConvexPolygon cleanup_polygon(ConvexPolygon p, double eps) {
    auto& v = p.vertices;
    // duplicate removal (cyclic)
    std::vector<Point2> out;
    for (const Point2& q : v) {
        if (out.empty() || dist(out.back(), q) > eps) out.push_back(q);
    }
    while (out.size() >= 2 && dist(out.front(), out.back()) <= eps) out.pop_back();
    // collinear removal
    if (out.size() >= 3) {
        std::vector<Point2> kept;
        const std::size_t n = out.size();
        for (std::size_t i = 0; i < n; ++i) {
            Point2 prev = out[(i + n - 1) % n];
            Point2 cur = out[i];
            Point2 next = out[(i + 1) % n];
            if (point_segment_distance(cur, prev, next) > eps) kept.push_back(cur);
        }
        if (kept.size() >= 3) out = std::move(kept);
        else if (!kept.empty()) out = std::move(kept);
    }
    p.vertices = std::move(out);
    return p;
}

// Clip a convex CCW polygon against the half-plane n·x <= c, keeping the
// side where inside(x) = n·x - c <= 0. Preserves CCW order.
inline ConvexPolygon clip_half_plane(const ConvexPolygon& poly, Point2 n, double c) {
    const std::size_t m = poly.vertices.size();
    if (m == 0) return poly;
    ConvexPolygon out;
    if (m == 1) {
        if (dot(n, poly.vertices[0]) <= c) out = poly;
        return out;
    }
    auto side = [&](Point2 p) { return dot(n, p) - c; };
    // open polyline for a segment, closed ring otherwise
    const bool ring = m >= 3;
    const std::size_t edges = ring ? m : m - 1;
    for (std::size_t i = 0; i < edges; ++i) {
        Point2 a = poly.vertices[i];
        Point2 b = poly.vertices[(i + 1) % m];
        double sa = side(a), sb = side(b);
        if (sa <= 0) out.vertices.push_back(a);
        if ((sa < 0 && sb > 0) || (sa > 0 && sb < 0)) {
            double t = sa / (sa - sb);
            out.vertices.push_back(a + t * (b - a));
        }
    }
    if (!ring) {
        double sb = side(poly.vertices.back());
        if (sb <= 0) out.vertices.push_back(poly.vertices.back());
    }
    return out;
}

inline ConvexPolygon rectangle_polygon(const BoundingBox& b) {
    return ConvexPolygon{{{b.min.x, b.min.y}, {b.max.x, b.min.y}, {b.max.x, b.max.y}, {b.min.x, b.max.y}}};
}

namespace detail {

inline ConvexPolygon clip_by_polygon_edges(ConvexPolygon subject, const ConvexPolygon& clip) {
    const std::size_t m = clip.vertices.size();
    for (std::size_t i = 0; i < m && !subject.empty(); ++i) {
        Point2 a = clip.vertices[i];
        Point2 b = clip.vertices[(i + 1) % m];
        // inside of edge a->b for CCW clip polygon: cross(b-a, x-a) >= 0,
        // i.e. n·x <= c with n = perp(b-a) rotated to point outward
        Point2 e = b - a;
        Point2 nrm{e.y, -e.x}; // outward normal
        subject = clip_half_plane(subject, nrm, dot(nrm, a));
    }
    return subject;
}

inline ConvexPolygon segment_segment_intersection(Point2 a, Point2 b, Point2 c, Point2 d, double eps) {
    Point2 ab = b - a, cd = d - c;
    double denom = cross(ab, cd);
    double lab = norm(ab), lcd = norm(cd);
    if (std::abs(denom) <= eps * lab * lcd) {
        // parallel; collinear overlap or nothing
        if (std::abs(cross(ab, c - a)) > eps * lab * std::max(1.0, dist(a, c))) return {};
        auto t = [&](Point2 p) { return dot(p - a, ab) / (lab * lab); };
        double t0 = std::clamp(std::min(t(c), t(d)), 0.0, 1.0);
        double t1 = std::clamp(std::max(t(c), t(d)), 0.0, 1.0);
        if (t1 - t0 <= 0) {
            if (std::max(t(c), t(d)) < 0 || std::min(t(c), t(d)) > 1) return {};
        }
        Point2 p0 = a + t0 * ab, p1 = a + t1 * ab;
        if (dist(p0, p1) <= eps) return ConvexPolygon{{p0}};
        return ConvexPolygon{{p0, p1}};
    }
    double t = cross(c - a, cd) / denom;
    double u = cross(c - a, ab) / denom;
    double tolt = eps, tolu = eps;
    if (t < -tolt || t > 1 + tolt || u < -tolu || u > 1 + tolu) return {};
    return ConvexPolygon{{a + std::clamp(t, 0.0, 1.0) * ab}};
}

} // namespace detail

// Intersection of two convex polygons; handles the degenerate cases
// (empty, point, segment) on either side. The result may itself be
// empty, a point, or a segment.
inline ConvexPolygon convex_intersection(const ConvexPolygon& a, const ConvexPolygon& b,
                                         double eps = 1e-12) {
    if (a.empty() || b.empty()) return {};
    const std::size_t na = a.size(), nb = b.size();
    if (na == 1) return polygon_contains(b, a.vertices[0], eps) ? a : ConvexPolygon{};
    if (nb == 1) return polygon_contains(a, b.vertices[0], eps) ? b : ConvexPolygon{};
    if (na == 2 && nb == 2)
        return detail::segment_segment_intersection(a.vertices[0], a.vertices[1],
                                                    b.vertices[0], b.vertices[1], eps);
    ConvexPolygon r;
    if (na == 2) r = detail::clip_by_polygon_edges(a, b);
    else if (nb == 2) r = detail::clip_by_polygon_edges(b, a);
    else r = detail::clip_by_polygon_edges(a, b);
    return cleanup_polygon(std::move(r), eps);
}

} // namespace vmesh
