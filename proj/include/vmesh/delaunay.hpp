#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "vmesh/geometry.hpp"

namespace vmesh {

struct Triangulation {
    std::vector<Point2> sites;
    // CCW vertex-index triples
    std::vector<std::array<std::size_t, 3>> triangles;
    // neighbor[t][e] = triangle across the edge opposite vertex e, or npos
    std::vector<std::array<std::size_t, 3>> neighbors;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    // symmetric vertex adjacency from triangle edges
    std::vector<std::vector<std::size_t>> vertex_neighbors() const {
        std::vector<std::vector<std::size_t>> adj(sites.size());
        for (const auto& t : triangles) {
            for (int e = 0; e < 3; ++e) {
                std::size_t u = t[e], v = t[(e + 1) % 3];
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
        }
        for (auto& a : adj) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
        }
        return adj;
    }
};

namespace detail {

// Merge points closer than eps (absolute), keeping the lowest index.
// Returns kept points and, when given, appends a note per merged pair.
inline std::vector<Point2> merge_close_points(const std::vector<Point2>& pts, double eps,
                                              std::vector<std::string>* warnings = nullptr) {
    std::vector<Point2> kept;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dup = false;
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (dist(pts[i], kept[j]) < eps) {
                dup = true;
                if (warnings)
                    warnings->push_back("duplicate site " + std::to_string(i) +
                                        " merged into site " + std::to_string(j));
                break;
            }
        }
        if (!dup) kept.push_back(pts[i]);
    }
    return kept;
}

inline bool all_collinear(const std::vector<Point2>& pts, double eps) {
    if (pts.size() < 3) return true;
    // pick the farthest pair from pts[0] to anchor the line
    std::size_t far = 1;
    for (std::size_t i = 2; i < pts.size(); ++i)
        if (norm2(pts[i] - pts[0]) > norm2(pts[far] - pts[0])) far = i;
    Point2 a = pts[0], b = pts[far];
    double len = dist(a, b);
    if (len <= eps) return true;
    for (const Point2& p : pts)
        if (std::abs(cross(b - a, p - a)) / len > eps) return false;
    return true;
}

class BowyerWatson {
public:
    // pts assumed distinct and not all collinear; works in the caller's
    // (normalized) coordinates
    Triangulation build(const std::vector<Point2>& pts, double eps) {
        eps_ = eps;
        const std::size_t n = pts.size();
        pts_ = pts;
        // super-triangle far outside the unit box
        pts_.push_back({-100.0, -100.0});
        pts_.push_back({300.0, -100.0});
        pts_.push_back({-100.0, 300.0});
        tris_.clear();
        add_triangle(n, n + 1, n + 2, npos, npos, npos);

        for (std::size_t i = 0; i < n; ++i) insert(i);

        Triangulation out;
        out.sites = pts;
        std::map<std::size_t, std::size_t> remap;
        for (std::size_t t = 0; t < tris_.size(); ++t) {
            if (!tris_[t].alive) continue;
            const auto& v = tris_[t].v;
            if (v[0] >= n || v[1] >= n || v[2] >= n) continue;
            remap[t] = out.triangles.size();
            out.triangles.push_back({v[0], v[1], v[2]});
        }
        // rebuild neighbor links over surviving triangles
        out.neighbors.assign(out.triangles.size(), {npos, npos, npos});
        std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, int>> edge_owner;
        for (std::size_t t = 0; t < out.triangles.size(); ++t) {
            for (int e = 0; e < 3; ++e) {
                std::size_t u = out.triangles[t][(e + 1) % 3];
                std::size_t v = out.triangles[t][(e + 2) % 3];
                auto key = std::minmax(u, v);
                auto it = edge_owner.find(key);
                if (it == edge_owner.end()) {
                    edge_owner[key] = {t, e};
                } else {
                    out.neighbors[t][e] = it->second.first;
                    out.neighbors[it->second.first][it->second.second] = t;
                }
            }
        }
        return out;
    }

private:
    static constexpr std::size_t npos = Triangulation::npos;

    struct Tri {
        std::array<std::size_t, 3> v;      // CCW
        std::array<std::size_t, 3> nbr;    // across edge opposite v[e]
        bool alive = true;
    };

    std::vector<Point2> pts_;
    std::vector<Tri> tris_;
    double eps_ = kPredicateEps;

    std::size_t add_triangle(std::size_t a, std::size_t b, std::size_t c,
                             std::size_t na, std::size_t nb, std::size_t nc) {
        tris_.push_back(Tri{{a, b, c}, {na, nb, nc}, true});
        return tris_.size() - 1;
    }

    bool in_closed_circumdisk(const Tri& t, Point2 p) const {
        return incircle(pts_[t.v[0]], pts_[t.v[1]], pts_[t.v[2]], p) > -eps_;
    }

    bool contains_point(const Tri& t, Point2 p) const {
        for (int e = 0; e < 3; ++e) {
            if (orient2d(pts_[t.v[e]], pts_[t.v[(e + 1) % 3]], p) < -eps_) return false;
        }
        return true;
    }

    std::size_t locate(Point2 p) const {
        for (std::size_t t = 0; t < tris_.size(); ++t)
            if (tris_[t].alive && contains_point(tris_[t], p)) return t;
        return npos;
    }

    void insert(std::size_t pi) {
        Point2 p = pts_[pi];
        std::size_t start = locate(p);
        if (start == npos) return; // cannot happen inside the super-triangle

        // cavity: flood fill over triangles whose closed circumdisk holds p
        std::vector<std::size_t> cavity;
        std::vector<char> in_cavity(tris_.size(), 0);
        std::vector<std::size_t> stack{start};
        in_cavity[start] = 1;
        while (!stack.empty()) {
            std::size_t t = stack.back();
            stack.pop_back();
            cavity.push_back(t);
            for (int e = 0; e < 3; ++e) {
                std::size_t nb = tris_[t].nbr[e];
                if (nb == npos || in_cavity[nb] || !tris_[nb].alive) continue;
                if (in_closed_circumdisk(tris_[nb], p)) {
                    in_cavity[nb] = 1;
                    stack.push_back(nb);
                }
            }
        }

        // grow across boundary edges that are degenerate as seen from p
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t idx = 0; idx < cavity.size(); ++idx) {
                std::size_t t = cavity[idx];
                for (int e = 0; e < 3; ++e) {
                    std::size_t nb = tris_[t].nbr[e];
                    if (nb != npos && in_cavity[nb]) continue;
                    std::size_t u = tris_[t].v[(e + 1) % 3];
                    std::size_t v = tris_[t].v[(e + 2) % 3];
                    if (orient2d(pts_[u], pts_[v], p) <= eps_) {
                        if (nb == npos) continue;
                        in_cavity[nb] = 1;
                        cavity.push_back(nb);
                        grew = true;
                    }
                }
            }
        }

        // boundary edges, directed CCW around the cavity
        struct BEdge { std::size_t u, v, outside; };
        std::vector<BEdge> boundary;
        for (std::size_t t : cavity) {
            for (int e = 0; e < 3; ++e) {
                std::size_t nb = tris_[t].nbr[e];
                if (nb != npos && in_cavity[nb]) continue;
                boundary.push_back({tris_[t].v[(e + 1) % 3], tris_[t].v[(e + 2) % 3], nb});
            }
        }
        for (std::size_t t : cavity) tris_[t].alive = false;

        // fan; link new triangles to each other by shared edges with p
        std::map<std::size_t, std::size_t> half_from; // first vertex -> new tri
        std::vector<std::size_t> created;
        for (const BEdge& be : boundary) {
            std::size_t nt = add_triangle(be.u, be.v, pi, npos, npos, npos);
            // edge opposite v[2]=pi is (u,v): outside neighbor
            tris_[nt].nbr[2] = be.outside;
            if (be.outside != npos) {
                Tri& o = tris_[be.outside];
                for (int e = 0; e < 3; ++e) {
                    auto a = o.v[(e + 1) % 3], b = o.v[(e + 2) % 3];
                    if ((a == be.u && b == be.v) || (a == be.v && b == be.u)) o.nbr[e] = nt;
                }
            }
            half_from[be.u] = nt;
            created.push_back(nt);
        }
        for (std::size_t nt : created) {
            std::size_t u = tris_[nt].v[0], v = tris_[nt].v[1];
            // neighbor across edge (v, pi) is the fan triangle starting at v
            auto it = half_from.find(v);
            if (it != half_from.end()) tris_[nt].nbr[0] = it->second;
            // neighbor across edge (pi, u): the fan triangle ending at u
            (void)u;
        }
        // fill remaining fan links via reverse lookup
        std::map<std::size_t, std::size_t> half_to; // second vertex -> new tri
        for (std::size_t nt : created) half_to[tris_[nt].v[1]] = nt;
        for (std::size_t nt : created) {
            auto it = half_to.find(tris_[nt].v[0]);
            if (it != half_to.end()) tris_[nt].nbr[1] = it->second;
        }
    }
};

} // namespace detail

// Bowyer-Watson triangulation with a non-strict empty-circumcircle
// guarantee. Duplicates (closer than 1e-9 of the input extent) are merged
// first; fewer than 3 distinct sites or an all-collinear set is an error.
inline Triangulation delaunay_triangulate(const std::vector<Point2>& sites) {
    for (const Point2& s : sites)
        if (!finite(s)) throw DegenerateInput("non-finite site coordinate");

    // normalize to the unit box for predicate thresholds
    if (sites.empty()) throw TooFewSites("no sites");
    Point2 lo = sites[0], hi = sites[0];
    for (const Point2& s : sites) {
        lo.x = std::min(lo.x, s.x); lo.y = std::min(lo.y, s.y);
        hi.x = std::max(hi.x, s.x); hi.y = std::max(hi.y, s.y);
    }
    double scale = std::max({hi.x - lo.x, hi.y - lo.y, 1e-300});
    std::vector<Point2> norm_sites;
    norm_sites.reserve(sites.size());
    for (const Point2& s : sites)
        norm_sites.push_back({(s.x - lo.x) / scale, (s.y - lo.y) / scale});

    std::vector<Point2> distinct = detail::merge_close_points(norm_sites, kMergeEps);
    if (distinct.size() < 3) throw TooFewSites("need at least 3 distinct sites");
    if (detail::all_collinear(distinct, kPredicateEps)) throw DegenerateInput("sites are collinear");

    detail::BowyerWatson bw;
    Triangulation tri = bw.build(distinct, kPredicateEps);
    // report sites in original coordinates
    for (Point2& s : tri.sites) s = {s.x * scale + lo.x, s.y * scale + lo.y};
    return tri;
}

} // namespace vmesh
