#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

#include "vmesh/descriptors.hpp"
#include "vmesh/tessellation.hpp"

namespace vmesh {

struct MatchTolerance {
    double scalar_rel = 0.05;                     // relative, non-angular reals
    double angle_abs = 10.0 * std::numbers::pi / 180.0; // radians, circular
    double count_abs = 0.0;                       // absolute, integer features

    static MatchTolerance zero() { return {0.0, 0.0, 0.0}; }
    static MatchTolerance infinite() {
        double inf = std::numeric_limits<double>::infinity();
        return {inf, std::numbers::pi / 2.0, inf};
    }
};

// Strong proximity between regions: identity, or a stored positive-length
// shared boundary segment.
inline bool strongly_near(const Tessellation& t, std::size_t i, std::size_t j) {
    if (!t.valid_index(i) || !t.valid_index(j)) throw IndexOutOfRange("region index out of range");
    return i == j || t.adjacent(i, j);
}

// Per-entry match: angles by circular distance, counts by absolute
// difference, everything else by relative difference.
inline bool feature_match(const FeatureVector& a, const FeatureVector& b,
                          const MatchTolerance& tol) {
    if (!a.same_schema(b)) throw SchemaMismatch("feature vectors have different schemas");
    for (std::size_t k = 0; k < a.size(); ++k) {
        double x = a.values[k], y = b.values[k];
        switch (a.kinds[k]) {
            case FeatureKind::Angle:
                if (angle_distance(x, y) > tol.angle_abs) return false;
                break;
            case FeatureKind::Count:
                if (std::abs(x - y) > tol.count_abs) return false;
                break;
            case FeatureKind::Scalar:
                if (std::abs(x - y) > tol.scalar_rel * std::max({std::abs(x), std::abs(y), 1.0}))
                    return false;
                break;
        }
    }
    return true;
}

// Region-level descriptive strong proximity. Location entries are
// excluded by default so congruent regions match anywhere in the mesh.
inline bool descriptively_near_regions(const Tessellation& t, std::size_t i, std::size_t j,
                                       const MatchTolerance& tol,
                                       bool include_location = false) {
    if (!t.valid_index(i) || !t.valid_index(j)) throw IndexOutOfRange("region index out of range");
    FeatureVector a = region_descriptor(t.regions[i]);
    FeatureVector b = region_descriptor(t.regions[j]);
    if (!include_location) {
        a = a.location_free();
        b = b.location_free();
    }
    return feature_match(a, b, tol);
}

// Descriptive intersection of two id sets under a descriptor:
// elements of A ∪ B whose description matches one in A and one in B.
inline std::vector<std::size_t>
descriptive_intersection(const std::vector<std::size_t>& A, const std::vector<std::size_t>& B,
                         const std::function<FeatureVector(std::size_t)>& phi,
                         const MatchTolerance& tol) {
    std::vector<std::size_t> uni;
    uni.insert(uni.end(), A.begin(), A.end());
    uni.insert(uni.end(), B.begin(), B.end());
    std::sort(uni.begin(), uni.end());
    uni.erase(std::unique(uni.begin(), uni.end()), uni.end());

    std::vector<std::size_t> out;
    for (std::size_t x : uni) {
        FeatureVector fx = phi(x);
        auto matches_any = [&](const std::vector<std::size_t>& S) {
            for (std::size_t s : S)
                if (feature_match(fx, phi(s), tol)) return true;
            return false;
        };
        if (matches_any(A) && matches_any(B)) out.push_back(x);
    }
    return out;
}

// Boundary sample set for pointwise descriptive proximity: polygon
// vertices, midpoints of stored shared segments, and 32 uniform
// perimeter samples. Shared-segment midpoints are computed from the
// segment record, so both incident regions sample the identical point.
inline std::vector<Point2> boundary_samples(const Tessellation& t, std::size_t i,
                                            std::size_t uniform_count = 32) {
    const ConvexPolygon& r = t.regions[i];
    std::vector<Point2> out = r.vertices;
    for (std::size_t e : t.neighbors[i]) {
        const SharedEdge& se = t.shared_edges[e];
        out.push_back(0.5 * (se.p + se.q));
    }
    const std::size_t n = r.size();
    if (n >= 2 && uniform_count > 0) {
        std::vector<double> cum{0.0};
        for (std::size_t e = 0; e < n; ++e)
            cum.push_back(cum.back() + dist(r.vertices[e], r.vertices[(e + 1) % n]));
        double per = cum.back();
        if (per > 0) {
            for (std::size_t s = 0; s < uniform_count; ++s) {
                double target = per * (double)s / (double)uniform_count;
                auto it = std::upper_bound(cum.begin(), cum.end(), target);
                std::size_t e = std::min<std::size_t>((std::size_t)(it - cum.begin()) - 1, n - 1);
                Point2 a = r.vertices[e], b = r.vertices[(e + 1) % n];
                double len = cum[e + 1] - cum[e];
                double u = len > 0 ? std::clamp((target - cum[e]) / len, 0.0, 1.0) : 0.0;
                out.push_back(a + u * (b - a));
            }
        }
    }
    return out;
}

// Pointwise descriptive strong proximity: some sampled boundary point of
// region i matches some sampled boundary point of region j under the
// location-inclusive point descriptor.
inline bool snd_pointwise(const Tessellation& t, std::size_t i, std::size_t j,
                          const MatchTolerance& tol = MatchTolerance::zero(),
                          const GrayImage* img = nullptr) {
    if (!t.valid_index(i) || !t.valid_index(j)) throw IndexOutOfRange("region index out of range");
    if (i == j) return t.regions[i].size() > 0;
    std::vector<Point2> si = boundary_samples(t, i);
    std::vector<Point2> sj = boundary_samples(t, j);
    for (const Point2& p : si) {
        FeatureVector fp = point_descriptor(p, img);
        for (const Point2& q : sj)
            if (feature_match(fp, point_descriptor(q, img), tol)) return true;
    }
    return false;
}

} // namespace vmesh
