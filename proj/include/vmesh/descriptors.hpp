#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "vmesh/geometry.hpp"

namespace vmesh {

enum class FeatureKind : std::uint8_t {
    Scalar, // compared with a relative tolerance
    Angle,  // radians in [0, pi), compared on the circle
    Count   // integer-valued, compared with an absolute tolerance
};

struct FeatureVector {
    std::vector<double> values;
    std::vector<std::string> schema;
    std::vector<FeatureKind> kinds;

    std::size_t size() const { return values.size(); }

    bool same_schema(const FeatureVector& o) const {
        return schema == o.schema && kinds == o.kinds;
    }

    void push(std::string name, double value, FeatureKind kind = FeatureKind::Scalar) {
        schema.push_back(std::move(name));
        values.push_back(value);
        kinds.push_back(kind);
    }

    // drop the leading location entries (x/y or centroid_x/centroid_y)
    FeatureVector location_free() const {
        FeatureVector out;
        for (std::size_t i = 0; i < size(); ++i) {
            if (schema[i] == "x" || schema[i] == "y" ||
                schema[i] == "centroid_x" || schema[i] == "centroid_y")
                continue;
            out.push(schema[i], values[i], kinds[i]);
        }
        return out;
    }
};

struct GrayImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<double> pixels; // row-major, [0,255]

    double at(std::size_t x, std::size_t y) const { return pixels[y * width + x]; }
};

// Fold an undirected direction angle into [0, pi).
inline double fold_angle(double a) {
    const double pi = std::numbers::pi;
    a = std::fmod(a, pi);
    if (a < 0) a += pi;
    if (a >= pi) a -= pi;
    return a;
}

// Circular distance between undirected orientations in [0, pi).
inline double angle_distance(double a, double b) {
    const double pi = std::numbers::pi;
    double d = std::abs(fold_angle(a) - fold_angle(b));
    return std::min(d, pi - d);
}

struct GradientResponse {
    double gx = 0.0;
    double gy = 0.0;
    double magnitude() const { return std::hypot(gx, gy); }
    double orientation() const {
        if (magnitude() == 0.0) return 0.0;
        return fold_angle(std::atan2(gy, gx));
    }
};

// 3x3 Sobel response at an interior pixel.
inline GradientResponse sobel(const GrayImage& img, std::size_t px, std::size_t py) {
    if (img.width < 3 || img.height < 3 || px < 1 || py < 1 ||
        px + 1 >= img.width || py + 1 >= img.height)
        throw StencilOutOfBounds("Sobel stencil outside image");
    auto I = [&](std::size_t x, std::size_t y) { return img.at(x, y); };
    GradientResponse g;
    g.gx = (I(px + 1, py - 1) + 2 * I(px + 1, py) + I(px + 1, py + 1)) -
           (I(px - 1, py - 1) + 2 * I(px - 1, py) + I(px - 1, py + 1));
    g.gy = (I(px - 1, py + 1) + 2 * I(px, py + 1) + I(px + 1, py + 1)) -
           (I(px - 1, py - 1) + 2 * I(px, py - 1) + I(px + 1, py - 1));
    return g;
}

// Gradient orientation atan2(gy,gx) folded into [0,pi); zero-gradient
// pixels report 0 (query sobel(...).magnitude() to distinguish).
inline double gradient_orientation(const GrayImage& img, std::size_t px, std::size_t py) {
    return sobel(img, px, py).orientation();
}

// Point description (x, y) or, with an image, (x, y, phi). The point is
// taken in the image's own coordinate box [0,width]x[0,height].
inline FeatureVector point_descriptor(Point2 p, const GrayImage* img = nullptr) {
    FeatureVector fv;
    fv.push("x", p.x);
    fv.push("y", p.y);
    if (img) {
        if (p.x < 0 || p.y < 0 || p.x >= (double)img->width || p.y >= (double)img->height)
            throw OutOfImageBounds("point outside image");
        auto px = (std::size_t)std::clamp(p.x, 1.0, (double)img->width - 2.0);
        auto py = (std::size_t)std::clamp(p.y, 1.0, (double)img->height - 2.0);
        fv.push("phi", gradient_orientation(*img, px, py), FeatureKind::Angle);
    }
    return fv;
}

// Region description (centroid_x, centroid_y, area, diameter, edge_count).
inline FeatureVector region_descriptor(const ConvexPolygon& r) {
    if (r.size() < 3) throw DegeneratePolygon("region descriptor needs >= 3 vertices");
    Point2 c = polygon_centroid(r);
    FeatureVector fv;
    fv.push("centroid_x", c.x);
    fv.push("centroid_y", c.y);
    fv.push("area", polygon_area(r));
    fv.push("diameter", polygon_diameter(r));
    fv.push("edge_count", (double)r.size(), FeatureKind::Count);
    return fv;
}

// One orientation in [0,pi) per polygon edge (undirected edge direction).
inline std::vector<double> edge_orientations(const ConvexPolygon& r) {
    if (r.size() < 2) throw DegeneratePolygon("edge orientations need >= 2 vertices");
    std::vector<double> out;
    const std::size_t n = r.size();
    const std::size_t edges = n == 2 ? 1 : n;
    for (std::size_t i = 0; i < edges; ++i) {
        Point2 d = r.vertices[(i + 1) % n] - r.vertices[i];
        out.push_back(fold_angle(std::atan2(d.y, d.x)));
    }
    return out;
}

} // namespace vmesh
