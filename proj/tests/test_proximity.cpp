#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "vmesh/ingestion.hpp"
#include "vmesh/proximity.hpp"

using namespace vmesh;

namespace {

constexpr double kPi = std::numbers::pi;

Tessellation grid3x3() {
    std::vector<Point2> sites;
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) sites.push_back({(double)i, (double)j});
    return tessellate(sites, {{-0.5, -0.5}, {2.5, 2.5}});
}

FeatureVector scalar_vec(std::initializer_list<double> vals) {
    FeatureVector fv;
    int k = 0;
    for (double v : vals) fv.push("f" + std::to_string(k++), v);
    return fv;
}

} // namespace

TEST_CASE("strongly_near on the grid fixture") {
    Tessellation t = grid3x3();
    CHECK(strongly_near(t, 4, 1));      // edge neighbor
    CHECK(strongly_near(t, 1, 4));      // symmetric
    CHECK_FALSE(strongly_near(t, 4, 0)); // corner contact only
    CHECK(strongly_near(t, 4, 4));      // reflexive on nonempty regions
    CHECK_THROWS_AS(strongly_near(t, 0, 99), IndexOutOfRange);
}

TEST_CASE("feature_match entry rules") {
    MatchTolerance tol;
    tol.scalar_rel = 0.05;
    FeatureVector a = scalar_vec({1.0});
    CHECK(feature_match(a, a, MatchTolerance::zero()));
    CHECK(feature_match(a, scalar_vec({1.04}), tol));
    CHECK_FALSE(feature_match(a, scalar_vec({1.10}), tol));

    // angular wraparound: 0.05 vs pi-0.05 is circular distance 0.1
    FeatureVector p, q;
    p.push("phi", 0.05, FeatureKind::Angle);
    q.push("phi", kPi - 0.05, FeatureKind::Angle);
    MatchTolerance atol = MatchTolerance::zero();
    atol.angle_abs = 0.15;
    CHECK(feature_match(p, q, atol));
    atol.angle_abs = 0.05;
    CHECK_FALSE(feature_match(p, q, atol));

    // count entries use an absolute integer tolerance
    FeatureVector c4, c6;
    c4.push("edge_count", 4, FeatureKind::Count);
    c6.push("edge_count", 6, FeatureKind::Count);
    MatchTolerance ctol = MatchTolerance::zero();
    CHECK_FALSE(feature_match(c4, c6, ctol));
    ctol.count_abs = 2;
    CHECK(feature_match(c4, c6, ctol));

    CHECK_THROWS_AS(feature_match(a, p, MatchTolerance{}), SchemaMismatch);
}

TEST_CASE("descriptively_near_regions on the grid") {
    Tessellation t = grid3x3();
    MatchTolerance tol; // defaults: 5% scalars, zero count slack
    // the four edge cells are congruent unit squares
    CHECK(descriptively_near_regions(t, 1, 7, tol));
    CHECK(descriptively_near_regions(t, 3, 5, tol));
    CHECK(descriptively_near_regions(t, 4, 4, tol));
    // with location included, distinct congruent cells no longer match
    CHECK_FALSE(descriptively_near_regions(t, 1, 7, tol, /*include_location=*/true));
    CHECK(descriptively_near_regions(t, 4, 4, tol, true));
}

TEST_CASE("descriptively_near distinguishes shape under zero count slack") {
    // hex-lattice center cell (6 edges) vs grid cell (4 edges)
    std::vector<Point2> sites;
    const double dy = std::sqrt(3.0) / 2.0;
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) sites.push_back({c + (r % 2 ? 0.5 : 0.0), r * dy});
    Tessellation hex = tessellate(sites, {{-0.8, -0.8}, {5.3, 4.3}});
    Tessellation grid = grid3x3();
    FeatureVector a = region_descriptor(hex.regions[12]).location_free();
    FeatureVector b = region_descriptor(grid.regions[4]).location_free();
    MatchTolerance loose;
    loose.scalar_rel = 10.0; // only the edge count can discriminate
    CHECK_FALSE(feature_match(a, b, loose));
}

TEST_CASE("descriptive_intersection") {
    Tessellation t = grid3x3();
    auto phi = [&](std::size_t i) { return region_descriptor(t.regions[i]).location_free(); };
    MatchTolerance tol;

    // A = B: every element matches itself, so the result is the union
    std::vector<std::size_t> A{1, 3, 5};
    CHECK(descriptive_intersection(A, A, phi, tol) == A);

    // generic random mesh: at zero tolerance all descriptors are distinct,
    // so separate groups have an empty descriptive intersection
    BoundingBox box{{0, 0}, {1, 1}};
    Tessellation rnd = tessellate(sites_random(30, box, 91), box);
    auto rphi = [&](std::size_t i) { return region_descriptor(rnd.regions[i]).location_free(); };
    std::vector<std::size_t> ga{0, 1, 2, 3, 4}, gb{5, 6, 7, 8, 9};
    MatchTolerance tight = MatchTolerance::zero();
    bool any_cross = false;
    for (std::size_t a : ga)
        for (std::size_t b : gb)
            if (feature_match(rphi(a), rphi(b), tight)) any_cross = true;
    REQUIRE_FALSE(any_cross); // oracle: exhaustive pairwise check
    CHECK(descriptive_intersection(ga, gb, rphi, tight).empty());

    // congruent translated squares match under the location-free schema
    CHECK(descriptive_intersection({1}, {7}, phi, tol) == std::vector<std::size_t>{1, 7});

    // symmetry
    CHECK(descriptive_intersection(ga, gb, rphi, tol) ==
          descriptive_intersection(gb, ga, rphi, tol));
}

TEST_CASE("snd_pointwise") {
    Tessellation t = grid3x3();
    // adjacent regions share boundary points, which describe identically
    CHECK(snd_pointwise(t, 4, 1));
    CHECK(snd_pointwise(t, 1, 4));
    CHECK(snd_pointwise(t, 4, 4));
    // far-apart regions with zero tolerance share no described point
    CHECK_FALSE(snd_pointwise(t, 0, 8));
}

TEST_CASE("lemma 3.1 pointwise on a random mesh") {
    BoundingBox box{{0, 0}, {1, 1}};
    Tessellation t = tessellate(sites_random(60, box, 17), box);
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i; j < t.size(); ++j) {
            if (!strongly_near(t, i, j)) continue;
            INFO("pair " << i << "," << j);
            CHECK(snd_pointwise(t, i, j));
        }
}

TEST_CASE("tolerance monotonicity never flips a match off") {
    Tessellation t = grid3x3();
    auto phi = [&](std::size_t i) { return region_descriptor(t.regions[i]).location_free(); };
    std::vector<MatchTolerance> ladder;
    for (double s : {0.0, 0.01, 0.05, 0.2, 1.0}) {
        MatchTolerance tol = MatchTolerance::zero();
        tol.scalar_rel = s;
        tol.count_abs = s * 10;
        tol.angle_abs = std::min(s, kPi / 2);
        ladder.push_back(tol);
    }
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) {
            bool prev = false;
            for (const MatchTolerance& tol : ladder) {
                bool now = feature_match(phi(i), phi(j), tol);
                if (prev) CHECK(now); // enlarging tolerances keeps matches
                prev = now;
            }
        }
    // result sets of descriptive_intersection grow with tolerance
    std::vector<std::size_t> A{0, 1, 4}, B{5, 8};
    std::size_t prev_size = 0;
    for (const MatchTolerance& tol : ladder) {
        auto r = descriptive_intersection(A, B, phi, tol);
        CHECK(r.size() >= prev_size);
        prev_size = r.size();
    }
}

TEST_CASE("proximity predicates are symmetric") {
    BoundingBox box{{0, 0}, {1, 1}};
    Tessellation t = tessellate(sites_random(40, box, 23), box);
    MatchTolerance tol;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            CHECK(strongly_near(t, i, j) == strongly_near(t, j, i));
            CHECK(descriptively_near_regions(t, i, j, tol) ==
                  descriptively_near_regions(t, j, i, tol));
        }
}
