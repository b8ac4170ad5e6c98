#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "vmesh/proximity.hpp"

namespace vmesh {

struct NucleusCluster {
    std::size_t nucleus = 0;
    std::vector<std::size_t> members; // sorted, includes nucleus
    std::size_t adjacency_count = 0;  // |members| - 1 = stored degree of nucleus

    friend bool operator==(const NucleusCluster& a, const NucleusCluster& b) {
        return a.nucleus == b.nucleus && a.members == b.members;
    }
};

struct DescriptiveCluster {
    std::size_t nucleus = 0;
    std::vector<std::size_t> members; // sorted, includes nucleus
    std::string descriptor_name;
    MatchTolerance tolerance;
};

// Cn N: the nucleus plus every region strongly near it.
inline NucleusCluster nucleus_cluster(const Tessellation& t, std::size_t n) {
    if (!t.valid_index(n)) throw IndexOutOfRange("nucleus index out of range");
    NucleusCluster c;
    c.nucleus = n;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (strongly_near(t, i, n)) c.members.push_back(i);
    c.adjacency_count = c.members.size() - 1;
    return c;
}

// Every cluster whose nucleus attains the mesh-wide maximum adjacency
// count, ordered by nucleus index.
inline std::vector<NucleusCluster> maximal_nucleus_clusters(const Tessellation& t) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < t.size(); ++i) best = std::max(best, t.degree(i));
    std::vector<NucleusCluster> out;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t.degree(i) == best) out.push_back(nucleus_cluster(t, i));
    return out;
}

// C_Phi N: every region descriptively near the nucleus.
inline DescriptiveCluster descriptive_nucleus_cluster(const Tessellation& t, std::size_t n,
                                                      const MatchTolerance& tol,
                                                      bool include_location = false) {
    if (!t.valid_index(n)) throw IndexOutOfRange("nucleus index out of range");
    DescriptiveCluster c;
    c.nucleus = n;
    c.descriptor_name = include_location ? "region" : "region_location_free";
    c.tolerance = tol;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (descriptively_near_regions(t, i, n, tol, include_location)) c.members.push_back(i);
    return c;
}

namespace detail {

inline void check_cluster_indices(const Tessellation& t, const NucleusCluster& c) {
    for (std::size_t m : c.members)
        if (!t.valid_index(m)) throw MixedTessellation("cluster member outside tessellation");
    if (!t.valid_index(c.nucleus)) throw MixedTessellation("cluster nucleus outside tessellation");
}

} // namespace detail

// Cn N sn Cn M: some member of one is strongly near some member of the other.
inline bool clusters_strongly_near(const Tessellation& t, const NucleusCluster& c1,
                                   const NucleusCluster& c2) {
    detail::check_cluster_indices(t, c1);
    detail::check_cluster_indices(t, c2);
    for (std::size_t a : c1.members)
        for (std::size_t b : c2.members)
            if (strongly_near(t, a, b)) return true;
    return false;
}

// Cn N snd Cn M under the region-descriptor reading.
inline bool clusters_descriptively_near(const Tessellation& t, const NucleusCluster& c1,
                                        const NucleusCluster& c2, const MatchTolerance& tol,
                                        bool include_location = false) {
    detail::check_cluster_indices(t, c1);
    detail::check_cluster_indices(t, c2);
    for (std::size_t a : c1.members)
        for (std::size_t b : c2.members)
            if (descriptively_near_regions(t, a, b, tol, include_location)) return true;
    return false;
}

// Cn N snd Cn M under the pointwise common-description reading.
inline bool clusters_descriptively_near_pointwise(const Tessellation& t, const NucleusCluster& c1,
                                                  const NucleusCluster& c2,
                                                  const MatchTolerance& tol = MatchTolerance::zero(),
                                                  const GrayImage* img = nullptr) {
    detail::check_cluster_indices(t, c1);
    detail::check_cluster_indices(t, c2);
    for (std::size_t a : c1.members)
        for (std::size_t b : c2.members)
            if (snd_pointwise(t, a, b, tol, img)) return true;
    return false;
}

// Descriptive intersection of cluster member sets (region descriptor).
inline std::vector<std::size_t>
cluster_descriptive_intersection(const Tessellation& t, const NucleusCluster& c1,
                                 const NucleusCluster& c2, const MatchTolerance& tol,
                                 bool include_location = false) {
    detail::check_cluster_indices(t, c1);
    detail::check_cluster_indices(t, c2);
    auto phi = [&](std::size_t i) {
        FeatureVector fv = region_descriptor(t.regions[i]);
        return include_location ? fv : fv.location_free();
    };
    return descriptive_intersection(c1.members, c2.members, phi, tol);
}

enum class CheckStatus { Pass, Fail, Info };

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    std::string detail; // counterexample or informational note
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const CheckResult& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
    const CheckResult* find(const std::string& id) const {
        for (const CheckResult& c : checks)
            if (c.id == id) return &c;
        return nullptr;
    }
};

namespace detail {

struct ValidationContext {
    const Tessellation& t;
    const std::vector<NucleusCluster>& clusters;
    MatchTolerance tol;
    const GrayImage* img;

    std::size_t n() const { return t.size(); }

    // directed stored adjacency, the raw relation as recorded
    std::vector<std::vector<char>> directed;
    // region-level descriptive match (location-free), memoized
    std::vector<FeatureVector> region_desc;
    std::vector<std::vector<char>> desc_match;
    // pointwise snd memo: 0 unknown, 1 false, 2 true
    std::map<std::pair<std::size_t, std::size_t>, bool> sndp_memo;
    // location-inclusive point-descriptor samples per region
    std::vector<std::vector<FeatureVector>> samples;

    void prepare() {
        const std::size_t N = n();
        directed.assign(N, std::vector<char>(N, 0));
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t e : t.neighbors[i])
                directed[i][t.other_region(e, i)] = 1;

        region_desc.reserve(N);
        for (std::size_t i = 0; i < N; ++i)
            region_desc.push_back(region_descriptor(t.regions[i]).location_free());
        desc_match.assign(N, std::vector<char>(N, 0));
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i; j < N; ++j) {
                char m = feature_match(region_desc[i], region_desc[j], tol) ? 1 : 0;
                desc_match[i][j] = desc_match[j][i] = m;
            }

        samples.resize(N);
        for (std::size_t i = 0; i < N; ++i) {
            for (const Point2& p : boundary_samples(t, i))
                samples[i].push_back(point_descriptor(p, img));
        }
    }

    bool sndp(std::size_t i, std::size_t j) {
        if (i == j) return !t.regions[i].empty();
        auto key = std::minmax(i, j);
        auto it = sndp_memo.find(key);
        if (it != sndp_memo.end()) return it->second;
        bool r = false;
        for (const FeatureVector& a : samples[i]) {
            for (const FeatureVector& b : samples[j])
                if (feature_match(a, b, MatchTolerance::zero())) { r = true; break; }
            if (r) break;
        }
        sndp_memo[key] = r;
        return r;
    }

    bool cluster_sn(const NucleusCluster& a, const NucleusCluster& b) const {
        for (std::size_t x : a.members)
            for (std::size_t y : b.members)
                if (x == y || directed[x][y] || directed[y][x]) return true;
        return false;
    }

    bool cluster_snd_region(const NucleusCluster& a, const NucleusCluster& b) const {
        for (std::size_t x : a.members)
            for (std::size_t y : b.members)
                if (desc_match[x][y]) return true;
        return false;
    }

    bool cluster_sndp(const NucleusCluster& a, const NucleusCluster& b) {
        for (std::size_t x : a.members)
            for (std::size_t y : b.members)
                if (sndp(x, y)) return true;
        return false;
    }
};

} // namespace detail

// Runs every theorem check against the given clusters (normally the full
// per-nucleus cluster list of the tessellation). Failures carry a minimal
// counterexample; informational checks never fail.
inline ValidationReport validate_theorems(const Tessellation& t,
                                          const std::vector<NucleusCluster>& clusters,
                                          const MatchTolerance& tol,
                                          const GrayImage* img = nullptr) {
    detail::ValidationContext ctx{t, clusters, tol, img};
    ctx.prepare();
    ValidationReport rep;
    auto add = [&](std::string id, bool pass, std::string detail = "") {
        rep.checks.push_back({std::move(id), pass ? CheckStatus::Pass : CheckStatus::Fail,
                              std::move(detail)});
    };
    auto info = [&](std::string id, std::string detail) {
        rep.checks.push_back({std::move(id), CheckStatus::Info, std::move(detail)});
    };
    const std::size_t N = t.size();

    // 2.3.1: every region belongs to some cluster (its own)
    {
        bool ok = true;
        std::string cx;
        std::vector<char> covered(N, 0);
        for (const NucleusCluster& c : clusters)
            for (std::size_t m : c.members) covered[m] = 1;
        for (std::size_t i = 0; i < N && ok; ++i)
            if (!covered[i]) { ok = false; cx = "region " + std::to_string(i) + " in no cluster"; }
        add("thm_2_3_1_region_in_some_cluster", ok, cx);
    }

    // 2.3.2: cluster integrity — nucleus belongs, members strongly near
    // the nucleus, adjacency_count matches the stored degree
    {
        bool ok = true;
        std::string cx;
        for (const NucleusCluster& c : clusters) {
            if (!std::binary_search(c.members.begin(), c.members.end(), c.nucleus)) {
                ok = false;
                cx = "nucleus " + std::to_string(c.nucleus) + " not a member of its own cluster";
                break;
            }
            for (std::size_t m : c.members) {
                if (m != c.nucleus && !(ctx.directed[m][c.nucleus] || ctx.directed[c.nucleus][m])) {
                    ok = false;
                    cx = "member " + std::to_string(m) + " not strongly near nucleus " +
                         std::to_string(c.nucleus);
                    break;
                }
            }
            if (ok && c.adjacency_count != t.degree(c.nucleus)) {
                ok = false;
                cx = "cluster " + std::to_string(c.nucleus) + " adjacency_count " +
                     std::to_string(c.adjacency_count) + " != stored degree " +
                     std::to_string(t.degree(c.nucleus));
            }
            if (!ok) break;
        }
        add("thm_2_3_2_cluster_near_nucleus", ok, cx);
    }

    // 2.3.3: covering — the union of all clusters equals the region set
    {
        std::set<std::size_t> uni;
        for (const NucleusCluster& c : clusters) uni.insert(c.members.begin(), c.members.end());
        bool ok = uni.size() == N;
        add("thm_2_3_3_covering", ok,
            ok ? "" : "cluster union has " + std::to_string(uni.size()) + " of " +
                      std::to_string(N) + " regions");
    }

    // 2.3.5 (informational): maximal nuclei share an edge-count description
    {
        auto maximal = maximal_nucleus_clusters(t);
        std::string note;
        if (maximal.size() < 2) {
            note = "single maximal cluster; nothing to compare";
        } else {
            note = "maximal nuclei edge counts:";
            bool match = true;
            for (const auto& c : maximal) {
                note += " " + std::to_string(t.regions[c.nucleus].size());
                if (t.regions[c.nucleus].size() != t.regions[maximal[0].nucleus].size())
                    match = false;
            }
            note += match ? " (all matching)" : " (mismatch; expected for clipped meshes)";
        }
        info("thm_2_3_5_maximal_nuclei_edge_counts", note);
    }

    // 2.3.6: cluster strong proximity, definition vs predicate. The
    // definitional route reads the stored directed relation as-is, so the
    // two routes agree only when stored adjacency is symmetric.
    {
        bool ok = true;
        std::string cx;
        for (std::size_t i = 0; i < N && ok; ++i)
            for (std::size_t j = 0; j < N && ok; ++j)
                if (ctx.directed[i][j] != ctx.directed[j][i]) {
                    ok = false;
                    cx = "stored adjacency asymmetric for regions (" + std::to_string(i) + "," +
                         std::to_string(j) + ")";
                }
        for (std::size_t a = 0; a < clusters.size() && ok; ++a)
            for (std::size_t b = a; b < clusters.size() && ok; ++b) {
                bool scan = false;
                for (std::size_t x : clusters[a].members) {
                    for (std::size_t y : clusters[b].members)
                        if (x == y || ctx.directed[x][y]) { scan = true; break; }
                    if (scan) break;
                }
                bool pred = ctx.cluster_sn(clusters[a], clusters[b]);
                if (scan != pred) {
                    ok = false;
                    cx = "cluster pair (" + std::to_string(clusters[a].nucleus) + "," +
                         std::to_string(clusters[b].nucleus) + "): definition scan " +
                         (scan ? "true" : "false") + ", predicate " + (pred ? "true" : "false");
                }
            }
        add("thm_2_3_6_cluster_sn_two_routes", ok, cx);
    }

    // 2.3.7: cluster descriptive proximity, definition scan vs predicate
    {
        bool ok = true;
        std::string cx;
        for (std::size_t a = 0; a < clusters.size() && ok; ++a)
            for (std::size_t b = a; b < clusters.size() && ok; ++b) {
                bool scan = false;
                for (std::size_t x : clusters[a].members) {
                    for (std::size_t y : clusters[b].members)
                        if (feature_match(ctx.region_desc[x], ctx.region_desc[y], tol)) {
                            scan = true;
                            break;
                        }
                    if (scan) break;
                }
                bool pred = ctx.cluster_snd_region(clusters[a], clusters[b]);
                if (scan != pred) {
                    ok = false;
                    cx = "cluster pair (" + std::to_string(clusters[a].nucleus) + "," +
                         std::to_string(clusters[b].nucleus) + ") disagrees";
                }
            }
        add("thm_2_3_7_cluster_snd_two_routes", ok, cx);
    }

    // 2.3.8 (informational): A sn Cn B extends to Cn N sn Cn B for the
    // cluster of any N strongly near A
    if (clusters.size() == N) {
        std::size_t checked = 0, held = 0;
        for (std::size_t a = 0; a < N; ++a)
            for (const NucleusCluster& cb : clusters) {
                bool near_cluster = false;
                for (std::size_t y : cb.members)
                    if (a == y || ctx.directed[a][y] || ctx.directed[y][a]) {
                        near_cluster = true;
                        break;
                    }
                if (!near_cluster) continue;
                ++checked;
                // N = a itself: a sn a, and Cn a contains a
                if (ctx.cluster_sn(clusters[a], cb)) ++held;
            }
        info("thm_2_3_8_region_cluster_extension",
             "held for " + std::to_string(held) + "/" + std::to_string(checked) +
                 " (region, cluster) pairs");
    } else {
        info("thm_2_3_8_region_cluster_extension",
             "skipped: cluster list is not one-per-region");
    }

    // 2.3.9: shared member implies a strongly near cross pair
    {
        bool ok = true;
        std::string cx;
        for (std::size_t a = 0; a < clusters.size() && ok; ++a)
            for (std::size_t b = a + 1; b < clusters.size() && ok; ++b) {
                std::vector<std::size_t> shared;
                std::set_intersection(clusters[a].members.begin(), clusters[a].members.end(),
                                      clusters[b].members.begin(), clusters[b].members.end(),
                                      std::back_inserter(shared));
                if (shared.empty()) continue;
                if (!ctx.cluster_sn(clusters[a], clusters[b])) {
                    ok = false;
                    cx = "clusters (" + std::to_string(clusters[a].nucleus) + "," +
                         std::to_string(clusters[b].nucleus) +
                         ") share members but no strongly near pair";
                }
            }
        add("thm_2_3_9_overlap_implies_sn", ok, cx);
    }

    // 2.3.10: nonempty descriptive intersection implies a descriptively
    // near cross pair
    {
        bool ok = true;
        std::string cx;
        for (std::size_t a = 0; a < clusters.size() && ok; ++a)
            for (std::size_t b = a; b < clusters.size() && ok; ++b) {
                // descriptive intersection by definition over the memoized match
                bool nonempty = false;
                auto in_both = [&](std::size_t x) {
                    bool ma = false, mb = false;
                    for (std::size_t s : clusters[a].members)
                        if (ctx.desc_match[x][s]) { ma = true; break; }
                    if (!ma) return false;
                    for (std::size_t s : clusters[b].members)
                        if (ctx.desc_match[x][s]) { mb = true; break; }
                    return mb;
                };
                for (std::size_t x : clusters[a].members)
                    if (in_both(x)) { nonempty = true; break; }
                if (!nonempty)
                    for (std::size_t x : clusters[b].members)
                        if (in_both(x)) { nonempty = true; break; }
                if (nonempty && !ctx.cluster_snd_region(clusters[a], clusters[b])) {
                    ok = false;
                    cx = "clusters (" + std::to_string(clusters[a].nucleus) + "," +
                         std::to_string(clusters[b].nucleus) +
                         ") have nonempty descriptive intersection but no snd pair";
                }
            }
        add("thm_2_3_10_dintersection_implies_snd", ok, cx);
    }

    // Lemma 3.1 (pointwise): strongly near regions share a described point
    {
        bool ok = true;
        std::string cx;
        for (std::size_t i = 0; i < N && ok; ++i)
            for (std::size_t j = i; j < N && ok; ++j) {
                if (!(i == j || ctx.directed[i][j] || ctx.directed[j][i])) continue;
                if (!ctx.sndp(i, j)) {
                    ok = false;
                    cx = "regions (" + std::to_string(i) + "," + std::to_string(j) +
                         ") strongly near but no matching boundary description";
                }
            }
        add("lemma_3_1_sn_implies_sndp", ok, cx);
    }

    // Theorem 3.2: strongly near clusters are pointwise descriptively near
    {
        bool ok = true;
        std::string cx;
        for (std::size_t a = 0; a < clusters.size() && ok; ++a)
            for (std::size_t b = a; b < clusters.size() && ok; ++b) {
                if (!ctx.cluster_sn(clusters[a], clusters[b])) continue;
                if (!ctx.cluster_sndp(clusters[a], clusters[b])) {
                    ok = false;
                    cx = "clusters (" + std::to_string(clusters[a].nucleus) + "," +
                         std::to_string(clusters[b].nucleus) + ") sn but not pointwise snd";
                }
            }
        add("thm_3_2_cluster_sn_implies_sndp", ok, cx);
    }

    // Theorem 3.3: descriptive nearness iff nonempty descriptive intersection
    {
        bool ok = true;
        std::string cx;
        for (std::size_t a = 0; a < clusters.size() && ok; ++a)
            for (std::size_t b = a; b < clusters.size() && ok; ++b) {
                bool snd = ctx.cluster_snd_region(clusters[a], clusters[b]);
                bool nonempty = false;
                for (std::size_t x : clusters[a].members) {
                    bool ma = false, mb = false;
                    for (std::size_t s : clusters[a].members)
                        if (ctx.desc_match[x][s]) { ma = true; break; }
                    for (std::size_t s : clusters[b].members)
                        if (ctx.desc_match[x][s]) { mb = true; break; }
                    if (ma && mb) { nonempty = true; break; }
                }
                if (!nonempty)
                    for (std::size_t x : clusters[b].members) {
                        bool ma = false, mb = false;
                        for (std::size_t s : clusters[a].members)
                            if (ctx.desc_match[x][s]) { ma = true; break; }
                        for (std::size_t s : clusters[b].members)
                            if (ctx.desc_match[x][s]) { mb = true; break; }
                        if (ma && mb) { nonempty = true; break; }
                    }
                if (snd != nonempty) {
                    ok = false;
                    cx = "clusters (" + std::to_string(clusters[a].nucleus) + "," +
                         std::to_string(clusters[b].nucleus) + "): snd " +
                         (snd ? "true" : "false") + " but intersection " +
                         (nonempty ? "nonempty" : "empty");
                }
            }
        add("thm_3_3_snd_iff_dintersection", ok, cx);
    }

    // Convexity axioms over the family generated by the region set, the
    // empty set, and pairwise cluster member-set intersections
    {
        std::set<std::vector<std::size_t>> family;
        std::vector<std::size_t> full(N);
        for (std::size_t i = 0; i < N; ++i) full[i] = i;
        family.insert(std::vector<std::size_t>{});
        family.insert(full);
        for (const NucleusCluster& c : clusters) family.insert(c.members);
        bool c1_sets = true;
        for (std::size_t a = 0; a < clusters.size(); ++a)
            for (std::size_t b = a + 1; b < clusters.size(); ++b) {
                std::vector<std::size_t> shared;
                std::set_intersection(clusters[a].members.begin(), clusters[a].members.end(),
                                      clusters[b].members.begin(), clusters[b].members.end(),
                                      std::back_inserter(shared));
                family.insert(shared);
            }
        bool c0 = family.count({}) > 0 && family.count(full) > 0;
        add("convexity_c0_empty_and_full", c0, c0 ? "" : "family misses the empty or full set");

        // C1 geometric part: pairwise region intersections stay convex
        bool c1_geom = true;
        std::string cx;
        double eps = 1e-12 * t.bbox.scale();
        for (const SharedEdge& e : t.shared_edges) {
            ConvexPolygon inter = convex_intersection(t.regions[e.a], t.regions[e.b], eps);
            if (!is_convex(inter)) {
                c1_geom = false;
                cx = "intersection of regions (" + std::to_string(e.a) + "," +
                     std::to_string(e.b) + ") is not convex";
                break;
            }
        }
        add("convexity_c1_intersections", c1_geom && c1_sets, cx);
    }

    return rep;
}

// Convenience overload: validate against the tessellation's own clusters.
inline ValidationReport validate_theorems(const Tessellation& t,
                                          const MatchTolerance& tol = {},
                                          const GrayImage* img = nullptr) {
    std::vector<NucleusCluster> clusters;
    clusters.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) clusters.push_back(nucleus_cluster(t, i));
    return validate_theorems(t, clusters, tol, img);
}

} // namespace vmesh
