// Acceptance gate: one line per criterion, exit 0 only if all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "vmesh/vmesh.hpp"

using namespace vmesh;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.empty() ? "" : " - ",
                detail.c_str());
    if (!ok) ++g_failures;
}

// the shared random-mesh ladder: 50 seeds spanning 20..500 sites on the unit box
std::size_t mesh_size(int seed) {
    return (std::size_t)std::lround(20.0 + (seed - 1) * (480.0 / 49.0));
}

const BoundingBox kUnitBox{{0, 0}, {1, 1}};

std::vector<Point2> mesh_sites(int seed) {
    return sites_random(mesh_size(seed), kUnitBox, (std::uint64_t)seed);
}

bool polygons_match(const ConvexPolygon& a, const ConvexPolygon& b, double tol) {
    const std::size_t n = a.vertices.size();
    if (n != b.vertices.size()) return false;
    if (n == 0) return true;
    for (std::size_t off = 0; off < n; ++off) {
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k)
            ok = dist(a.vertices[k], b.vertices[(k + off) % n]) <= tol;
        if (ok) return true;
    }
    return false;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int exit_code(int status) {
#ifdef WEXITSTATUS
    return WEXITSTATUS(status);
#else
    return status;
#endif
}

void criterion_voronoi_oracle() {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    for (int seed = 1; seed <= 50 && ok; ++seed) {
        auto sites = mesh_sites(seed);
        Tessellation dual = voronoi_from_delaunay(delaunay_triangulate(sites), kUnitBox);
        Tessellation brute = voronoi_bruteforce(sites, kUnitBox);
        for (std::size_t i = 0; i < sites.size() && ok; ++i)
            if (!polygons_match(dual.regions[i], brute.regions[i], 1e-9)) {
                ok = false;
                detail = "seed " + std::to_string(seed) + " region " + std::to_string(i);
            }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && secs >= 60.0) {
        ok = false;
        detail = "runtime over budget";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "50 meshes in %.2fs", secs);
    report("voronoi_oracle_equivalence", ok, detail.empty() ? buf : detail);
}

void criterion_rasterization() {
    bool ok = true;
    std::string detail;
    for (int seed = 1; seed <= 10 && ok; ++seed) {
        auto sites = mesh_sites(seed * 5); // 10 meshes spread across the ladder
        Tessellation t = tessellate(sites, kUnitBox);
        std::size_t checked = 0;
        for (int gy = 0; gy < 200 && ok; ++gy)
            for (int gx = 0; gx < 200 && ok; ++gx) {
                Point2 p{(gx + 0.5) / 200.0, (gy + 0.5) / 200.0};
                std::size_t best = t.nearest_site(p);
                double d1 = dist(p, t.sites[best]);
                // skip points within 1e-6 of any region boundary (bisector
                // distance to every other site, plus the box walls)
                bool near_boundary = false;
                for (std::size_t j = 0; j < sites.size() && !near_boundary; ++j) {
                    if (j == best) continue;
                    double dj = dist(p, t.sites[j]);
                    double sep = dist(t.sites[best], t.sites[j]);
                    if (sep > 0 && (dj * dj - d1 * d1) / (2.0 * sep) < 1e-6) near_boundary = true;
                }
                if (near_boundary) continue;
                ++checked;
                if (!polygon_contains(t.regions[best], p, 1e-9)) {
                    ok = false;
                    detail = "mesh seed " + std::to_string(seed * 5) + " point (" +
                             std::to_string(p.x) + "," + std::to_string(p.y) + ")";
                }
            }
        if (ok && checked < 200 * 200 / 2) {
            ok = false;
            detail = "too few interior grid points checked";
        }
    }
    report("rasterization_agreement", ok, detail);
}

void criterion_delaunay_property() {
    bool ok = true;
    std::string detail;
    for (int seed = 1; seed <= 50 && ok; ++seed) {
        Triangulation tri = delaunay_triangulate(mesh_sites(seed));
        for (std::size_t t = 0; t < tri.triangles.size() && ok; ++t) {
            const auto& T = tri.triangles[t];
            const Point2 &a = tri.sites[T[0]], &b = tri.sites[T[1]], &c = tri.sites[T[2]];
            for (std::size_t p = 0; p < tri.sites.size(); ++p) {
                if (p == T[0] || p == T[1] || p == T[2]) continue;
                if (incircle(a, b, c, tri.sites[p]) > 1e-9) {
                    ok = false;
                    detail = "seed " + std::to_string(seed) + " triangle " + std::to_string(t) +
                             " violated by site " + std::to_string(p);
                    break;
                }
            }
        }
    }
    report("delaunay_empty_circumcircles", ok, detail);
}

Tessellation make_grid(int nx, int ny) {
    std::vector<Point2> sites;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) sites.push_back({(double)i, (double)j});
    return tessellate(sites, {{-0.5, -0.5}, {nx - 0.5, ny - 0.5}});
}

Tessellation make_hex() {
    std::vector<Point2> sites;
    const double dy = std::sqrt(3.0) / 2.0;
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) sites.push_back({c + (r % 2 ? 0.5 : 0.0), r * dy});
    return tessellate(sites, {{-0.8, -0.8}, {5.3, 4.3}});
}

void criterion_lattice_fixtures() {
    bool ok = true;
    std::string detail;

    Tessellation g3 = make_grid(3, 3);
    auto m3 = maximal_nucleus_clusters(g3);
    if (!(m3.size() == 1 && m3[0].nucleus == 4 && m3[0].adjacency_count == 4)) {
        ok = false;
        detail = "3x3 grid maximal cluster wrong";
    }

    Tessellation g2 = make_grid(2, 2);
    auto m2 = maximal_nucleus_clusters(g2);
    if (ok && m2.size() != 4) {
        ok = false;
        detail = "2x2 grid should have four maximal clusters";
    }
    for (std::size_t i = 0; ok && i < m2.size(); ++i)
        if (m2[i].adjacency_count != 2) {
            ok = false;
            detail = "2x2 grid adjacency_count != 2";
        }

    if (ok && nucleus_cluster(make_hex(), 12).adjacency_count != 6) {
        ok = false;
        detail = "hex interior nucleus should have 6 neighbors";
    }
    report("lattice_fixtures", ok, detail);
}

void criterion_theorem_suite() {
    bool ok = true;
    std::string detail;
    std::vector<Tessellation> fixtures;
    fixtures.push_back(make_grid(3, 3));
    fixtures.push_back(make_grid(2, 2));
    fixtures.push_back(make_hex());
    for (int seed = 1; seed <= 50; ++seed)
        fixtures.push_back(tessellate(mesh_sites(seed), kUnitBox));
    for (std::size_t k = 0; k < fixtures.size() && ok; ++k) {
        ValidationReport rep = validate_theorems(fixtures[k]);
        for (const CheckResult& c : rep.checks)
            if (c.status == CheckStatus::Fail) {
                ok = false;
                detail = "mesh " + std::to_string(k) + " check " + c.id + ": " + c.detail;
                break;
            }
    }
    report("theorem_suite", ok, detail);
}

void criterion_fault_injection() {
    bool ok = true;
    std::string detail;

    // corrupt stored adjacency symmetry
    Tessellation t = make_grid(3, 3);
    auto& lst = t.neighbors[t.shared_edges[0].b];
    lst.erase(std::remove(lst.begin(), lst.end(), (std::size_t)0), lst.end());
    if (validate_theorems(t).all_passed()) {
        ok = false;
        detail = "adjacency corruption not detected";
    }

    // corrupt cluster membership
    Tessellation clean = make_grid(3, 3);
    std::vector<NucleusCluster> cs;
    for (std::size_t i = 0; i < clean.size(); ++i) cs.push_back(nucleus_cluster(clean, i));
    cs[4].members.push_back(8);
    std::sort(cs[4].members.begin(), cs[4].members.end());
    if (ok && validate_theorems(clean, cs, MatchTolerance{}).all_passed()) {
        ok = false;
        detail = "cluster membership corruption not detected";
    }

    // end-to-end: the validate subcommand must exit 1 on injected corruption
    if (const char* cli = std::getenv("VMESH_CLI"); ok && cli) {
        std::string cmd = std::string(cli) +
                          " validate --random 80 --seed 11 --corrupt-adjacency"
                          " --out /dev/null 2>/dev/null";
        if (exit_code(std::system(cmd.c_str())) != 1) {
            ok = false;
            detail = "validate --corrupt-adjacency did not exit 1";
        }
    }
    report("fault_injection_detected", ok, detail);
}

void criterion_determinism() {
    const char* cli = std::getenv("VMESH_CLI");
    if (!cli) {
        report("byte_identical_reruns", false, "VMESH_CLI not set");
        return;
    }
    bool ok = true;
    std::string detail;
    for (int run = 0; run < 2; ++run) {
        std::string tag = std::to_string(run);
        std::string cmd = std::string(cli) + " tessellate --random 120 --seed 3 --out /tmp/acc_" +
                          tag + ".json --svg /tmp/acc_" + tag + ".svg";
        if (exit_code(std::system(cmd.c_str())) != 0) {
            ok = false;
            detail = "tessellate run failed";
        }
    }
    if (ok && slurp("/tmp/acc_0.json") != slurp("/tmp/acc_1.json")) {
        ok = false;
        detail = "JSON differs between runs";
    }
    if (ok && slurp("/tmp/acc_0.svg") != slurp("/tmp/acc_1.svg")) {
        ok = false;
        detail = "SVG differs between runs";
    }
    if (ok && slurp("/tmp/acc_0.json").empty()) {
        ok = false;
        detail = "empty output";
    }
    report("byte_identical_reruns", ok, detail);
}

} // namespace

int main() {
    criterion_voronoi_oracle();
    criterion_rasterization();
    criterion_delaunay_property();
    criterion_lattice_fixtures();
    criterion_theorem_suite();
    criterion_fault_injection();
    criterion_determinism();
    if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures ? 1 : 0;
}
