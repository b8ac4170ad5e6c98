// vmesh: Voronoi tessellation, nucleus clustering, and theorem validation
// from the command line. Subcommands: tessellate, clusters, validate, render.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "vmesh/vmesh.hpp"

namespace {

struct SourceOptions {
    std::string sites_path;
    std::size_t random_n = 0;
    std::uint64_t seed = 0;
    std::string image_path;
    std::size_t image_k = 64;
    double min_sep = 4.0;
    std::string bbox_spec;
};

struct ToleranceOptions {
    double scalar = 0.05;
    double angle_deg = 10.0;
    double count = 0.0;
};

void add_source_flags(CLI::App* cmd, SourceOptions& src) {
    auto* s = cmd->add_option("--sites", src.sites_path, "CSV site file (x,y per line)");
    auto* r = cmd->add_option("--random", src.random_n, "number of uniform random sites");
    cmd->add_option("--seed", src.seed, "random seed (with --random)");
    auto* i = cmd->add_option("--image", src.image_path, "PGM image to extract sites from");
    cmd->add_option("--k", src.image_k, "max sites from the image (with --image)");
    cmd->add_option("--min-sep", src.min_sep, "minimum site separation in pixels (with --image)");
    cmd->add_option("--bbox", src.bbox_spec, "bounding box: xmin,ymin,xmax,ymax");
    s->excludes(r);
    s->excludes(i);
    r->excludes(i);
}

void add_tolerance_flags(CLI::App* cmd, ToleranceOptions& tol) {
    cmd->add_option("--tol-scalar", tol.scalar, "relative tolerance for scalar features");
    cmd->add_option("--tol-angle", tol.angle_deg, "absolute tolerance for angles, degrees");
    cmd->add_option("--tol-count", tol.count, "absolute tolerance for count features");
}

vmesh::MatchTolerance to_tolerance(const ToleranceOptions& t) {
    vmesh::MatchTolerance out;
    out.scalar_rel = t.scalar;
    out.angle_abs = t.angle_deg * std::numbers::pi / 180.0;
    out.count_abs = t.count;
    return out;
}

vmesh::BoundingBox parse_bbox(const std::string& spec) {
    double v[4];
    char c1, c2, c3;
    std::istringstream in(spec);
    if (!(in >> v[0] >> c1 >> v[1] >> c2 >> v[2] >> c3 >> v[3]) || c1 != ',' || c2 != ',' ||
        c3 != ',')
        throw vmesh::ParseError("bad --bbox, expected xmin,ymin,xmax,ymax");
    vmesh::BoundingBox b{{v[0], v[1]}, {v[2], v[3]}};
    if (!b.valid()) throw vmesh::ParseError("--bbox must have positive area");
    return b;
}

vmesh::BoundingBox bbox_around(const std::vector<vmesh::Point2>& sites) {
    if (sites.empty()) throw vmesh::TooFewSites("no sites");
    vmesh::Point2 lo = sites[0], hi = sites[0];
    for (const auto& s : sites) {
        lo.x = std::min(lo.x, s.x);
        lo.y = std::min(lo.y, s.y);
        hi.x = std::max(hi.x, s.x);
        hi.y = std::max(hi.y, s.y);
    }
    double margin = 0.05 * std::max({hi.x - lo.x, hi.y - lo.y, 1.0});
    return {{lo.x - margin, lo.y - margin}, {hi.x + margin, hi.y + margin}};
}

struct ResolvedInput {
    std::vector<vmesh::Point2> sites;
    vmesh::BoundingBox bbox;
    std::optional<vmesh::GrayImage> image;
};

ResolvedInput resolve_input(const SourceOptions& src) {
    ResolvedInput out;
    int sources = (!src.sites_path.empty()) + (src.random_n > 0) + (!src.image_path.empty());
    if (sources != 1)
        throw vmesh::ParseError("exactly one of --sites, --random, --image is required");
    if (!src.sites_path.empty()) {
        out.sites = vmesh::sites_from_csv(src.sites_path);
        out.bbox = src.bbox_spec.empty() ? bbox_around(out.sites) : parse_bbox(src.bbox_spec);
    } else if (src.random_n > 0) {
        out.bbox = src.bbox_spec.empty() ? vmesh::BoundingBox{{0, 0}, {1, 1}}
                                         : parse_bbox(src.bbox_spec);
        out.sites = vmesh::sites_random(src.random_n, out.bbox, src.seed);
    } else {
        out.image = vmesh::load_pgm(src.image_path);
        out.sites = vmesh::sites_from_image(*out.image, src.image_k, src.min_sep);
        out.bbox = {{0, 0}, {(double)out.image->width, (double)out.image->height}};
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw vmesh::Error("cannot write " + path);
    f << content;
    if (!f) throw vmesh::Error("write failed for " + path);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-")
        std::cout << content;
    else
        write_file(out_path, content);
}

std::vector<vmesh::NucleusCluster> all_clusters(const vmesh::Tessellation& t) {
    std::vector<vmesh::NucleusCluster> cs;
    cs.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) cs.push_back(vmesh::nucleus_cluster(t, i));
    return cs;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Voronoi nucleus clustering toolkit"};
    app.require_subcommand(1);

    SourceOptions src;
    ToleranceOptions tolopt;
    std::string out_path;
    std::string svg_path;
    std::string descriptor = "region";
    long long nucleus_arg = -1;
    bool include_location = false;
    bool corrupt_adjacency = false;

    auto* tess = app.add_subcommand("tessellate", "build a Voronoi tessellation, emit mesh JSON");
    add_source_flags(tess, src);
    tess->add_option("--out", out_path, "output JSON path (default stdout)");
    tess->add_option("--svg", svg_path, "also write an SVG rendering");

    auto* clus = app.add_subcommand("clusters", "compute nucleus clusters, emit JSON");
    add_source_flags(clus, src);
    clus->add_option("--nucleus", nucleus_arg, "emit only the cluster of this region index");
    clus->add_option("--out", out_path, "output JSON path (default stdout)");

    auto* val = app.add_subcommand("validate", "run the theorem validation suite");
    add_source_flags(val, src);
    add_tolerance_flags(val, tolopt);
    val->add_option("--descriptor", descriptor, "descriptor family: point|region")
        ->check(CLI::IsMember({"point", "region"}));
    val->add_flag("--include-location", include_location,
                  "keep centroid entries in region descriptors");
    val->add_flag("--corrupt-adjacency", corrupt_adjacency,
                  "test hook: break adjacency symmetry before validating");
    val->add_option("--out", out_path, "report JSON path (default stdout)");

    auto* rend = app.add_subcommand("render", "render the tessellation as SVG");
    add_source_flags(rend, src);
    rend->add_option("--out", out_path, "output SVG path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        ResolvedInput in = resolve_input(src);
        vmesh::Tessellation t = vmesh::tessellate(in.sites, in.bbox);

        if (tess->parsed()) {
            emit(out_path, vmesh::mesh_to_json(t).dump(2) + "\n");
            if (!svg_path.empty())
                write_file(svg_path, vmesh::render_svg(t, vmesh::maximal_nucleus_clusters(t)));
        } else if (clus->parsed()) {
            if (nucleus_arg >= 0) {
                if (!t.valid_index((std::size_t)nucleus_arg))
                    throw vmesh::IndexOutOfRange("nucleus index out of range");
                auto c = vmesh::nucleus_cluster(t, (std::size_t)nucleus_arg);
                emit(out_path,
                     vmesh::clusters_to_json(t, {c}, vmesh::maximal_nucleus_clusters(t)).dump(2) +
                         "\n");
            } else {
                emit(out_path,
                     vmesh::clusters_to_json(t, all_clusters(t),
                                             vmesh::maximal_nucleus_clusters(t))
                             .dump(2) +
                         "\n");
            }
        } else if (val->parsed()) {
            if (corrupt_adjacency && !t.shared_edges.empty()) {
                // drop one direction of the first shared edge
                auto& lst = t.neighbors[t.shared_edges[0].b];
                lst.erase(std::remove(lst.begin(), lst.end(), (std::size_t)0), lst.end());
            }
            const vmesh::GrayImage* img = in.image ? &*in.image : nullptr;
            auto rep = vmesh::validate_theorems(t, to_tolerance(tolopt), img);
            emit(out_path, vmesh::report_to_json(rep).dump(2) + "\n");
            return rep.all_passed() ? 0 : 1;
        } else if (rend->parsed()) {
            emit(out_path, vmesh::render_svg(t, vmesh::maximal_nucleus_clusters(t)));
        }
    } catch (const vmesh::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
