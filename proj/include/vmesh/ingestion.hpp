#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "vmesh/descriptors.hpp"
#include "vmesh/geometry.hpp"

namespace vmesh {

// splitmix64, used only to expand a seed into xoshiro state
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// xoshiro256** — fixed by name so fixtures are portable bit-for-bit
class Xoshiro256ss {
public:
    explicit Xoshiro256ss(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64(sm);
    }

    std::uint64_t next() {
        auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
        std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0,1)
    double next_double() { return (double)(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t s_[4];
};

// "x,y" per line, '#' comments and blank lines skipped; file order kept,
// duplicates kept (merged later by tessellation).
inline std::vector<Point2> sites_from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFound("cannot open " + path);
    std::vector<Point2> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos)
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected \"x,y\"");
        try {
            std::size_t used = 0;
            double x = std::stod(line.substr(start, comma - start), &used);
            std::string rest = line.substr(comma + 1);
            double y = std::stod(rest, &used);
            // trailing garbage after the number is a parse error
            std::size_t tail = rest.find_first_not_of(" \t\r", used);
            if (tail != std::string::npos)
                throw ParseError(path + ":" + std::to_string(lineno) + ": trailing characters");
            out.push_back({x, y});
        } catch (const std::invalid_argument&) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": not a number");
        } catch (const std::out_of_range&) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": number out of range");
        }
    }
    return out;
}

// n i.i.d. uniform points over the box; identical (n, bbox, seed) gives an
// identical list on every platform.
inline std::vector<Point2> sites_random(std::size_t n, const BoundingBox& bbox,
                                        std::uint64_t seed) {
    Xoshiro256ss rng(seed);
    std::vector<Point2> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double x = bbox.min.x + rng.next_double() * bbox.width();
        double y = bbox.min.y + rng.next_double() * bbox.height();
        out.push_back({x, y});
    }
    return out;
}

// Up to k interior pixel locations by descending Sobel magnitude with
// greedy suppression at radius min_sep; ties break in row-major order.
// Returned coordinates are pixel centers in [0,width]x[0,height].
inline std::vector<Point2> sites_from_image(const GrayImage& img, std::size_t k,
                                            double min_sep) {
    if (img.width < 3 || img.height < 3) throw ImageTooSmall("image must be at least 3x3");
    if (k < 1) throw DegenerateInput("site count must be >= 1");
    struct Cand { double mag; std::size_t px, py; };
    std::vector<Cand> cands;
    cands.reserve((img.width - 2) * (img.height - 2));
    for (std::size_t py = 1; py + 1 < img.height; ++py)
        for (std::size_t px = 1; px + 1 < img.width; ++px)
            cands.push_back({sobel(img, px, py).magnitude(), px, py});
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Cand& a, const Cand& b) { return a.mag > b.mag; });
    std::vector<Point2> out;
    for (const Cand& c : cands) {
        if (out.size() >= k) break;
        Point2 p{(double)c.px + 0.5, (double)c.py + 0.5};
        bool suppressed = false;
        for (const Point2& q : out)
            if (dist(p, q) < min_sep) { suppressed = true; break; }
        if (!suppressed) out.push_back(p);
    }
    return out;
}

namespace detail {

// next whitespace-delimited token, skipping '#' comments
inline std::string pnm_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {}
            continue;
        }
        if (!std::isspace(c)) { tok.push_back((char)c); break; }
    }
    while ((c = in.get()) != EOF && !std::isspace(c)) tok.push_back((char)c);
    return tok;
}

} // namespace detail

// Binary (P5) or ASCII (P2) PGM, maxval <= 255.
inline GrayImage load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileNotFound("cannot open " + path);
    std::string magic = detail::pnm_token(in);
    if (magic != "P5" && magic != "P2")
        throw UnsupportedFormat("not a P5/P2 PGM file: " + path);
    auto read_int = [&](const char* what) -> long {
        std::string tok = detail::pnm_token(in);
        try {
            return std::stol(tok);
        } catch (...) {
            throw CorruptHeader(std::string("bad PGM header field: ") + what);
        }
    };
    long w = read_int("width");
    long h = read_int("height");
    long maxval = read_int("maxval");
    if (w <= 0 || h <= 0) throw CorruptHeader("non-positive PGM dimensions");
    if (maxval <= 0 || maxval > 255) throw UnsupportedFormat("PGM maxval must be in 1..255");
    GrayImage img;
    img.width = (std::size_t)w;
    img.height = (std::size_t)h;
    img.pixels.resize(img.width * img.height);
    if (magic == "P5") {
        // exactly one whitespace byte separates maxval from raster data,
        // already consumed by the tokenizer
        std::vector<unsigned char> buf(img.pixels.size());
        in.read(reinterpret_cast<char*>(buf.data()), (std::streamsize)buf.size());
        if ((std::size_t)in.gcount() != buf.size())
            throw CorruptHeader("truncated PGM raster");
        for (std::size_t i = 0; i < buf.size(); ++i) img.pixels[i] = (double)buf[i];
    } else {
        for (double& px : img.pixels) {
            std::string tok = detail::pnm_token(in);
            try {
                long v = std::stol(tok);
                if (v < 0 || v > maxval) throw CorruptHeader("PGM sample out of range");
                px = (double)v;
            } catch (const CorruptHeader&) {
                throw;
            } catch (...) {
                throw CorruptHeader("truncated or malformed P2 raster");
            }
        }
    }
    return img;
}

} // namespace vmesh
