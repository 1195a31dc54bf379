#pragma once

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "syzygy/arrangement.hpp"
#include "syzygy/curvefit.hpp"
#include "syzygy/poly.hpp"

namespace syzygy {

/// Affine window rendered at z = 1 plus the raster parameters. The only
/// place in the library where floating point appears; everything upstream
/// stays exact.
struct Viewport {
    double xmin = -5.0, xmax = 5.0;
    double ymin = -5.0, ymax = 5.0;
    int width = 640, height = 640;
    int resolution = 256;  // marching-squares grid cells per axis
};

namespace detail {

inline void validate_viewport(const Viewport& vp) {
    if (!(vp.xmin < vp.xmax) || !(vp.ymin < vp.ymax))
        throw EmptyViewport("viewport window is empty");
    if (vp.width < 1 || vp.height < 1) throw EmptyViewport("viewport pixel size is empty");
    if (vp.resolution < 16) throw EmptyViewport("viewport resolution must be at least 16");
}

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

struct Mapper {
    const Viewport& vp;
    double px(double x) const { return (x - vp.xmin) / (vp.xmax - vp.xmin) * vp.width; }
    double py(double y) const { return vp.height - (y - vp.ymin) / (vp.ymax - vp.ymin) * vp.height; }
};

/// Clips ax + by + c = 0 to the window; empty result means no visible part.
inline std::vector<std::pair<double, double>> clip_line(double a, double b, double c,
                                                        const Viewport& vp) {
    std::vector<std::pair<double, double>> hits;
    auto consider = [&](double x, double y) {
        const double ex = 1e-9 * (vp.xmax - vp.xmin);
        const double ey = 1e-9 * (vp.ymax - vp.ymin);
        if (x < vp.xmin - ex || x > vp.xmax + ex) return;
        if (y < vp.ymin - ey || y > vp.ymax + ey) return;
        for (const auto& h : hits)
            if (std::abs(h.first - x) <= ex && std::abs(h.second - y) <= ey) return;
        hits.push_back({x, y});
    };
    if (b != 0) {
        consider(vp.xmin, (-c - a * vp.xmin) / b);
        consider(vp.xmax, (-c - a * vp.xmax) / b);
    }
    if (a != 0) {
        consider((-c - b * vp.ymin) / a, vp.ymin);
        consider((-c - b * vp.ymax) / a, vp.ymax);
    }
    if (hits.size() > 2) hits.resize(2);
    return hits;
}

/// Marching squares with linear interpolation on sign changes; returns
/// chains of pixel-space points ready to be polylines.
inline std::vector<std::vector<std::pair<double, double>>> trace_curve(const HomogPoly& f,
                                                                       const Viewport& vp) {
    AffineCoeffs affine = dehomogenize(f);
    std::vector<std::tuple<int, int, double>> terms;
    for (const auto& [e, co] : affine) terms.push_back({e.first, e.second, co.get_d()});
    auto value = [&](double x, double y) {
        double acc = 0.0;
        for (const auto& [ex, ey, co] : terms) {
            double m = co;
            for (int i = 0; i < ex; ++i) m *= x;
            for (int i = 0; i < ey; ++i) m *= y;
            acc += m;
        }
        return acc;
    };
    int n = vp.resolution;
    double dx = (vp.xmax - vp.xmin) / n;
    double dy = (vp.ymax - vp.ymin) / n;
    std::vector<std::vector<double>> grid(n + 1, std::vector<double>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) grid[i][j] = value(vp.xmin + i * dx, vp.ymin + j * dy);

    using Pt = std::pair<double, double>;
    std::vector<std::pair<Pt, Pt>> segs;
    auto interp = [](double xa, double ya, double va, double xb, double yb,
                     double vb) -> Pt {
        double t = va / (va - vb);
        return {xa + t * (xb - xa), ya + t * (yb - ya)};
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double x0 = vp.xmin + i * dx, x1 = x0 + dx;
            double y0 = vp.ymin + j * dy, y1 = y0 + dy;
            double v00 = grid[i][j], v10 = grid[i + 1][j];
            double v11 = grid[i + 1][j + 1], v01 = grid[i][j + 1];
            int mask = (v00 < 0 ? 1 : 0) | (v10 < 0 ? 2 : 0) | (v11 < 0 ? 4 : 0) |
                       (v01 < 0 ? 8 : 0);
            if (mask == 0 || mask == 15) continue;
            Pt bottom = (v00 < 0) != (v10 < 0) ? interp(x0, y0, v00, x1, y0, v10) : Pt{};
            Pt right = (v10 < 0) != (v11 < 0) ? interp(x1, y0, v10, x1, y1, v11) : Pt{};
            Pt top = (v01 < 0) != (v11 < 0) ? interp(x0, y1, v01, x1, y1, v11) : Pt{};
            Pt left = (v00 < 0) != (v01 < 0) ? interp(x0, y0, v00, x0, y1, v01) : Pt{};
            auto emit = [&](const Pt& u, const Pt& v) { segs.push_back({u, v}); };
            switch (mask) {
                case 1: case 14: emit(left, bottom); break;
                case 2: case 13: emit(bottom, right); break;
                case 3: case 12: emit(left, right); break;
                case 4: case 11: emit(top, right); break;
                case 6: case 9: emit(bottom, top); break;
                case 7: case 8: emit(left, top); break;
                case 5: emit(left, top); emit(bottom, right); break;
                case 10: emit(left, bottom); emit(top, right); break;
                default: break;
            }
        }

    // Chain segments that share endpoints (quantized) into polylines.
    auto key = [&](const Pt& p) {
        return std::pair<long long, long long>(
            static_cast<long long>(p.first / dx * 1024.0 + (p.first >= 0 ? 0.5 : -0.5)),
            static_cast<long long>(p.second / dy * 1024.0 + (p.second >= 0 ? 0.5 : -0.5)));
    };
    std::map<std::pair<long long, long long>, std::vector<std::size_t>> at;
    for (std::size_t s = 0; s < segs.size(); ++s) {
        at[key(segs[s].first)].push_back(s);
        at[key(segs[s].second)].push_back(s);
    }
    std::vector<bool> used(segs.size(), false);
    std::vector<std::vector<Pt>> chains;
    for (std::size_t s = 0; s < segs.size(); ++s) {
        if (used[s]) continue;
        used[s] = true;
        std::vector<Pt> chain{segs[s].first, segs[s].second};
        for (int dir = 0; dir < 2; ++dir) {
            while (true) {
                Pt end = dir == 0 ? chain.back() : chain.front();
                std::size_t next = segs.size();
                for (std::size_t cand : at[key(end)])
                    if (!used[cand]) {
                        next = cand;
                        break;
                    }
                if (next == segs.size()) break;
                used[next] = true;
                Pt other = key(segs[next].first) == key(end) ? segs[next].second
                                                             : segs[next].first;
                if (dir == 0)
                    chain.push_back(other);
                else
                    chain.insert(chain.begin(), other);
            }
        }
        chains.push_back(std::move(chain));
    }
    return chains;
}

}  // namespace detail

/// Deterministic standalone SVG: arrangement lines clipped to the window
/// (red #cc0000, blue #0044cc, green #00aa44), the optional curve traced by
/// marching squares, marked points as circles. Entities at infinity are
/// skipped with an annotation comment.
inline std::string render_scene(const ColoredArrangement& arr,
                                const std::optional<HomogPoly>& curve, const PointSet& pts,
                                const Viewport& vp) {
    detail::validate_viewport(vp);
    detail::Mapper m{vp};
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << vp.width << "\" height=\""
        << vp.height << "\" viewBox=\"0 0 " << vp.width << " " << vp.height << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << vp.width << "\" height=\"" << vp.height
        << "\" fill=\"#ffffff\" stroke=\"#333333\"/>\n";
    // Coordinate axes as a single path so counting <line> elements counts
    // arrangement lines only.
    {
        std::string d;
        if (vp.xmin < 0 && vp.xmax > 0)
            d += "M " + detail::fmt(m.px(0)) + " 0 V " + std::to_string(vp.height) + " ";
        if (vp.ymin < 0 && vp.ymax > 0)
            d += "M 0 " + detail::fmt(m.py(0)) + " H " + std::to_string(vp.width);
        if (!d.empty())
            svg << "<path d=\"" << d << "\" stroke=\"#bbbbbb\" fill=\"none\"/>\n";
    }
    auto draw_line = [&](const ProjLine& l, const char* color) {
        const auto& c = l.coeffs();
        double a = c[0].get_d(), b = c[1].get_d(), cc = c[2].get_d();
        if (c[0] == 0 && c[1] == 0) {
            svg << "<!-- line at infinity skipped: " << l.str() << " -->\n";
            return;
        }
        auto seg = detail::clip_line(a, b, cc, vp);
        if (seg.size() < 2) {
            svg << "<!-- line outside viewport: " << l.str() << " -->\n";
            return;
        }
        svg << "<line x1=\"" << detail::fmt(m.px(seg[0].first)) << "\" y1=\""
            << detail::fmt(m.py(seg[0].second)) << "\" x2=\"" << detail::fmt(m.px(seg[1].first))
            << "\" y2=\"" << detail::fmt(m.py(seg[1].second)) << "\" stroke=\"" << color
            << "\" stroke-width=\"1.5\"/>\n";
    };
    for (const auto& l : arr.red) draw_line(l, "#cc0000");
    for (const auto& l : arr.blue) draw_line(l, "#0044cc");
    if (arr.red.empty() && arr.blue.empty() && arr.green == ProjLine())
        svg << "<!-- empty arrangement -->\n";
    else
        draw_line(arr.green, "#00aa44");
    if (curve) {
        for (const auto& chain : detail::trace_curve(*curve, vp)) {
            svg << "<polyline fill=\"none\" stroke=\"#111111\" stroke-width=\"1\" points=\"";
            for (std::size_t i = 0; i < chain.size(); ++i) {
                if (i) svg << " ";
                svg << detail::fmt(m.px(chain[i].first)) << "," << detail::fmt(m.py(chain[i].second));
            }
            svg << "\"/>\n";
        }
    }
    for (const auto& p : pts.points()) {
        if (p.at_infinity()) {
            svg << "<!-- point at infinity skipped: " << p.str() << " -->\n";
            continue;
        }
        double x = Rat(p.x()).get_d() / Rat(p.z()).get_d();
        double y = Rat(p.y()).get_d() / Rat(p.z()).get_d();
        svg << "<circle cx=\"" << detail::fmt(m.px(x)) << "\" cy=\"" << detail::fmt(m.py(y))
            << "\" r=\"3\" fill=\"#222222\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace syzygy
