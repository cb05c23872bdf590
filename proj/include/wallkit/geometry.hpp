#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wallkit/bounds.hpp"
#include "wallkit/catalog_io.hpp"
#include "wallkit/enumerate.hpp"

namespace wallkit {

/// s-coordinate of the wall alpha0^2 over a given alpha^2:
/// s = alpha0^2/(6 alpha^2) - 1/6. May be <= 0 (below the slice); exactly 0
/// at alpha = alpha0.
inline Rat wall_s_at(const Rat& alpha0_sq, const Rat& alpha_sq) {
    if (alpha_sq.sign() <= 0) throw std::domain_error("wall_s_at: alpha^2 must be > 0");
    return alpha0_sq / (6 * alpha_sq) - Rat(1, 6);
}

/// Where a slice point sits relative to the catalog's walls. Walls are
/// nested in q = (s + 1/6) alpha^2, so the chamber is fully described by
/// the walls below and above the point's q.
struct ChamberDescriptor {
    Rat q;
    std::vector<Rat> below;        // alpha0^2 with alpha0^2/6 < q
    std::vector<Rat> above;        // alpha0^2 with alpha0^2/6 > q
    std::optional<Rat> on_wall;    // exact equality

    bool single_chamber() const { return below.empty() && above.empty() && !on_wall; }
    bool gieseker_side() const { return above.empty() && !on_wall; }
};

inline ChamberDescriptor classify_point(const StabilityPoint& p, const WallCatalog& cat) {
    ChamberDescriptor out;
    out.q = (p.s + Rat(1, 6)) * p.alpha_sq;
    for (const auto& [alpha0_sq, idx] : cat.walls) {
        const Rat level = alpha0_sq / 6;
        if (level < out.q)
            out.below.push_back(alpha0_sq);
        else if (level > out.q)
            out.above.push_back(alpha0_sq);
        else
            out.on_wall = alpha0_sq;
    }
    return out;
}

/// One hyperbola of the wall family, with rendering metadata. The actual
/// flag is only ever copied out of fixture annotations.
struct WallCurve {
    Rat alpha0_sq;
    std::string label;
    std::optional<bool> actual;
};

inline std::vector<WallCurve> build_wall_curves(const WallCatalog& cat,
                                                const std::vector<CandidateAnnotation>* notes = nullptr) {
    std::vector<WallCurve> curves;
    for (const auto& [alpha0_sq, idx] : cat.walls) {
        WallCurve c{alpha0_sq, alpha0_sq.str(), std::nullopt};
        if (notes) {
            for (std::size_t i : idx)
                if (i < notes->size() && (*notes)[i].actual && *(*notes)[i].actual) c.actual = true;
        }
        curves.push_back(std::move(c));
    }
    return curves;
}

/// Rendering viewport in slice coordinates (alpha on x, s on y).
struct ViewBox {
    double alpha_min, alpha_max;
    double s_min, s_max;
    int width_px = 800;
    int height_px = 600;
};

namespace detail {

inline std::string fmt_px(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

struct SvgMapper {
    ViewBox view;
    double margin = 48.0;

    double plot_w() const { return view.width_px - 2 * margin; }
    double plot_h() const { return view.height_px - 2 * margin; }
    double x(double alpha) const {
        return margin + (alpha - view.alpha_min) / (view.alpha_max - view.alpha_min) * plot_w();
    }
    double y(double s) const {
        return margin + (view.s_max - s) / (view.s_max - view.s_min) * plot_h();
    }
};

}  // namespace detail

/// Static SVG of the catalog's walls over the (alpha, s)-slice. Each wall is
/// a 256-point polyline, geometrically sampled over alpha in (alpha0/64,
/// alpha0]. The killing wall (alpha0^2 = 1) is red, the catalog's maximal
/// wall blue, other walls orange, walls flagged actual drawn heavier; the
/// rank-zero region (s + 1/6) alpha^2 > D/3 is shaded green. Output is a
/// deterministic function of the inputs and embeds the catalog hash.
inline void render_svg(const WallCatalog& cat, const BoundReport& bounds, const ViewBox& view,
                       const std::string& path,
                       const std::vector<CandidateAnnotation>* notes = nullptr) {
    if (!(view.alpha_max > view.alpha_min) || !(view.s_max > view.s_min) || view.width_px <= 0 ||
        view.height_px <= 0)
        throw std::invalid_argument("render_svg: view must have positive extent");

    const detail::SvgMapper m{view};
    std::string svg;
    auto px = [&](double ax, double sy) {
        return detail::fmt_px(m.x(ax)) + "," + detail::fmt_px(m.y(sy));
    };

    char hashbuf[32];
    std::snprintf(hashbuf, sizeof hashbuf, "%016llx",
                  static_cast<unsigned long long>(catalog_hash(cat)));

    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(view.width_px) + "\" height=\"" + std::to_string(view.height_px) +
           "\" viewBox=\"0 0 " + std::to_string(view.width_px) + " " +
           std::to_string(view.height_px) + "\">\n";
    svg += "<!-- wallkit catalog " + std::string(hashbuf) + " -->\n";
    svg += "<defs><clipPath id=\"plot\"><rect x=\"" + detail::fmt_px(m.margin) + "\" y=\"" +
           detail::fmt_px(m.margin) + "\" width=\"" + detail::fmt_px(m.plot_w()) +
           "\" height=\"" + detail::fmt_px(m.plot_h()) + "\"/></clipPath></defs>\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<g clip-path=\"url(#plot)\">\n";

    // Rank-zero region: above the curve s = D/(3 alpha^2) - 1/6.
    {
        const double thr = bounds.rank_zero_threshold_sq.approx();  // alpha0^2 = 2D
        std::string pts;
        const int n = 128;
        const double a0 = std::max(view.alpha_min, 1e-6);
        for (int i = 0; i <= n; ++i) {
            const double a = a0 + (view.alpha_max - a0) * i / n;
            const double s = thr / (6 * a * a) - 1.0 / 6.0;
            pts += px(a, s) + " ";
        }
        pts += px(view.alpha_max, view.s_max) + " " + px(a0, view.s_max);
        svg += "<polygon points=\"" + pts + "\" fill=\"#caf0ca\" stroke=\"none\"/>\n";
    }

    const std::vector<WallCurve> curves = build_wall_curves(cat, notes);
    const Rat max_wall = curves.empty() ? Rat(0) : curves.back().alpha0_sq;
    for (const WallCurve& curve : curves) {
        const double alpha0 = std::sqrt(curve.alpha0_sq.approx());
        std::string pts;
        for (int i = 0; i < 256; ++i) {
            // alpha = alpha0 * 64^(i/255 - 1), from alpha0/64 up to alpha0
            const double a = alpha0 * std::pow(64.0, i / 255.0 - 1.0);
            const double s = curve.alpha0_sq.approx() / (6 * a * a) - 1.0 / 6.0;
            pts += px(a, s);
            if (i + 1 < 256) pts += " ";
        }
        std::string color = "#e8821e";  // orange
        if (curve.alpha0_sq == Rat(1) && cat.twist.is_zero()) color = "#d62728";  // killing
        if (curve.alpha0_sq == max_wall) color = "#1f77b4";                       // maximal
        const bool heavy = curve.actual.value_or(false);
        svg += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"" + (heavy ? "2.5" : "1.5") + "\"/>\n";
    }
    svg += "</g>\n";

    // Axes.
    svg += "<line x1=\"" + detail::fmt_px(m.margin) + "\" y1=\"" +
           detail::fmt_px(view.height_px - m.margin) + "\" x2=\"" +
           detail::fmt_px(view.width_px - m.margin) + "\" y2=\"" +
           detail::fmt_px(view.height_px - m.margin) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + detail::fmt_px(m.margin) + "\" y1=\"" + detail::fmt_px(m.margin) +
           "\" x2=\"" + detail::fmt_px(m.margin) + "\" y2=\"" +
           detail::fmt_px(view.height_px - m.margin) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + detail::fmt_px(view.width_px - m.margin + 8) + "\" y=\"" +
           detail::fmt_px(view.height_px - m.margin + 4) + "\" font-size=\"14\">a</text>\n";
    svg += "<text x=\"" + detail::fmt_px(m.margin - 4) + "\" y=\"" + detail::fmt_px(m.margin - 8) +
           "\" font-size=\"14\">s</text>\n";

    // Wall labels at the axis intercepts.
    for (const WallCurve& curve : curves) {
        const double alpha0 = std::sqrt(curve.alpha0_sq.approx());
        if (alpha0 < view.alpha_min || alpha0 > view.alpha_max) continue;
        svg += "<text x=\"" + detail::fmt_px(m.x(alpha0)) + "\" y=\"" +
               detail::fmt_px(view.height_px - m.margin + 16) +
               "\" font-size=\"10\" text-anchor=\"middle\">" + curve.label + "</text>\n";
    }
    svg += "</svg>\n";

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("render_svg: cannot open for writing: " + path);
    out << svg;
    if (!out) throw std::runtime_error("render_svg: write failed: " + path);
}

}  // namespace wallkit
