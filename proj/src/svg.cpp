#include "dsw/svg.hpp"

#include "dsw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace dsw {

namespace {

constexpr double kMargin = 40.0;
constexpr double kBlockHeight = 10.0;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += ch; break;
        }
    }
    return out;
}

void check_spec(const RenderSpec& spec) {
    if (spec.width <= 0.0 || spec.height <= 0.0) {
        throw InputError("render dimensions must be positive");
    }
    if (spec.series_gap < 0.0) {
        throw InputError("series gap must be non-negative");
    }
    if (spec.stride < 1) {
        throw InputError("stride must be >= 1");
    }
}

/// Shared affine transform for the two-panel series views. Both series use
/// the same pixels-per-sample step and the same value scale, so lengths in
/// sample units and amplitudes are directly comparable across panels.
struct SeriesLayout {
    double x0 = 0.0;
    double x_step = 0.0;
    double v_min = 0.0;
    double v_scale = 1.0;
    double y1_base = 0.0;  // bottom of the top panel
    double y2_base = 0.0;  // bottom of the bottom panel
    double gap_top = 0.0;

    double x(double index) const { return x0 + (index - 1.0) * x_step; }
    double y1(double v) const { return y1_base - (v - v_min) * v_scale; }
    double y2(double v) const { return y2_base - (v - v_min) * v_scale; }
};

SeriesLayout make_layout(const Series& s1, const Series& s2, const AmplitudeBand* band,
                         const RenderSpec& spec) {
    SeriesLayout lay;
    lay.x0 = kMargin;
    const int longest = std::max(s1.length(), s2.length());
    lay.x_step = (spec.width - 2.0 * kMargin) / std::max(1, longest - 1);

    double lo = s1.at(1);
    double hi = lo;
    for (int i = 1; i <= s1.length(); ++i) {
        double up = s1.at(i);
        double down = s1.at(i);
        if (band != nullptr) {
            up += band->alpha[static_cast<std::size_t>(i) - 1];
            down -= band->beta[static_cast<std::size_t>(i) - 1];
        }
        lo = std::min(lo, down);
        hi = std::max(hi, up);
    }
    for (int j = 1; j <= s2.length(); ++j) {
        lo = std::min(lo, s2.at(j));
        hi = std::max(hi, s2.at(j));
    }
    const double panel = (spec.height - 2.0 * kMargin - spec.series_gap) / 2.0;
    if (panel <= 0.0) {
        throw InputError("render height too small for the requested series gap");
    }
    lay.v_min = lo;
    lay.v_scale = hi > lo ? panel / (hi - lo) : 1.0;
    lay.y1_base = kMargin + panel;
    lay.gap_top = lay.y1_base;
    lay.y2_base = spec.height - kMargin;
    return lay;
}

void open_document(std::ostringstream& svg, const RenderSpec& spec, const std::string& title) {
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(spec.width)
        << "\" height=\"" << fmt(spec.height) << "\" viewBox=\"0 0 " << fmt(spec.width) << " "
        << fmt(spec.height) << "\">\n";
    svg << "<title>" << xml_escape(title) << "</title>\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << fmt(spec.width) << "\" height=\""
        << fmt(spec.height) << "\" fill=\"#ffffff\"/>\n";
}

void draw_series(std::ostringstream& svg, const Series& s, const SeriesLayout& lay,
                 bool top_panel, const std::string& color) {
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.500\" points=\"";
    for (int i = 1; i <= s.length(); ++i) {
        if (i > 1) svg << " ";
        const double y = top_panel ? lay.y1(s.at(i)) : lay.y2(s.at(i));
        svg << fmt(lay.x(i)) << "," << fmt(y);
    }
    svg << "\"/>\n";
}

void draw_connector(std::ostringstream& svg, const SeriesLayout& lay, const Series& s1,
                    const Series& s2, PathPoint q, const std::string& color) {
    svg << "<line x1=\"" << fmt(lay.x(q.i)) << "\" y1=\"" << fmt(lay.y1(s1.at(q.i)))
        << "\" x2=\"" << fmt(lay.x(q.j)) << "\" y2=\"" << fmt(lay.y2(s2.at(q.j)))
        << "\" stroke=\"" << color << "\" stroke-width=\"1.000\" stroke-opacity=\"0.700\"/>\n";
}

std::string heat_color(double t) {
    // Linear white-to-dark ramp; lighter means smaller cost.
    const int level = 255 - static_cast<int>(std::lround(t * 223.0));
    char buf[16];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", level, level, level);
    return buf;
}

}  // namespace

std::string render_segmented(const Series& s1, const Series& s2, const SimplifiedPath& s,
                             const std::vector<SegmentReport>& reports,
                             const AmplitudeBand& band, const RenderSpec& spec) {
    check_spec(spec);
    if (s.key_points.empty()) {
        throw InputError("simplified path has no key points");
    }
    if (reports.size() != s.segments.size()) {
        throw InputError("segment reports do not match the simplified path");
    }
    if (band.alpha.size() != static_cast<std::size_t>(s1.length()) ||
        band.beta.size() != band.alpha.size()) {
        throw InputError("amplitude band does not match the first series");
    }

    const SeriesLayout lay = make_layout(s1, s2, &band, spec);
    std::ostringstream svg;
    open_document(svg, spec, "segmented matching: " + s1.name() + " vs " + s2.name());

    const bool shaded = band.max_alpha() > 0.0 || band.max_beta() > 0.0;
    if (shaded) {
        svg << "<polygon fill=\"" << spec.palette.amplitude_shade
            << "\" fill-opacity=\"0.500\" stroke=\"none\" points=\"";
        for (int i = 1; i <= s1.length(); ++i) {
            if (i > 1) svg << " ";
            svg << fmt(lay.x(i)) << ","
                << fmt(lay.y1(s1.at(i) + band.alpha[static_cast<std::size_t>(i) - 1]));
        }
        for (int i = s1.length(); i >= 1; --i) {
            svg << " " << fmt(lay.x(i)) << ","
                << fmt(lay.y1(s1.at(i) - band.beta[static_cast<std::size_t>(i) - 1]));
        }
        svg << "\"/>\n";
    }

    // Compression blocks sit in the gap; their rendered width is |K| sample
    // units, centered on the midpoint of the shorter side of the mapping.
    const double block_y = lay.gap_top + spec.series_gap / 2.0 - kBlockHeight / 2.0;
    for (const SegmentReport& r : reports) {
        if (r.k == 0) continue;
        const double mid = r.k < 0 ? (static_cast<double>(r.b2) + static_cast<double>(r.e2)) / 2.0
                                   : (static_cast<double>(r.b) + static_cast<double>(r.e)) / 2.0;
        const double width = static_cast<double>(std::llabs(r.k)) * lay.x_step;
        svg << "<rect class=\"compression\" x=\"" << fmt(lay.x(mid) - width / 2.0) << "\" y=\""
            << fmt(block_y) << "\" width=\"" << fmt(width) << "\" height=\""
            << fmt(kBlockHeight) << "\" fill=\"" << spec.palette.compression_block
            << "\" fill-opacity=\"0.800\"/>\n";
    }

    for (const PathPoint& kp : s.key_points) {
        draw_connector(svg, lay, s1, s2, kp, spec.palette.connector);
    }
    draw_series(svg, s1, lay, true, spec.palette.series1);
    draw_series(svg, s2, lay, false, spec.palette.series2);
    svg << "</svg>\n";
    return svg.str();
}

std::string render_point_to_point(const Series& s1, const Series& s2,
                                  const WarpingPath& path, const RenderSpec& spec) {
    check_spec(spec);
    if (auto violation = validate_path(path, s1.length(), s2.length())) {
        throw InputError("cannot render an invalid warping path: " + violation->message);
    }
    const SeriesLayout lay = make_layout(s1, s2, nullptr, spec);
    std::ostringstream svg;
    open_document(svg, spec, "point-to-point matching: " + s1.name() + " vs " + s2.name());

    const std::size_t last = path.size() - 1;
    for (std::size_t k = 0; k <= last; k += static_cast<std::size_t>(spec.stride)) {
        draw_connector(svg, lay, s1, s2, path[k], spec.palette.connector);
    }
    if (last % static_cast<std::size_t>(spec.stride) != 0) {
        draw_connector(svg, lay, s1, s2, path[last], spec.palette.connector);
    }
    draw_series(svg, s1, lay, true, spec.palette.series1);
    draw_series(svg, s2, lay, false, spec.palette.series2);
    svg << "</svg>\n";
    return svg.str();
}

std::string render_matrix_paths(const CostMatrix& c, const std::vector<PathOverlay>& paths,
                                const RenderSpec& spec) {
    check_spec(spec);
    for (const PathOverlay& overlay : paths) {
        for (const PathPoint& q : overlay.path) {
            if (!c.contains(q)) {
                throw InputError("path point outside the cost matrix");
            }
        }
    }
    const double cell_w = (spec.width - 2.0 * kMargin) / c.cols();
    const double cell_h = (spec.height - 2.0 * kMargin) / c.rows();

    double lo = c(1, 1);
    double hi = lo;
    for (int i = 1; i <= c.rows(); ++i) {
        for (int j = 1; j <= c.cols(); ++j) {
            lo = std::min(lo, c(i, j));
            hi = std::max(hi, c(i, j));
        }
    }
    const double range = hi > lo ? hi - lo : 1.0;

    std::ostringstream svg;
    open_document(svg, spec, "cost matrix");
    for (int i = 1; i <= c.rows(); ++i) {
        for (int j = 1; j <= c.cols(); ++j) {
            const double t = (c(i, j) - lo) / range;
            svg << "<rect x=\"" << fmt(kMargin + (j - 1) * cell_w) << "\" y=\""
                << fmt(kMargin + (i - 1) * cell_h) << "\" width=\"" << fmt(cell_w)
                << "\" height=\"" << fmt(cell_h) << "\" fill=\"" << heat_color(t) << "\"/>\n";
        }
    }
    for (const PathOverlay& overlay : paths) {
        svg << "<polyline fill=\"none\" stroke=\"" << overlay.color
            << "\" stroke-width=\"1.500\" points=\"";
        for (std::size_t k = 0; k < overlay.path.size(); ++k) {
            if (k > 0) svg << " ";
            const PathPoint q = overlay.path[k];
            svg << fmt(kMargin + (q.j - 0.5) * cell_w) << ","
                << fmt(kMargin + (q.i - 0.5) * cell_h);
        }
        svg << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace dsw
