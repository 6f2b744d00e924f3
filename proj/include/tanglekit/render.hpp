#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "diagram.hpp"

namespace tanglekit {

/// Deterministic SVG picture of a diagram: vertices evenly spaced on a
/// baseline, arcs as semicircles in the upper half-plane (the second copy of
/// a doubled arc drawn flatter), loops as small circles, crossed vertices
/// filled.
inline std::string render_svg(const TangledDiagram& d) {
    const int spacing = 60, margin = 50;
    const int width = 2 * margin + spacing * (d.n - 1);
    int max_span = 1;
    for (auto [a, b] : d.arcs) max_span = std::max(max_span, b - a);
    const int height = margin + spacing * max_span / 2 + 60;
    const int baseline = height - 30;
    auto x_of = [&](int v) { return margin + spacing * (v - 1); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
    for (size_t i = 0; i < d.arcs.size(); ++i) {
        auto [a, b] = d.arcs[i];
        if (a == b) {
            svg << "<circle cx=\"" << x_of(a) << "\" cy=\"" << baseline - 12
                << "\" r=\"12\"/>\n";
            continue;
        }
        bool second_copy = i > 0 && d.arcs[i - 1] == d.arcs[i];
        int rx = spacing * (b - a) / 2;
        int ry = second_copy ? rx * 3 / 5 : rx;
        svg << "<path d=\"M " << x_of(a) << " " << baseline << " A " << rx << " " << ry
            << " 0 0 1 " << x_of(b) << " " << baseline << "\"/>\n";
    }
    svg << "</g>\n";
    for (int v = 1; v <= d.n; ++v) {
        bool flag = is_crossed(d, v);
        svg << "<circle cx=\"" << x_of(v) << "\" cy=\"" << baseline << "\" r=\"5\" fill=\""
            << (flag ? "red" : "black") << "\"/>\n";
        svg << "<text x=\"" << x_of(v) << "\" y=\"" << baseline + 22
            << "\" font-size=\"14\" text-anchor=\"middle\">" << v << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

inline void render_to_file(const TangledDiagram& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io_error, "cannot open " + path);
    out << render_svg(d);
    if (!out) fail(errc::io_error, "write failed for " + path);
}

} // namespace tanglekit
