/* Apache License, Version 2.0 */
#include "polylink/svg.hpp"

#include <cstdio>
#include <sstream>

namespace polylink {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string num(const Rat& r) { return num(r.to_double()); }

}  // namespace

std::string emit_svg(const Scene& scene) {
    Rat lox = scene.polygon.vertex(0).x, hix = lox;
    Rat loy = scene.polygon.vertex(0).y, hiy = loy;
    auto grow = [&](const Point& p) {
        lox = min(lox, p.x);
        hix = max(hix, p.x);
        loy = min(loy, p.y);
        hiy = max(hiy, p.y);
    };
    for (const Point& p : scene.polygon.vertices()) grow(p);
    for (const auto& mk : scene.markers) grow(mk.at);
    for (const auto& pl : scene.paths)
        for (const Point& p : pl.line.points) grow(p);

    double x0 = lox.to_double(), x1 = hix.to_double();
    double y0 = loy.to_double(), y1 = hiy.to_double();
    double w = x1 - x0, h = y1 - y0;
    if (w <= 0) w = 1;
    if (h <= 0) h = 1;
    double margin = 0.1 * (w > h ? w : h);

    // y is flipped so the scene reads with y up
    auto X = [&](const Rat& x) { return num(x.to_double()); };
    auto Y = [&](const Rat& y) { return num(y1 - y.to_double()); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(x0 - margin) << " "
        << num(-margin) << " " << num(w + 2 * margin) << " " << num(h + 2 * margin) << "\">\n";

    out << "<path fill=\"none\" stroke=\"black\" stroke-width=\"" << num(0.01 * (w + h))
        << "\" d=\"";
    for (std::size_t i = 0; i < scene.polygon.size(); ++i) {
        const Point& p = scene.polygon.vertex(i);
        out << (i == 0 ? "M" : " L") << X(p.x) << " " << Y(p.y);
    }
    out << " Z\"/>\n";

    for (const auto& pl : scene.paths) {
        out << "<polyline fill=\"none\" stroke=\"red\" stroke-width=\"" << num(0.008 * (w + h))
            << "\" points=\"";
        for (std::size_t i = 0; i < pl.line.points.size(); ++i) {
            const Point& p = pl.line.points[i];
            out << (i ? " " : "") << X(p.x) << "," << Y(p.y);
        }
        out << "\"/>\n";
        if (!pl.label.empty() && !pl.line.points.empty())
            out << "<text font-size=\"" << num(0.03 * (w + h)) << "\" x=\""
                << X(pl.line.points.front().x) << "\" y=\"" << Y(pl.line.points.front().y)
                << "\">" << pl.label << "</text>\n";
    }

    for (const auto& mk : scene.markers) {
        out << "<circle fill=\"blue\" r=\"" << num(0.01 * (w + h)) << "\" cx=\"" << X(mk.at.x)
            << "\" cy=\"" << Y(mk.at.y) << "\"/>\n";
        if (!mk.label.empty())
            out << "<text font-size=\"" << num(0.03 * (w + h)) << "\" x=\"" << X(mk.at.x)
                << "\" y=\"" << Y(mk.at.y) << "\">" << mk.label << "</text>\n";
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace polylink
