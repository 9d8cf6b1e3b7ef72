/* Apache License, Version 2.0 */
#include "polylink/polygon_io.hpp"

#include <sstream>
#include <vector>

#include "polylink/errors.hpp"

namespace polylink {

namespace {

std::string strip(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = line.find_last_not_of(" \t\r");
    return line.substr(b, e - b + 1);
}

}  // namespace

SimplePolygon parse_polygon_file(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;

    auto next_line = [&]() -> std::string {
        while (std::getline(in, raw)) {
            ++lineno;
            std::string s = strip(raw);
            if (!s.empty()) return s;
        }
        return "";
    };

    std::string header = next_line();
    if (header.empty()) throw ParseError(lineno, "missing vertex count");
    std::size_t count = 0;
    try {
        count = std::stoul(header);
    } catch (const std::exception&) {
        throw ParseError(lineno, "bad vertex count '" + header + "'");
    }

    std::vector<Point> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::string line = next_line();
        if (line.empty())
            throw ParseError(lineno, "expected " + std::to_string(count) + " vertices, got " +
                                         std::to_string(i));
        std::istringstream ls(line);
        std::string xs, ys, rest;
        ls >> xs >> ys;
        if (ys.empty()) throw ParseError(lineno, "vertex needs two coordinates");
        if (ls >> rest) throw ParseError(lineno, "trailing tokens after vertex");
        try {
            pts.push_back(parse_point(xs, ys));
        } catch (const ParseError& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return SimplePolygon::validate(std::move(pts));
}

std::string format_polygon_file(const SimplePolygon& P) {
    std::ostringstream out;
    out << P.size() << "\n";
    for (std::size_t i = 0; i < P.size(); ++i)
        out << P.vertex(i).x.str() << " " << P.vertex(i).y.str() << "\n";
    return out.str();
}

Point parse_point(std::string_view xs, std::string_view ys) {
    return Point{Rat::parse(xs), Rat::parse(ys)};
}

}  // namespace polylink
