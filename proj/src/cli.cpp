/* Apache License, Version 2.0 */
#include "polylink/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "polylink/errors.hpp"
#include "polylink/extremal.hpp"
#include "polylink/link_oracle.hpp"
#include "polylink/polygon_io.hpp"
#include "polylink/svg.hpp"

namespace polylink {

namespace {

struct UsageError {
    std::string what;
};

struct Args {
    std::vector<std::string> positional;
    std::vector<std::pair<std::string, std::string>> flags;

    bool has(const std::string& name) const {
        for (const auto& [k, v] : flags)
            if (k == name) return true;
        return false;
    }
    std::string get(const std::string& name, const std::string& fallback = "") const {
        for (const auto& [k, v] : flags)
            if (k == name) return v;
        return fallback;
    }
};

const bool kFlagTakesValue = true;

Args parse_args(const std::vector<std::string>& argv, std::size_t first,
                const std::vector<std::pair<std::string, bool>>& spec) {
    Args out;
    for (std::size_t i = first; i < argv.size(); ++i) {
        const std::string& tok = argv[i];
        if (tok.rfind("--", 0) == 0) {
            bool known = false;
            for (const auto& [name, takes_value] : spec) {
                if (tok != name) continue;
                known = true;
                std::string value;
                if (takes_value) {
                    if (i + 1 >= argv.size()) throw UsageError{"missing value for " + tok};
                    value = argv[++i];
                }
                out.flags.emplace_back(name, value);
                break;
            }
            if (!known) throw UsageError{"unknown flag " + tok};
        } else {
            out.positional.push_back(tok);
        }
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

std::uint64_t resolve_seed(const Args& args) {
    if (args.has("--seed")) return std::stoull(args.get("--seed"));
    if (const char* env = std::getenv("POLYLINK_SEED")) return std::stoull(env);
    return 0;
}

Location::Kind parse_domain(const std::string& s) {
    if (s == "int") return Location::Kind::Interior;
    if (s == "ext") return Location::Kind::Exterior;
    throw UsageError{"--domain must be int or ext"};
}

std::string point_str(const Point& p) { return p.x.str() + "," + p.y.str(); }

std::string polyline_str(const Polyline& pl) {
    std::string s;
    for (std::size_t i = 0; i < pl.points.size(); ++i) {
        if (i) s += " ";
        s += point_str(pl.points[i]);
    }
    return s;
}

int cmd_validate(const Args& args, std::ostream& out) {
    if (args.positional.size() != 1) throw UsageError{"usage: validate <polygon-file>"};
    SimplePolygon P = parse_polygon_file(read_file(args.positional[0]));
    out << "simple n=" << P.size() << "\n";
    return 0;
}

int cmd_classify(const Args& args, std::ostream& out) {
    if (args.positional.size() != 3) throw UsageError{"usage: classify <polygon-file> <x> <y>"};
    SimplePolygon P = parse_polygon_file(read_file(args.positional[0]));
    Point p = parse_point(args.positional[1], args.positional[2]);
    Location loc = classify(RaindropContext(P), p);
    switch (loc.kind) {
        case Location::Kind::Interior:
            out << "interior\n";
            break;
        case Location::Kind::Exterior:
            out << "exterior\n";
            break;
        case Location::Kind::Boundary:
            out << "boundary "
                << (loc.feature->kind == Feature::Kind::Vertex ? "vertex " : "edge ")
                << loc.feature->index << "\n";
            break;
    }
    return 0;
}

int cmd_visible(const Args& args, std::ostream& out) {
    if (args.positional.size() != 3) throw UsageError{"usage: visible <polygon-file> <x> <y>"};
    SimplePolygon P = parse_polygon_file(read_file(args.positional[0]));
    Point p = parse_point(args.positional[1], args.positional[2]);
    if (boundary_feature(P, p)) throw Error("point lies on the polygon");
    std::vector<std::size_t> vis = visible_vertices(P, p);
    for (std::size_t i = 0; i < vis.size(); ++i) out << (i ? " " : "") << vis[i];
    out << "\n";
    return 0;
}

int cmd_path(const Args& args, std::ostream& out) {
    if (args.positional.size() != 5)
        throw UsageError{"usage: path <polygon-file> <ax> <ay> <bx> <by> [--naive] [--svg file]"};
    SimplePolygon P = parse_polygon_file(read_file(args.positional[0]));
    Point a = parse_point(args.positional[1], args.positional[2]);
    Point b = parse_point(args.positional[3], args.positional[4]);
    PathCertificate cert = args.has("--naive") ? connect_naive(P, a, b) : connect(P, a, b);
    out << "links " << cert.path.links() << " bound " << cert.bound << " case "
        << to_string(cert.tag) << " path " << polyline_str(cert.path) << "\n";
    if (args.has("--svg")) {
        Scene scene{P, {{a, "a"}, {b, "b"}}, {{cert.path, to_string(cert.tag)}}};
        write_file(args.get("--svg"), emit_svg(scene));
    }
    return 0;
}

int cmd_linkdist(const Args& args, std::ostream& out) {
    if (args.positional.size() != 5)
        throw UsageError{
            "usage: linkdist <polygon-file> <ax> <ay> <bx> <by> --domain int|ext [--max-n N]"};
    Location::Kind domain = parse_domain(args.get("--domain", "int"));
    SimplePolygon P = parse_polygon_file(read_file(args.positional[0]));
    Point a = parse_point(args.positional[1], args.positional[2]);
    Point b = parse_point(args.positional[3], args.positional[4]);
    OracleOptions opts;
    opts.seed = resolve_seed(args);
    if (args.has("--max-n")) opts.max_n = std::stoul(args.get("--max-n"));
    OracleResult r = link_distance(P, a, b, domain, opts);
    if (!r.distance) {
        out << "unreachable\n";
        return 1;
    }
    out << "distance " << *r.distance << " stable " << (r.stability.stable ? 1 : 0)
        << " box-doublings " << r.stability.box_doublings << " enrichments "
        << r.stability.enrichment_rounds;
    if (*r.distance > 0) out << " witness " << polyline_str(r.witness);
    out << "\n";
    return 0;
}

int cmd_poldiam(const Args& args, std::ostream& out) {
    if (args.positional.size() != 1)
        throw UsageError{
            "usage: poldiam <polygon-file> --domain int|ext [--budget N] [--seed S] [--max-n N]"};
    Location::Kind domain = parse_domain(args.get("--domain", "int"));
    SimplePolygon P = parse_polygon_file(read_file(args.positional[0]));
    OracleOptions opts;
    opts.seed = resolve_seed(args);
    if (args.has("--max-n")) opts.max_n = std::stoul(args.get("--max-n"));
    std::size_t budget = args.has("--budget") ? std::stoul(args.get("--budget")) : 32;
    PoldiamSample s = poldiam_sampled(P, domain, budget, opts.seed, opts);
    out << "poldiam-lb " << s.lower_bound << " pair " << point_str(s.witness_a) << " "
        << point_str(s.witness_b);
    if (s.lower_bound > 0) out << " witness " << polyline_str(s.result.witness);
    out << "\n";
    return 0;
}

int cmd_gen(const Args& args, std::ostream& out) {
    if (args.positional.size() != 2 || args.positional[0] != "spiral")
        throw UsageError{"usage: gen spiral <n> [--out file] [--svg file] [--verify]"};
    std::size_t n = std::stoul(args.positional[1]);
    ExtremalInstance inst = spiral(n);

    std::ostringstream text;
    text << format_polygon_file(inst.polygon);
    text << "# int-witness " << inst.int_a.x.str() << " " << inst.int_a.y.str() << " "
         << inst.int_b.x.str() << " " << inst.int_b.y.str() << "\n";
    text << "# ext-witness " << inst.ext_c.x.str() << " " << inst.ext_c.y.str() << " "
         << inst.ext_d.x.str() << " " << inst.ext_d.y.str() << "\n";

    if (args.has("--out"))
        write_file(args.get("--out"), text.str());
    else
        out << text.str();

    if (args.has("--svg")) {
        Scene scene{inst.polygon,
                    {{inst.int_a, "a"}, {inst.int_b, "b"}, {inst.ext_c, "c"}, {inst.ext_d, "d"}},
                    {}};
        write_file(args.get("--svg"), emit_svg(scene));
    }

    if (args.has("--verify")) {
        VerifyReport rep = verify(inst);
        out << "verify int " << rep.int_actual << "/" << rep.int_claimed << " ext "
            << rep.ext_actual << "/" << rep.ext_claimed << " pass\n";
    }
    return 0;
}

void usage(std::ostream& err) {
    err << "usage: polylink <command> ...\n"
           "  validate <file>\n"
           "  classify <file> <x> <y>\n"
           "  visible <file> <x> <y>\n"
           "  path <file> <ax> <ay> <bx> <by> [--naive] [--svg out.svg]\n"
           "  linkdist <file> <ax> <ay> <bx> <by> --domain int|ext [--max-n N]\n"
           "  poldiam <file> --domain int|ext [--budget N] [--seed S] [--max-n N]\n"
           "  gen spiral <n> [--out file] [--svg file] [--verify]\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.empty()) {
            usage(err);
            return 2;
        }
        const std::string& cmd = args[0];
        if (cmd == "validate")
            return cmd_validate(parse_args(args, 1, {}), out);
        if (cmd == "classify")
            return cmd_classify(parse_args(args, 1, {}), out);
        if (cmd == "visible")
            return cmd_visible(parse_args(args, 1, {}), out);
        if (cmd == "path")
            return cmd_path(
                parse_args(args, 1, {{"--naive", !kFlagTakesValue}, {"--svg", kFlagTakesValue}}),
                out);
        if (cmd == "linkdist")
            return cmd_linkdist(parse_args(args, 1,
                                           {{"--domain", kFlagTakesValue},
                                            {"--seed", kFlagTakesValue},
                                            {"--max-n", kFlagTakesValue}}),
                                out);
        if (cmd == "poldiam")
            return cmd_poldiam(parse_args(args, 1,
                                          {{"--domain", kFlagTakesValue},
                                           {"--budget", kFlagTakesValue},
                                           {"--seed", kFlagTakesValue},
                                           {"--max-n", kFlagTakesValue}}),
                               out);
        if (cmd == "gen")
            return cmd_gen(parse_args(args, 1,
                                      {{"--out", kFlagTakesValue},
                                       {"--svg", kFlagTakesValue},
                                       {"--verify", !kFlagTakesValue}}),
                           out);
        usage(err);
        return 2;
    } catch (const UsageError& u) {
        err << "usage error: " << u.what << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace polylink
