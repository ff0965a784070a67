#include "mumford2/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace mumford2 {

namespace {

using nlohmann::json;

Puiseux parse_field(const json& j, const std::string& where) {
    if (!j.is_string())
        throw ParseError(where + ": expected a series string", 0);
    try {
        return parse_puiseux(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what(), e.position);
    }
}

Rat parse_rat_field(const json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return Rat(j.get<long long>());
        if (j.is_string()) return parse_rat(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what(), e.position);
    }
    throw ParseError(where + ": expected a rational", 0);
}

MoebiusMap parse_generator(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() ||
        !j[1].is_array() || j[0].size() != 2 || j[1].size() != 2)
        throw ParseError(where + ": expected a 2x2 matrix", 0);
    return {parse_field(j[0][0], where + "[0][0]"),
            parse_field(j[0][1], where + "[0][1]"),
            parse_field(j[1][0], where + "[1][0]"),
            parse_field(j[1][1], where + "[1][1]")};
}

Disc parse_disc(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("center") || !j.contains("log_radius"))
        throw ParseError(where + ": expected {center, log_radius}", 0);
    return {parse_field(j.at("center"), where + ".center"),
            parse_rat_field(j.at("log_radius"), where + ".log_radius")};
}

json disc_json(const Disc& d) {
    return {{"center", format_puiseux(d.center)},
            {"log_radius", format_rat(d.log_radius)}};
}

json generator_json(const MoebiusMap& m) {
    return json::array({json::array({format_puiseux(m.a), format_puiseux(m.b)}),
                        json::array({format_puiseux(m.c), format_puiseux(m.d)})});
}

double to_double(const Rat& x) {
    return numerator(x).convert_to<double>() /
           denominator(x).convert_to<double>();
}

std::string fmt_vec(const std::vector<Rat>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + format_rat(v[i]);
    return s + ")";
}

std::string fmt_ivec(const std::vector<Int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

}  // namespace

Instance parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object()) throw ParseError("top level must be an object", 0);

    Instance inst;
    inst.version = j.value("version", "1");
    if (inst.version != "1")
        throw ParseError("unsupported version tag '" + inst.version + "'", 0);

    if (!j.contains("generators") || !j["generators"].is_array() ||
        j["generators"].size() != 2)
        throw ParseError("expected exactly two generators", 0);
    inst.group.gen1 = parse_generator(j["generators"][0], "generators[0]");
    inst.group.gen2 = parse_generator(j["generators"][1], "generators[1]");

    if (!j.contains("discs") || !j["discs"].is_object())
        throw ParseError("expected discs object", 0);
    const json& d = j["discs"];
    for (const char* k : {"B1", "C1", "B2", "C2"})
        if (!d.contains(k))
            throw ParseError(std::string("missing disc ") + k, 0);
    inst.group.B1 = parse_disc(d["B1"], "discs.B1");
    inst.group.C1 = parse_disc(d["C1"], "discs.C1");
    inst.group.B2 = parse_disc(d["B2"], "discs.B2");
    inst.group.C2 = parse_disc(d["C2"], "discs.C2");

    if (j.contains("options")) {
        const json& o = j["options"];
        if (!o.is_object()) throw ParseError("options must be an object", 0);
        if (o.contains("precision"))
            inst.options.precision =
                parse_rat_field(o["precision"], "options.precision");
        if (o.contains("grid_step"))
            inst.options.grid_step =
                parse_rat_field(o["grid_step"], "options.grid_step");
        if (o.contains("join_edges")) {
            if (!o["join_edges"].is_array())
                throw ParseError("options.join_edges must be an array", 0);
            for (const auto& je : o["join_edges"]) {
                if (!je.is_object() || !je.contains("pair") ||
                    !je.contains("length") || !je["pair"].is_array() ||
                    je["pair"].size() != 2)
                    throw ParseError(
                        "join edge entries are {pair: [a,b], length: eps}", 0);
                auto a = parse_mark_label(je["pair"][0].get<std::string>());
                auto b = parse_mark_label(je["pair"][1].get<std::string>());
                if (!a || !b)
                    throw ParseError("unknown point label in join edge", 0);
                inst.options.join_edges.push_back(
                    {*a, *b, parse_rat_field(je["length"], "join length")});
            }
        }
    }
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string serialize_instance(const Instance& inst) {
    json j;
    j["version"] = inst.version;
    j["generators"] = json::array(
        {generator_json(inst.group.gen1), generator_json(inst.group.gen2)});
    j["discs"] = {{"B1", disc_json(inst.group.B1)},
                  {"C1", disc_json(inst.group.C1)},
                  {"B2", disc_json(inst.group.B2)},
                  {"C2", disc_json(inst.group.C2)}};
    json o = json::object();
    if (inst.options.precision)
        o["precision"] = format_rat(*inst.options.precision);
    o["grid_step"] = format_rat(inst.options.grid_step);
    o["join_edges"] = json::array();
    for (const auto& je : inst.options.join_edges)
        o["join_edges"].push_back(
            {{"pair", json::array({to_string(je.a), to_string(je.b)})},
             {"length", format_rat(je.eps)}});
    j["options"] = o;
    return j.dump(2);
}

Classified classify(const SchottkyRank2& s) {
    VerificationReport vr = verify_good_domain(s);
    if (!vr.ok())
        throw Error("not a good fundamental domain: " + vr.failures.front());
    Classified c;
    c.normalized = normalize(s);
    c.q = log_q(c.normalized);
    c.skel = build_skeleton(c.normalized, c.q);
    return c;
}

std::string classify_report(const Instance& inst, const Classified& c) {
    std::ostringstream out;
    out << "mumford2 report: classify\n";
    out << "skeleton kind: " << to_string(c.skel.kind) << "\n";
    out << "L1: " << format_rat(c.skel.L1) << "\n";
    out << "L2: " << format_rat(c.skel.L2) << "\n";
    out << "ell: " << format_rat(c.skel.ell) << "\n";
    out << "log q11: " << format_rat(c.q.q11) << "\n";
    out << "log q12: " << format_rat(c.q.q12) << "\n";
    out << "log q22: " << format_rat(c.q.q22) << "\n";
    out << "instance echo:\n" << serialize_instance(inst) << "\n";
    return out.str();
}

std::string tropicalize_report(const Instance& inst, const TropResult& r,
                               int dim) {
    const TropicalCurve& tc = dim == 3 ? r.curve3 : r.curve2;
    const FaithfulnessReport& rep = dim == 3 ? r.report3 : r.report2;

    std::ostringstream out;
    out << "mumford2 report: tropicalize (dimension " << dim << ")\n";
    out << "skeleton kind: " << to_string(r.skel.kind) << "\n";
    out << "L1: " << format_rat(r.skel.L1) << "\n";
    out << "L2: " << format_rat(r.skel.L2) << "\n";
    out << "ell: " << format_rat(r.skel.ell) << "\n";
    out << "log q11: " << format_rat(r.q.q11) << "\n";
    out << "log q12: " << format_rat(r.q.q12) << "\n";
    out << "log q22: " << format_rat(r.q.q22) << "\n";

    out << "marked points (label, locus, arc, mu):\n";
    for (int i = 0; i < kNumMarks; ++i) {
        MarkLabel l = static_cast<MarkLabel>(i);
        const SkeletonPoint& p = r.msk.pos(l);
        TorusPoint m = mu(r.skel, r.msk.lat, p);
        out << "  " << to_string(l) << "  "
            << (p.locus == SkeletonLocus::Cycle1 ? "cycle1" : "cycle2") << "  "
            << format_rat(p.pos) << "  (" << format_rat(m.rep[0]) << ", "
            << format_rat(m.rep[1]) << ")\n";
    }

    out << "slope vectors per edge:\n";
    for (const auto& seg : tc.segments)
        out << "  " << seg.label << "  " << fmt_ivec(seg.slope) << "  length "
            << format_rat(seg.length) << "\n";
    out << "rays (label, base, direction):\n";
    for (const auto& ray : tc.rays)
        out << "  " << ray.label << "  " << fmt_vec(tc.vertices[ray.base].pt)
            << "  " << fmt_ivec(ray.dir) << "\n";

    out << "skeleton faithful: " << (rep.skeleton_faithful ? "yes" : "no")
        << "\n";
    out << "extended skeleton faithful: "
        << (rep.extended_faithful ? "yes" : "no") << "\n";
    for (const auto& x : rep.expansion_failures)
        out << "  failure: " << x << "\n";
    out << "crossings: " << rep.crossings.size() << "\n";
    for (const auto& c : rep.crossings)
        out << "  " << c.piece1 << " x " << c.piece2 << " at "
            << fmt_vec(c.point) << "\n";
    for (const auto& w : r.warnings) out << "warning: " << w << "\n";
    out << "instance echo:\n" << serialize_instance(inst) << "\n";
    return out.str();
}

std::string render_svg(const TropicalCurve& tc, const FaithfulnessReport& rep) {
    constexpr double kScale = 40.0;  // px per value-group unit
    constexpr double kRayLen = 1.5;  // drawn ray length in units
    constexpr double kMargin = 60.0;

    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    auto grow = [&](double x, double y) {
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
    };
    for (const auto& v : tc.vertices) grow(to_double(v.pt[0]), to_double(v.pt[1]));
    for (const auto& r : tc.rays) {
        const auto& b = tc.vertices[r.base].pt;
        grow(to_double(b[0]) + kRayLen * r.dir[0].convert_to<double>(),
             to_double(b[1]) + kRayLen * r.dir[1].convert_to<double>());
    }

    auto sx = [&](double x) { return (x - minx) * kScale + kMargin; };
    auto sy = [&](double y) { return (maxy - y) * kScale + kMargin; };
    double w = sx(maxx) + kMargin, h = sy(miny) + kMargin;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
        << "\" height=\"" << h << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (int gx = static_cast<int>(std::floor(minx));
         gx <= static_cast<int>(std::ceil(maxx)); ++gx)
        svg << "<line x1=\"" << sx(gx) << "\" y1=\"" << sy(miny) << "\" x2=\""
            << sx(gx) << "\" y2=\"" << sy(maxy)
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    for (int gy = static_cast<int>(std::floor(miny));
         gy <= static_cast<int>(std::ceil(maxy)); ++gy)
        svg << "<line x1=\"" << sx(minx) << "\" y1=\"" << sy(gy) << "\" x2=\""
            << sx(maxx) << "\" y2=\"" << sy(gy)
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";

    for (const auto& seg : tc.segments) {
        const auto &a = tc.vertices[seg.a].pt, &b = tc.vertices[seg.b].pt;
        svg << "<line x1=\"" << sx(to_double(a[0])) << "\" y1=\""
            << sy(to_double(a[1])) << "\" x2=\"" << sx(to_double(b[0]))
            << "\" y2=\"" << sy(to_double(b[1])) << "\" stroke=\""
            << (seg.skeleton ? "#1f3b99" : "#666699")
            << "\" stroke-width=\"" << (seg.skeleton ? 3.5 : 2.0) << "\"/>\n";
    }

    for (const auto& ray : tc.rays) {
        const auto& b = tc.vertices[ray.base].pt;
        double x0 = to_double(b[0]), y0 = to_double(b[1]);
        double x1 = x0 + kRayLen * ray.dir[0].convert_to<double>();
        double y1 = y0 + kRayLen * ray.dir[1].convert_to<double>();
        svg << "<line x1=\"" << sx(x0) << "\" y1=\"" << sy(y0) << "\" x2=\""
            << sx(x1) << "\" y2=\"" << sy(y1)
            << "\" stroke=\"#aa3333\" stroke-width=\"1.5\"/>\n";
        std::string label = "trop " + ray.label;
        if (tc.dim == 3) label += " " + fmt_ivec(ray.dir);
        svg << "<text x=\"" << sx(x1) + 4 << "\" y=\"" << sy(y1)
            << "\" font-size=\"11\" fill=\"#aa3333\">" << label << "</text>\n";
    }

    if (tc.dim == 3)
        for (const auto& v : tc.vertices)
            svg << "<text x=\"" << sx(to_double(v.pt[0])) + 3 << "\" y=\""
                << sy(to_double(v.pt[1])) - 3
                << "\" font-size=\"9\" fill=\"#333333\">z="
                << format_rat(v.pt[2]) << "</text>\n";

    for (const auto& c : rep.crossings)
        svg << "<circle cx=\"" << sx(to_double(c.point[0])) << "\" cy=\""
            << sy(to_double(c.point[1]))
            << "\" r=\"7\" fill=\"none\" stroke=\"#cc0000\" "
               "stroke-width=\"2\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

namespace {

struct Suite {
    bool ok = true;
    std::ostringstream out;

    void result(const std::string& name, bool pass,
                const std::string& witness = "") {
        out << (pass ? "PASS" : "FAIL") << "  " << name << "\n";
        if (!pass) {
            ok = false;
            if (!witness.empty()) out << "      witness: " << witness << "\n";
        }
    }
};

std::vector<Puiseux> u_test_points(const SchottkyRank2& s) {
    std::vector<Puiseux> pts;
    for (long v : {2, 5, 7, -1})
        pts.push_back(Puiseux::from_rational(Rat(v)));
    pts.push_back(Puiseux::from_rational(Rat(1, 2)));
    pts.push_back(Puiseux::from_rational(Rat(1, 3)));
    pts.push_back(Puiseux::monomial(1, -1));
    pts.push_back(Puiseux::monomial(1, -2));
    pts.push_back(Puiseux::from_rational(2) + Puiseux::t());
    pts.push_back(Puiseux::from_rational(5) + Puiseux::monomial(1, 3));
    // boundary points of the four discs (outside the open discs)
    for (const Disc* d : s.discs())
        pts.push_back(d->center + Puiseux::monomial(1, -d->log_radius));
    return pts;
}

}  // namespace

VerifyOutcome run_verify(const Instance& inst, int words,
                         const Rat& grid_step) {
    Suite suite;
    suite.out << "mumford2 report: verify\n";

    VerificationReport vr = verify_good_domain(inst.group);
    suite.result("good fundamental domain", vr.ok(),
                 vr.failures.empty() ? "" : vr.failures.front());
    if (!vr.ok()) return {false, suite.out.str()};

    SchottkyRank2 n = normalize(inst.group);
    PeriodMatrix q = log_q(n);

    // period entries against the tree metric
    for (int i = 1; i <= 2; ++i) {
        TypeTwoPoint zp{n.B(i).center, n.B(i).log_radius};
        TypeTwoPoint zm{n.C(i).center, n.C(i).log_radius};
        Rat rho = path_distance(zp, zm);
        suite.result("period/tree: -log q" + std::to_string(i) +
                         std::to_string(i) + " = rho(zeta+, zeta-)",
                     -q.logq(i, i) == rho,
                     "-logq = " + format_rat(-q.logq(i, i)) + ", rho = " +
                         format_rat(rho));
    }
    {
        TreePath c1 = path({n.B1.center, n.B1.log_radius},
                           {n.C1.center, n.C1.log_radius});
        TreePath c2 = path({n.B2.center, n.B2.log_radius},
                           {n.C2.center, n.C2.log_radius});
        SegmentGap gap = segment_gap(c1, c2);
        Rat tree_off = gap.meet ? -gap.overlap_length : Rat(0);
        suite.result("period/tree: log q12 matches overlap/gap",
                     q.q12 == tree_off,
                     "logq12 = " + format_rat(q.q12) + ", tree = " +
                         format_rat(tree_off));
    }

    // truncated u-products against the closed form
    {
        Puiseux basepoint = Puiseux::from_rational(3);
        bool all = true;
        std::string witness;
        for (int i = 1; i <= 2 && all; ++i) {
            UOrbit orbit = u_orbit(n, i, basepoint, words);
            for (const Puiseux& z : u_test_points(n)) {
                Rat closed = u_log_abs(n, i, z);
                Rat truncated = u_log_abs_truncated(orbit, z, words);
                if (closed != truncated) {
                    all = false;
                    witness = "i=" + std::to_string(i) + ", z=" +
                              format_puiseux(z) + ": closed " +
                              format_rat(closed) + " vs truncated " +
                              format_rat(truncated);
                    break;
                }
            }
        }
        suite.result("u-function truncation agreement (word length " +
                         std::to_string(words) + ")",
                     all, witness);
    }

    if (!check_assumption(q)) {
        suite.result("standing assumption |q_ii| < |q12|^2", false,
                     "shared edge at least half a cycle; skipping the "
                     "remaining checks");
        return {false, suite.out.str()};
    }

    MetricSkeleton skel = build_skeleton(n, q);
    TropLattice lat = TropLattice::from_period_matrix(q);

    {
        IsometryReport iso = check_mu_cycle_isometry(skel, lat, grid_step);
        suite.result("mu isometric on each cycle (grid " +
                         format_rat(grid_step) + ")",
                     iso.ok, iso.ok ? "" : iso.violations.front());
    }

    MarkedSkeleton msk = place_marked_points(skel, lat);
    msk.join_edges = inst.options.join_edges;
    CoordinateFunctions fns = build_coordinate_functions(msk);

    // uniqueness of the two-summand decomposition on the grid
    {
        Vec2 target = mu(skel, lat, msk.pos(MarkLabel::S3)).rep +
                      mu(skel, lat, msk.pos(MarkLabel::P1)).rep +
                      mu(skel, lat, msk.pos(MarkLabel::P3)).rep -
                      mu(skel, lat, msk.pos(MarkLabel::T2)).rep;
        TorusPoint x = reduce_mod_lattice(target, lat);

        std::vector<SkeletonPoint> grid;
        std::set<std::pair<int, Rat>> seen;
        auto add = [&](SkeletonLocus locus, const Rat& pos) {
            SkeletonPoint key = vertex_key(skel, {locus, pos});
            if (seen.insert({static_cast<int>(key.locus), key.pos}).second)
                grid.push_back(key);
        };
        for (Rat a = 0; a < skel.L1; a += grid_step)
            add(SkeletonLocus::Cycle1, a);
        for (Rat a = 0; a < skel.L2; a += grid_step)
            add(SkeletonLocus::Cycle2, a);

        std::vector<Vec2> images;
        images.reserve(grid.size());
        for (const auto& p : grid) images.push_back(mu(skel, lat, p).rep);

        int hits = 0;
        bool matches_decomposition = false;
        std::string witness;
        SkeletonPoint ku = vertex_key(skel, fns.U), kv = vertex_key(skel, fns.V);
        for (std::size_t i = 0; i < grid.size(); ++i)
            for (std::size_t j = i; j < grid.size(); ++j) {
                if (reduce_mod_lattice(images[i] + images[j], lat).rep != x.rep)
                    continue;
                ++hits;
                bool match = (grid[i] == ku && grid[j] == kv) ||
                             (grid[i] == kv && grid[j] == ku);
                if (match) matches_decomposition = true;
                else
                    witness = "extra pair at (" + format_rat(grid[i].pos) +
                              ", " + format_rat(grid[j].pos) + ")";
            }
        suite.result("two-summand decomposition unique on grid",
                     hits == 1 && matches_decomposition, witness);
    }

    SkelGraph graph = build_graph(msk, {fns.U, fns.V});
    SlopeSolution sf = solve_slope_field(graph, fns.f);
    SlopeSolution sg = solve_slope_field(graph, fns.g);
    SlopeSolution sh = solve_slope_field(graph, fns.h);
    {
        std::vector<std::string> bad;
        for (auto [d, s] : {std::pair{&fns.f, &sf}, {&fns.g, &sg},
                            {&fns.h, &sh}}) {
            auto v = check_harmonicity(graph, *d, *s);
            bad.insert(bad.end(), v.begin(), v.end());
        }
        suite.result("harmonicity and cycle closure of slope fields",
                     bad.empty(), bad.empty() ? "" : bad.front());
        suite.result("slope fields integral",
                     sf.integral && sg.integral && sh.integral);
    }
    return {suite.ok, suite.out.str()};
}

}  // namespace mumford2
