#include <algorithm>

#include "doctest.h"
#include "instances.hpp"
#include "mumford2/faithful.hpp"

using namespace mumford2;

namespace {

SkeletonPoint c1(const Rat& p) { return {SkeletonLocus::Cycle1, p}; }
SkeletonPoint c2(const Rat& p) { return {SkeletonLocus::Cycle2, p}; }

Rat edge_slope(const SkelGraph& g, const SlopeSolution& s,
               const SkeletonPoint& tail, const SkeletonPoint& head) {
    auto e = g.find_edge(g.find_vertex(tail), g.find_vertex(head));
    REQUIRE(e.has_value());
    return s.slope[*e];
}

const TropicalCurve::Ray& ray(const TropicalCurve& tc, const std::string& name) {
    for (const auto& r : tc.rays)
        if (r.label == name) return r;
    REQUIRE(false);
    return tc.rays.front();
}

const std::vector<Rat>& vertex_pt(const TropicalCurve& tc, const SkelGraph& g,
                                  const SkeletonPoint& p) {
    return tc.vertices[g.find_vertex(p)].pt;
}

}  // namespace

TEST_CASE("check_assumption") {
    CHECK(check_assumption({-4, -1, -6}));
    CHECK(check_assumption({-3, 0, -4}));
    CHECK(!check_assumption({-2, -1, -6}));  // cycle 1 exactly twice the edge
    CHECK(!check_assumption({-4, -1, -1}));
}

TEST_CASE("marked points on the shared-edge skeleton") {
    MetricSkeleton skel{SkeletonKind::SharedEdge, 4, 6, 1};
    MarkedSkeleton m = place_marked_points(skel, {-4, -1, -6});
    CHECK(m.A == 2);
    CHECK(m.B == 4);
    CHECK(m.pos(MarkLabel::P1) == c1(Rat(1, 2)));
    CHECK(m.pos(MarkLabel::P2) == c1(1));
    CHECK(m.pos(MarkLabel::T2) == c1(2));
    CHECK(m.pos(MarkLabel::T1) == c1(Rat(5, 2)));
    CHECK(m.pos(MarkLabel::S3) == c1(Rat(5, 2)));
    CHECK(m.pos(MarkLabel::P3) == c2(1));
    CHECK(m.pos(MarkLabel::P4) == c2(2));
    CHECK(m.pos(MarkLabel::S2) == c2(3));
    CHECK(m.pos(MarkLabel::S1) == c2(4));
    CHECK(m.pos(MarkLabel::T3) == c2(4));
    CHECK(m.coincidences.size() == 2);
}

TEST_CASE("marked points on the bridge skeleton") {
    MetricSkeleton skel{SkeletonKind::ConnectingEdge, 3, 4, 2};
    MarkedSkeleton m = place_marked_points(skel, {-3, 0, -4});
    CHECK(m.A == 3);
    CHECK(m.B == 4);
    CHECK(m.pos(MarkLabel::P2) == c1(Rat(3, 2)));
    CHECK(m.pos(MarkLabel::T2) == c1(Rat(3, 2)));  // P2 = T2 here
    CHECK(m.pos(MarkLabel::P4) == c2(2));
    CHECK(m.pos(MarkLabel::S2) == c2(2));
    CHECK(m.coincidences.size() == 4);

    // a shared edge of half the cycle length leaves no room for the marks
    CHECK_THROWS_AS(
        place_marked_points({SkeletonKind::SharedEdge, 2, 6, 1}, {-2, -1, -6}),
        Error);
}

TEST_CASE("tropical principality of divisors") {
    MarkedSkeleton m =
        place_marked_points({SkeletonKind::SharedEdge, 4, 6, 1}, {-4, -1, -6});
    CoordinateFunctions fns = build_coordinate_functions(m);
    CHECK(fns.f.degree() == 0);
    CHECK(fns.g.degree() == 0);
    CHECK(fns.h.degree() == 0);
    CHECK(divisor_is_tropically_principal(m, fns.f));
    CHECK(divisor_is_tropically_principal(m, fns.g));
    CHECK(divisor_is_tropically_principal(m, fns.h));

    // the variant of div g with poles P2, P3, P4 is not principal
    Divisor alt;
    for (MarkLabel l : {MarkLabel::T1, MarkLabel::T2, MarkLabel::T3})
        alt.entries.push_back({m.pos(l), 1, to_string(l)});
    for (MarkLabel l : {MarkLabel::P2, MarkLabel::P3, MarkLabel::P4})
        alt.entries.push_back({m.pos(l), -1, to_string(l)});
    CHECK(!divisor_is_tropically_principal(m, alt));

    Divisor moved = fns.f;
    moved.entries[0].at.pos += Rat(1, 8);  // perturb S1
    CHECK(!divisor_is_tropically_principal(m, moved));
}

TEST_CASE("two-summand points of the reference instances") {
    MarkedSkeleton se =
        place_marked_points({SkeletonKind::SharedEdge, 4, 6, 1}, {-4, -1, -6});
    CoordinateFunctions fse = build_coordinate_functions(se);
    CHECK(fse.U == c1(1));  // coincides with P2
    CHECK(fse.V == c2(1));  // coincides with P3

    MarkedSkeleton ce = place_marked_points(
        {SkeletonKind::ConnectingEdge, 3, 4, 2}, {-3, 0, -4});
    CoordinateFunctions fce = build_coordinate_functions(ce);
    CHECK(fce.U == c1(Rat(3, 2)));
    CHECK(fce.V == c2(1));
}

TEST_CASE("graph structure and labels") {
    MarkedSkeleton m =
        place_marked_points({SkeletonKind::SharedEdge, 4, 6, 1}, {-4, -1, -6});
    CoordinateFunctions fns = build_coordinate_functions(m);
    SkelGraph g = build_graph(m, {fns.U, fns.V});
    CHECK(g.vertices.size() == 10);  // v0, w0, 4 cuts on cycle 1, 4 on cycle 2
    CHECK(g.edges.size() == 11);
    CHECK(g.cycles[0].size() == 6);
    CHECK(g.cycles[1].size() == 6);
    CHECK(g.vertices[g.base_vertex].label == "v0");
    CHECK(g.vertices[g.find_vertex({SkeletonLocus::SharedEdge, 0})].label ==
          "w0");
    CHECK(g.vertices[g.find_vertex(c1(Rat(5, 2)))].label == "S3=T1");
    CHECK(g.vertices[g.find_vertex(c2(4))].label == "S1=T3");
    // junctions fold to one vertex however they are addressed
    CHECK(g.find_vertex(c1(4)) == g.base_vertex);
    CHECK(g.find_vertex(c2(0)) == g.base_vertex);
    CHECK(g.find_vertex({SkeletonLocus::SharedEdge, 1}) == g.base_vertex);
    CHECK(g.find_vertex(c1(3)) ==
          g.find_vertex({SkeletonLocus::SharedEdge, 0}));
}

TEST_CASE("slope fields on SE-1") {
    MarkedSkeleton m =
        place_marked_points({SkeletonKind::SharedEdge, 4, 6, 1}, {-4, -1, -6});
    CoordinateFunctions fns = build_coordinate_functions(m);
    SkelGraph g = build_graph(m, {fns.U, fns.V});
    SlopeSolution sf = solve_slope_field(g, fns.f);
    SlopeSolution sg = solve_slope_field(g, fns.g);
    SlopeSolution sh = solve_slope_field(g, fns.h);
    CHECK(sf.integral);
    CHECK(sg.integral);
    CHECK(sh.integral);

    struct Row {
        SkeletonPoint tail, head;
        int f, gg, h;
    };
    SkeletonPoint w0{SkeletonLocus::SharedEdge, 0};
    SkeletonPoint v0s{SkeletonLocus::SharedEdge, 1};
    std::vector<Row> table = {
        {c1(0), c1(Rat(1, 2)), 1, 0, 0},        // a
        {c1(Rat(1, 2)), c1(1), 0, -1, -1},      // b
        {c1(1), c1(2), -1, -1, 0},              // c
        {c1(2), c1(Rat(5, 2)), -1, 0, 1},       // d
        {c1(Rat(5, 2)), c1(3), 0, 1, 0},        // e
        {w0, v0s, 1, 1, 0},                     // shared edge
        {c2(0), c2(1), 0, 1, 0},                // alpha
        {c2(1), c2(2), -1, 0, 0},               // beta
        {c2(2), c2(3), -1, -1, 0},              // gamma
        {c2(3), c2(4), 0, -1, 0},               // delta
        {c2(4), c2(5), 1, 0, 0},                // epsilon
    };
    for (const Row& r : table) {
        CHECK(edge_slope(g, sf, r.tail, r.head) == r.f);
        CHECK(edge_slope(g, sg, r.tail, r.head) == r.gg);
        CHECK(edge_slope(g, sh, r.tail, r.head) == r.h);
    }
    CHECK(check_harmonicity(g, fns.f, sf).empty());
    CHECK(check_harmonicity(g, fns.g, sg).empty());
    CHECK(check_harmonicity(g, fns.h, sh).empty());
}

TEST_CASE("slope fields on CE-1") {
    MarkedSkeleton m = place_marked_points(
        {SkeletonKind::ConnectingEdge, 3, 4, 2}, {-3, 0, -4});
    CoordinateFunctions fns = build_coordinate_functions(m);
    SkelGraph g = build_graph(m, {fns.U, fns.V});
    SlopeSolution sf = solve_slope_field(g, fns.f);
    SlopeSolution sg = solve_slope_field(g, fns.g);
    SlopeSolution sh = solve_slope_field(g, fns.h);

    struct Row {
        SkeletonPoint tail, head;
        int f, gg, h;
    };
    SkeletonPoint b0{SkeletonLocus::ConnectingEdge, 0};
    SkeletonPoint b1{SkeletonLocus::ConnectingEdge, 2};
    std::vector<Row> table = {
        {c1(0), c1(Rat(3, 4)), 1, 0, 0},            // a
        {c1(Rat(3, 4)), c1(Rat(3, 2)), 0, -1, -1},  // b
        {c1(Rat(3, 2)), c1(Rat(9, 4)), -1, 0, 1},   // d
        {c1(Rat(9, 4)), c1(3), 0, 1, 0},            // e
        {b0, b1, -1, 1, 0},                         // bridge
        {c2(0), c2(1), 0, 1, 0},                    // alpha
        {c2(1), c2(2), -1, 0, 0},                   // beta
        {c2(2), c2(3), 0, -1, 0},                   // delta
        {c2(3), c2(4), 1, 0, 0},                    // epsilon
    };
    for (const Row& r : table) {
        CHECK(edge_slope(g, sf, r.tail, r.head) == r.f);
        CHECK(edge_slope(g, sg, r.tail, r.head) == r.gg);
        CHECK(edge_slope(g, sh, r.tail, r.head) == r.h);
    }
    CHECK(check_harmonicity(g, fns.f, sf).empty());
    CHECK(check_harmonicity(g, fns.g, sg).empty());
    CHECK(check_harmonicity(g, fns.h, sh).empty());
}

TEST_CASE("solve_slope_field corner cases") {
    MarkedSkeleton m =
        place_marked_points({SkeletonKind::SharedEdge, 4, 6, 1}, {-4, -1, -6});
    SkelGraph g = build_graph(m, {});
    SlopeSolution zero = solve_slope_field(g, Divisor{});
    CHECK(std::all_of(zero.slope.begin(), zero.slope.end(),
                      [](const Rat& s) { return s == 0; }));

    // a non-principal divisor yields a harmonic but non-integral field
    Divisor d;
    d.entries = {{m.pos(MarkLabel::P1), 1, "P1"},
                 {m.pos(MarkLabel::P2), -1, "P2"}};
    CHECK(!divisor_is_tropically_principal(m, d));
    SlopeSolution s = solve_slope_field(g, d);
    CHECK(!s.integral);
    CHECK(check_harmonicity(g, d, s).empty());
}

TEST_CASE("tropical curve of SE-1 in the plane") {
    TropResult r = tropicalize(testinst::se1());
    const TropicalCurve& tc = r.curve2;
    const SkelGraph& g = r.graph;

    CHECK(vertex_pt(tc, g, c1(0)) == std::vector<Rat>{0, 0});
    CHECK(vertex_pt(tc, g, c1(Rat(1, 2))) == std::vector<Rat>{Rat(1, 2), 0});
    CHECK(vertex_pt(tc, g, c1(1)) ==
          std::vector<Rat>{Rat(1, 2), Rat(-1, 2)});
    CHECK(vertex_pt(tc, g, c1(2)) ==
          std::vector<Rat>{Rat(-1, 2), Rat(-3, 2)});
    CHECK(vertex_pt(tc, g, c1(Rat(5, 2))) == std::vector<Rat>{-1, Rat(-3, 2)});
    CHECK(vertex_pt(tc, g, {SkeletonLocus::SharedEdge, 0}) ==
          std::vector<Rat>{-1, -1});
    CHECK(vertex_pt(tc, g, c2(1)) == std::vector<Rat>{0, 1});
    CHECK(vertex_pt(tc, g, c2(2)) == std::vector<Rat>{-1, 1});
    CHECK(vertex_pt(tc, g, c2(3)) == std::vector<Rat>{-2, 0});
    CHECK(vertex_pt(tc, g, c2(4)) == std::vector<Rat>{-2, -1});

    CHECK(tc.rays.size() == 10);
    CHECK(ray(tc, "P1").dir == std::vector<Int>{1, 1});
    CHECK(ray(tc, "P2").dir == std::vector<Int>{1, 0});
    CHECK(ray(tc, "P3").dir == std::vector<Int>{1, 1});
    CHECK(ray(tc, "P4").dir == std::vector<Int>{0, 1});
    CHECK(ray(tc, "S1").dir == std::vector<Int>{-1, 0});
    CHECK(ray(tc, "S2").dir == std::vector<Int>{-1, 0});
    CHECK(ray(tc, "S3").dir == std::vector<Int>{-1, 0});
    CHECK(ray(tc, "T1").dir == std::vector<Int>{0, -1});
    CHECK(ray(tc, "T2").dir == std::vector<Int>{0, -1});
    CHECK(ray(tc, "T3").dir == std::vector<Int>{0, -1});
    CHECK(check_balancing(tc).empty());

    CHECK(r.report2.skeleton_faithful);
    CHECK(!r.report2.extended_faithful);
    REQUIRE(r.report2.crossings.size() == 1);
    CHECK(r.report2.crossings[0].point ==
          std::vector<Rat>{-2, Rat(-3, 2)});
    CHECK(r.report2.crossings[0].piece1 == "ray S3");
    CHECK(r.report2.crossings[0].piece2 == "ray T3");
}

TEST_CASE("tropical curve of SE-1 in three dimensions") {
    TropResult r = tropicalize(testinst::se1());
    const TropicalCurve& tc = r.curve3;
    const SkelGraph& g = r.graph;
    CHECK(tc.dim == 3);
    CHECK(vertex_pt(tc, g, c1(1)) ==
          std::vector<Rat>{Rat(1, 2), Rat(-1, 2), Rat(-1, 2)});
    CHECK(vertex_pt(tc, g, c1(Rat(5, 2))) ==
          std::vector<Rat>{-1, Rat(-3, 2), 0});
    CHECK(ray(tc, "S3").dir == std::vector<Int>{-1, 0, 1});
    CHECK(ray(tc, "T2").dir == std::vector<Int>{0, -1, -1});
    CHECK(ray(tc, "U").dir == std::vector<Int>{0, 0, -1});
    CHECK(ray(tc, "V").dir == std::vector<Int>{0, 0, -1});
    CHECK(ray(tc, "P1").dir == std::vector<Int>{1, 1, 1});
    CHECK(ray(tc, "P3").dir == std::vector<Int>{1, 1, 1});
    CHECK(check_balancing(tc).empty());

    CHECK(r.report3.skeleton_faithful);
    CHECK(r.report3.extended_faithful);
    CHECK(r.report3.crossings.empty());
    CHECK(r.report3.expansion_failures.empty());
}

TEST_CASE("tropical curve of CE-1") {
    TropResult r = tropicalize(testinst::ce1());
    const TropicalCurve& tc = r.curve2;
    const SkelGraph& g = r.graph;

    CHECK(vertex_pt(tc, g, c1(0)) == std::vector<Rat>{0, 0});
    CHECK(vertex_pt(tc, g, c2(0)) == std::vector<Rat>{-2, 2});
    CHECK(vertex_pt(tc, g, c1(Rat(3, 2))) ==
          std::vector<Rat>{Rat(3, 4), Rat(-3, 4)});
    CHECK(vertex_pt(tc, g, c2(3)) == std::vector<Rat>{-3, 2});

    // the bridge maps with slope (-1, 1)
    auto bridge = g.find_edge(g.find_vertex({SkeletonLocus::ConnectingEdge, 0}),
                              g.find_vertex({SkeletonLocus::ConnectingEdge, 2}));
    REQUIRE(bridge.has_value());
    CHECK(tc.segments[*bridge].slope == std::vector<Int>{-1, 1});

    CHECK(ray(tc, "P2").dir == std::vector<Int>{1, 0});
    CHECK(ray(tc, "T2").dir == std::vector<Int>{0, -1});
    CHECK(ray(tc, "P2").base == ray(tc, "T2").base);
    CHECK(check_balancing(tc).empty());
    CHECK(check_balancing(r.curve3).empty());

    CHECK(r.report2.skeleton_faithful);
    REQUIRE(r.report2.crossings.size() == 1);
    CHECK(r.report2.crossings[0].point ==
          std::vector<Rat>{-3, Rat(-3, 4)});
    CHECK(r.report2.crossings[0].piece1 == "ray S3");
    CHECK(r.report2.crossings[0].piece2 == "ray T3");
    CHECK(r.report3.extended_faithful);
    CHECK(r.report3.crossings.empty());
}

TEST_CASE("join edges separate coincident rays") {
    TropOptions opts;
    opts.join_edges = {{MarkLabel::S1, MarkLabel::T3, Rat(1, 4)}};
    TropResult r = tropicalize(testinst::se1(), opts);
    const TropicalCurve& tc = r.curve2;

    const auto& je = tc.segments.back();
    CHECK(!je.skeleton);
    CHECK(je.slope == std::vector<Int>{-1, -1});
    CHECK(je.length == Rat(1, 4));
    CHECK(tc.vertices[je.b].pt == std::vector<Rat>{Rat(-9, 4), Rat(-5, 4)});
    CHECK(ray(tc, "S1").base == je.b);
    CHECK(ray(tc, "T3").base == je.b);

    // verdicts are unchanged by the cosmetic separation
    FaithfulnessReport rep = check_faithful(tc);
    CHECK(rep.skeleton_faithful);
    CHECK(rep.crossings.size() == 1);
}

TEST_CASE("tropicalize end-to-end") {
    TropResult r = tropicalize(testinst::se1());
    CHECK(r.q.q11 == -4);
    CHECK(r.skel.kind == SkeletonKind::SharedEdge);
    CHECK(r.fns.U == c1(1));
    CHECK(r.fns.V == c2(1));
    CHECK(!r.warnings.empty());
}
