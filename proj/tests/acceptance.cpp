// Acceptance suite: one verdict line per criterion, nonzero exit on failure.
// Expected to run from the repository root (instances are read from data/).
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "mumford2/io.hpp"

using namespace mumford2;

namespace {

int g_failures = 0;

void crit(int n, const std::string& name, bool pass,
          const std::string& note = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << n << ": " << name
              << "\n";
    if (!pass) {
        ++g_failures;
        if (!note.empty()) std::cout << "     note: " << note << "\n";
    }
}

template <typename F>
void crit_guarded(int n, const std::string& name, F body) {
    try {
        auto [pass, note] = body();
        crit(n, name, pass, note);
    } catch (const std::exception& e) {
        crit(n, name, false, std::string("exception: ") + e.what());
    }
}

SkeletonPoint c1(const Rat& p) { return {SkeletonLocus::Cycle1, p}; }
SkeletonPoint c2(const Rat& p) { return {SkeletonLocus::Cycle2, p}; }

struct SlopeRow {
    SkeletonPoint tail, head;
    int f, g;
};

bool check_slopes(const TropResult& r, const std::vector<SlopeRow>& table,
                  std::string& note) {
    for (const auto& row : table) {
        auto e = r.graph.find_edge(r.graph.find_vertex(row.tail),
                                   r.graph.find_vertex(row.head));
        if (!e) {
            note = "missing edge";
            return false;
        }
        if (r.sol_f.slope[*e] != row.f || r.sol_g.slope[*e] != row.g) {
            note = "edge " + r.graph.edges[*e].label + ": got (" +
                   format_rat(r.sol_f.slope[*e]) + ", " +
                   format_rat(r.sol_g.slope[*e]) + ")";
            return false;
        }
    }
    return true;
}

bool check_rays(const TropicalCurve& tc,
                const std::map<std::string, std::vector<Int>>& expected,
                std::string& note) {
    if (tc.rays.size() != expected.size()) {
        note = "expected " + std::to_string(expected.size()) + " rays, got " +
               std::to_string(tc.rays.size());
        return false;
    }
    for (const auto& ray : tc.rays) {
        auto it = expected.find(ray.label);
        if (it == expected.end() || it->second != ray.dir) {
            note = "ray " + ray.label;
            return false;
        }
    }
    return true;
}

std::vector<Puiseux> sample_points(const SchottkyRank2& s) {
    std::vector<Puiseux> pts;
    for (long v : {2, 5, 7, -1, 4, 9})
        pts.push_back(Puiseux::from_rational(Rat(v)));
    pts.push_back(Puiseux::from_rational(Rat(1, 2)));
    pts.push_back(Puiseux::monomial(1, -1));
    pts.push_back(Puiseux::monomial(1, -2));
    pts.push_back(Puiseux::from_rational(2) + Puiseux::t());
    for (const Disc* d : s.discs())
        pts.push_back(d->center + Puiseux::monomial(1, -d->log_radius));
    return pts;
}

}  // namespace

int main() {
    Instance se, ce;
    try {
        se = load_instance("data/se1.json");
        ce = load_instance("data/ce1.json");
    } catch (const std::exception& e) {
        std::cout << "FAIL setup: cannot load instances: " << e.what() << "\n";
        return 1;
    }
    TropResult rse, rce;
    try {
        rse = tropicalize(se.group);
        rce = tropicalize(ce.group);
    } catch (const std::exception& e) {
        std::cout << "FAIL setup: tropicalize: " << e.what() << "\n";
        return 1;
    }

    crit_guarded(1, "slope vectors of (log|f|, log|g|) match the tables", [&] {
        SkeletonPoint w0{SkeletonLocus::SharedEdge, 0};
        SkeletonPoint v0s{SkeletonLocus::SharedEdge, 1};
        std::vector<SlopeRow> se_table = {
            {c1(0), c1(Rat(1, 2)), 1, 0},   {c1(Rat(1, 2)), c1(1), 0, -1},
            {c1(1), c1(2), -1, -1},         {c1(2), c1(Rat(5, 2)), -1, 0},
            {c1(Rat(5, 2)), c1(3), 0, 1},   {w0, v0s, 1, 1},
            {c2(0), c2(1), 0, 1},           {c2(1), c2(2), -1, 0},
            {c2(2), c2(3), -1, -1},         {c2(3), c2(4), 0, -1},
            {c2(4), c2(5), 1, 0},
        };
        SkeletonPoint b0{SkeletonLocus::ConnectingEdge, 0};
        SkeletonPoint b1{SkeletonLocus::ConnectingEdge, 2};
        std::vector<SlopeRow> ce_table = {
            {c1(0), c1(Rat(3, 4)), 1, 0},
            {c1(Rat(3, 4)), c1(Rat(3, 2)), 0, -1},
            {c1(Rat(3, 2)), c1(Rat(9, 4)), -1, 0},
            {c1(Rat(9, 4)), c1(3), 0, 1},
            {b0, b1, -1, 1},
            {c2(0), c2(1), 0, 1},
            {c2(1), c2(2), -1, 0},
            {c2(2), c2(3), 0, -1},
            {c2(3), c2(4), 1, 0},
        };
        std::string note;
        bool ok = check_slopes(rse, se_table, note) &&
                  check_slopes(rce, ce_table, note);
        return std::pair{ok, note};
    });

    crit_guarded(2, "ray directions match the tables", [&] {
        std::map<std::string, std::vector<Int>> d2 = {
            {"P1", {1, 1}},  {"P2", {1, 0}},  {"P3", {1, 1}},  {"P4", {0, 1}},
            {"S1", {-1, 0}}, {"S2", {-1, 0}}, {"S3", {-1, 0}}, {"T1", {0, -1}},
            {"T2", {0, -1}}, {"T3", {0, -1}},
        };
        std::map<std::string, std::vector<Int>> d3 = {
            {"P1", {1, 1, 1}},  {"P2", {1, 0, 0}},   {"P3", {1, 1, 1}},
            {"P4", {0, 1, 0}},  {"S1", {-1, 0, 0}},  {"S2", {-1, 0, 0}},
            {"S3", {-1, 0, 1}}, {"T1", {0, -1, 0}},  {"T2", {0, -1, -1}},
            {"T3", {0, -1, 0}}, {"U", {0, 0, -1}},   {"V", {0, 0, -1}},
        };
        std::string note;
        bool ok = check_rays(rse.curve2, d2, note) &&
                  check_rays(rce.curve2, d2, note) &&
                  check_rays(rse.curve3, d3, note) &&
                  check_rays(rce.curve3, d3, note);
        return std::pair{ok, note};
    });

    crit_guarded(3, "period matrix agrees with the tree metric", [&] {
        std::string note;
        for (const TropResult* r : {&rse, &rce}) {
            const SchottkyRank2& n = r->normalized;
            for (int i = 1; i <= 2; ++i) {
                Rat rho = path_distance({n.B(i).center, n.B(i).log_radius},
                                        {n.C(i).center, n.C(i).log_radius});
                if (-r->q.logq(i, i) != rho)
                    return std::pair{false, "diagonal entry " +
                                                std::to_string(i)};
            }
            SegmentGap gap = segment_gap(
                path({n.B1.center, n.B1.log_radius},
                     {n.C1.center, n.C1.log_radius}),
                path({n.B2.center, n.B2.log_radius},
                     {n.C2.center, n.C2.log_radius}));
            Rat tree_off = gap.meet ? -gap.overlap_length : Rat(0);
            if (r->q.q12 != tree_off)
                return std::pair{false, std::string("off-diagonal entry")};
        }
        bool shared_overlap = rse.q.q12 == -1 && rce.q.q12 == 0;
        return std::pair{shared_overlap, note};
    });

    crit_guarded(4, "truncated u-products agree with the closed form", [&] {
        for (const TropResult* r : {&rse, &rce}) {
            const SchottkyRank2& n = r->normalized;
            Puiseux base = Puiseux::from_rational(3);
            for (int i = 1; i <= 2; ++i) {
                UOrbit orbit = u_orbit(n, i, base, 4);
                for (const Puiseux& z : sample_points(n))
                    for (int L : {2, 3, 4}) {
                        Rat closed = u_log_abs(n, i, z);
                        Rat approx = u_log_abs_truncated(orbit, z, L);
                        if (closed != approx)
                            return std::pair{
                                false, "i=" + std::to_string(i) + " L=" +
                                           std::to_string(L) + " z=" +
                                           format_puiseux(z)};
                    }
            }
        }
        return std::pair{true, std::string()};
    });

    crit_guarded(5, "mu is an isometry on each cycle (grid 1/16)", [&] {
        IsometryReport a =
            check_mu_cycle_isometry(rse.skel, rse.msk.lat, Rat(1, 16));
        IsometryReport b =
            check_mu_cycle_isometry(rce.skel, rce.msk.lat, Rat(1, 16));
        std::string note;
        if (!a.ok) note = a.violations.front();
        if (!b.ok) note = b.violations.front();
        return std::pair{a.ok && b.ok, note};
    });

    crit_guarded(6, "two-summand decomposition exists and is unique", [&] {
        // explicit target 2v + 1*e1 + 2*e2 on the shared-edge instance
        TorusPoint x = reduce_mod_lattice({3, 4}, rse.msk.lat);
        auto [S, T] = two_summand_decomposition(rse.msk.lat, rse.skel, x);
        if (!(S == c1(1) && T == c2(2)))
            return std::pair{false, std::string("explicit target")};

        // uniqueness over the 1/16 grid for the h-divisor targets
        for (const TropResult* r : {&rse, &rce}) {
            const MarkedSkeleton& m = r->msk;
            Vec2 target = mu(m.skel, m.lat, m.pos(MarkLabel::S3)).rep +
                          mu(m.skel, m.lat, m.pos(MarkLabel::P1)).rep +
                          mu(m.skel, m.lat, m.pos(MarkLabel::P3)).rep -
                          mu(m.skel, m.lat, m.pos(MarkLabel::T2)).rep;
            Vec2 want = reduce_mod_lattice(target, m.lat).rep;

            std::vector<SkeletonPoint> grid;
            std::set<std::pair<int, Rat>> seen;
            auto add = [&](SkeletonLocus locus, const Rat& pos) {
                SkeletonPoint key = vertex_key(m.skel, {locus, pos});
                if (seen.insert({static_cast<int>(key.locus), key.pos}).second)
                    grid.push_back(key);
            };
            for (Rat a = 0; a < m.skel.L1; a += Rat(1, 16))
                add(SkeletonLocus::Cycle1, a);
            for (Rat a = 0; a < m.skel.L2; a += Rat(1, 16))
                add(SkeletonLocus::Cycle2, a);
            std::vector<Vec2> img;
            img.reserve(grid.size());
            for (const auto& p : grid) img.push_back(mu(m.skel, m.lat, p).rep);

            SkeletonPoint ku = vertex_key(m.skel, r->fns.U);
            SkeletonPoint kv = vertex_key(m.skel, r->fns.V);
            int hits = 0;
            bool match = false;
            for (std::size_t i = 0; i < grid.size(); ++i)
                for (std::size_t j = i; j < grid.size(); ++j) {
                    if (reduce_mod_lattice(img[i] + img[j], m.lat).rep != want)
                        continue;
                    ++hits;
                    if ((grid[i] == ku && grid[j] == kv) ||
                        (grid[i] == kv && grid[j] == ku))
                        match = true;
                }
            if (hits != 1 || !match)
                return std::pair{false,
                                 "grid hits = " + std::to_string(hits)};
        }
        return std::pair{true, std::string()};
    });

    crit_guarded(7, "planar map fails faithfulness once; spatial map is "
                    "faithful", [&] {
        for (const TropResult* r : {&rse, &rce}) {
            if (!r->report2.skeleton_faithful)
                return std::pair{false, std::string("2d skeleton")};
            if (r->report2.extended_faithful ||
                r->report2.crossings.size() != 1)
                return std::pair{false, std::string("2d crossing count")};
            const Crossing& x = r->report2.crossings.front();
            if (x.piece1 != "ray S3" || x.piece2 != "ray T3")
                return std::pair{false, x.piece1 + " x " + x.piece2};
            if (!r->report3.skeleton_faithful || !r->report3.extended_faithful ||
                !r->report3.crossings.empty() ||
                !r->report3.expansion_failures.empty())
                return std::pair{false, std::string("3d verdict")};
        }
        return std::pair{true, std::string()};
    });

    crit_guarded(8, "slope field integral iff divisor principal", [&] {
        std::mt19937 rng(101);
        std::uniform_int_distribution<int> mult(-2, 2), pos16(0, 15), cyc(1, 2);
        for (const TropResult* r : {&rse, &rce}) {
            std::vector<Divisor> cases = {r->fns.f, r->fns.g, r->fns.h};
            for (int k = 0; k < 20; ++k) {
                Divisor d;
                int deg = 0;
                for (int e = 0; e < 4; ++e) {
                    int m = mult(rng);
                    if (m == 0) continue;
                    SkeletonLocus locus = cyc(rng) == 1
                                              ? SkeletonLocus::Cycle1
                                              : SkeletonLocus::Cycle2;
                    Rat L = r->skel.cycle_length(
                        locus == SkeletonLocus::Cycle1 ? 1 : 2);
                    Rat p = Rat(pos16(rng)) * L / 16;
                    d.entries.push_back(
                        {{locus, p}, m, "x" + std::to_string(e)});
                    deg += m;
                }
                if (deg != 0)
                    d.entries.push_back(
                        {{SkeletonLocus::Cycle1, Rat(pos16(rng)) / 8}, -deg,
                         "bal"});
                cases.push_back(d);
            }
            for (const Divisor& d : cases) {
                std::vector<SkeletonPoint> cuts;
                for (const auto& en : d.entries) cuts.push_back(en.at);
                cuts.push_back(r->fns.U);
                cuts.push_back(r->fns.V);
                SkelGraph g = build_graph(r->msk, cuts);
                SlopeSolution sol = solve_slope_field(g, d);
                bool principal = divisor_is_tropically_principal(r->msk, d);
                if (sol.integral != principal)
                    return std::pair{false,
                                     "integral=" +
                                         std::to_string(sol.integral) +
                                         " principal=" +
                                         std::to_string(principal)};
                if (!check_harmonicity(g, d, sol).empty())
                    return std::pair{false, std::string("harmonicity")};
            }
        }
        return std::pair{true, std::string()};
    });

    crit_guarded(9, "harmonicity, cycle closure, and balancing hold", [&] {
        for (const TropResult* r : {&rse, &rce}) {
            if (!check_harmonicity(r->graph, r->fns.f, r->sol_f).empty() ||
                !check_harmonicity(r->graph, r->fns.g, r->sol_g).empty() ||
                !check_harmonicity(r->graph, r->fns.h, r->sol_h).empty())
                return std::pair{false, std::string("harmonicity")};
            if (!check_balancing(r->curve2).empty() ||
                !check_balancing(r->curve3).empty())
                return std::pair{false, std::string("balancing")};
            if (!r->sol_f.integral || !r->sol_g.integral || !r->sol_h.integral)
                return std::pair{false, std::string("integrality")};
        }
        return std::pair{true, std::string()};
    });

    crit_guarded(10, "normalization undoes coordinate changes", [&] {
        SchottkyRank2 s = se.group;
        PeriodMatrix base = log_q(normalize(s));
        MoebiusMap g1{Puiseux::one(), Puiseux::from_rational(-2),
                      Puiseux::one(), Puiseux::from_rational(-3)};
        MoebiusMap g2{Puiseux::t(), Puiseux::one(), Puiseux::zero(),
                      Puiseux::one()};
        MoebiusMap g3{Puiseux::zero(), Puiseux::one(), Puiseux::one(),
                      Puiseux::zero()};  // 1/z
        int idx = 0;
        for (const MoebiusMap& g : {g1, g2, g3}) {
            ++idx;
            SchottkyRank2 n = normalize(conjugate(s, g));
            bool ordered = n.B1.center.log_abs() < n.C1.center.log_abs() &&
                           n.B2.center.log_abs() < n.C2.center.log_abs() &&
                           n.B1.center.log_abs() < n.B2.center.log_abs();
            PeriodMatrix q = log_q(n);
            if (!ordered || q.q11 != base.q11 || q.q12 != base.q12 ||
                q.q22 != base.q22)
                return std::pair{false,
                                 "conjugator " + std::to_string(idx)};
        }
        return std::pair{true, std::string()};
    });

    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED"
                                  : std::to_string(g_failures) +
                                        " CRITERIA FAILED")
              << "\n";
    return g_failures == 0 ? 0 : 1;
}
