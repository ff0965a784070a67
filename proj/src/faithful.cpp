#include "mumford2/faithful.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mumford2/linalg.hpp"

namespace mumford2 {

namespace {

const char* kMarkNames[kNumMarks] = {"P1", "P2", "P3", "P4", "S1",
                                     "S2", "S3", "T1", "T2", "T3"};

std::string locus_tag(SkeletonLocus l) {
    switch (l) {
        case SkeletonLocus::Cycle1: return "c1";
        case SkeletonLocus::Cycle2: return "c2";
        case SkeletonLocus::SharedEdge: return "sh";
        case SkeletonLocus::ConnectingEdge: return "br";
    }
    return "?";
}

}  // namespace

const char* to_string(MarkLabel l) { return kMarkNames[static_cast<int>(l)]; }

std::optional<MarkLabel> parse_mark_label(const std::string& s) {
    for (int i = 0; i < kNumMarks; ++i)
        if (s == kMarkNames[i]) return static_cast<MarkLabel>(i);
    return std::nullopt;
}

bool check_assumption(const PeriodMatrix& q) {
    Rat off = abs(q.q12);
    return -q.q11 > 2 * off && -q.q22 > 2 * off;
}

MarkedSkeleton place_marked_points(const MetricSkeleton& skel,
                                   const TropLattice& lat) {
    MarkedSkeleton m;
    m.skel = skel;
    m.lat = lat;
    Rat sh = skel.kind == SkeletonKind::SharedEdge ? skel.ell : Rat(0);
    m.A = skel.L1 - 2 * sh;
    m.B = skel.L2 - 2 * sh;
    if (!(m.A > 0 && m.B > 0))
        throw Error("assumption violated: shared edge at least half a cycle");

    auto c1 = [](const Rat& p) { return SkeletonPoint{SkeletonLocus::Cycle1, p}; };
    auto c2 = [](const Rat& p) { return SkeletonPoint{SkeletonLocus::Cycle2, p}; };
    m.mark[(int)MarkLabel::P1] = c1(m.A / 4);
    m.mark[(int)MarkLabel::P2] = c1(m.A / 2);
    m.mark[(int)MarkLabel::T2] = c1(skel.L1 / 2);
    m.mark[(int)MarkLabel::T1] = c1(3 * m.A / 4 + sh);
    m.mark[(int)MarkLabel::S3] = m.mark[(int)MarkLabel::T1];
    m.mark[(int)MarkLabel::P3] = c2(m.B / 4);
    m.mark[(int)MarkLabel::P4] = c2(m.B / 2);
    m.mark[(int)MarkLabel::S2] = c2(skel.L2 / 2);
    m.mark[(int)MarkLabel::S1] = c2(3 * m.B / 4 + sh);
    m.mark[(int)MarkLabel::T3] = m.mark[(int)MarkLabel::S1];

    m.coincidences = {{MarkLabel::T1, MarkLabel::S3},
                      {MarkLabel::S1, MarkLabel::T3}};
    if (sh == 0) {
        m.coincidences.push_back({MarkLabel::P2, MarkLabel::T2});
        m.coincidences.push_back({MarkLabel::P4, MarkLabel::S2});
    }
    return m;
}

int Divisor::degree() const {
    int d = 0;
    for (const auto& e : entries) d += e.mult;
    return d;
}

bool divisor_is_tropically_principal(const MarkedSkeleton& msk,
                                     const Divisor& d) {
    Vec2 sum{0, 0};
    for (const auto& e : d.entries)
        sum = sum + Rat(e.mult) * mu(msk.skel, msk.lat, e.at).rep;
    return reduce_mod_lattice(sum, msk.lat).rep == Vec2{0, 0};
}

SkeletonPoint vertex_key(const MetricSkeleton& skel, const SkeletonPoint& p) {
    SkeletonPoint q = canonical_point(skel, p);
    if (skel.kind == SkeletonKind::SharedEdge) {
        if ((q.locus == SkeletonLocus::Cycle1 ||
             q.locus == SkeletonLocus::Cycle2) &&
            q.pos == skel.free_length(q.locus == SkeletonLocus::Cycle1 ? 1 : 2))
            q = {SkeletonLocus::SharedEdge, 0};
        if (q.locus == SkeletonLocus::SharedEdge && q.pos == skel.ell)
            q = {SkeletonLocus::Cycle1, 0};
        if (q.locus == SkeletonLocus::Cycle2 && q.pos == 0)
            q = {SkeletonLocus::Cycle1, 0};
    } else {
        if (q.locus == SkeletonLocus::ConnectingEdge) {
            if (q.pos == 0)
                q = {SkeletonLocus::Cycle1, 0};
            else if (q.pos == skel.ell)
                q = {SkeletonLocus::Cycle2, 0};
        }
        if (skel.kind == SkeletonKind::ConnectingPoint &&
            q.locus == SkeletonLocus::Cycle2 && q.pos == 0)
            q = {SkeletonLocus::Cycle1, 0};
    }
    return q;
}

int SkelGraph::find_vertex(const SkeletonPoint& p) const {
    SkeletonPoint key = vertex_key(skel, p);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].key == key) return static_cast<int>(i);
    throw Error("point is not a vertex of the subdivided skeleton");
}

std::optional<int> SkelGraph::find_edge(int tail, int head) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].tail == tail && edges[i].head == head)
            return static_cast<int>(i);
    return std::nullopt;
}

SkelGraph build_graph(const MarkedSkeleton& msk,
                      const std::vector<SkeletonPoint>& extra_cuts) {
    const MetricSkeleton& skel = msk.skel;
    bool shared = skel.kind == SkeletonKind::SharedEdge;

    struct Chain {
        SkeletonLocus locus;
        Rat length;
        std::set<Rat> cuts;
    };
    std::vector<Chain> chains;
    chains.push_back({SkeletonLocus::Cycle1, skel.free_length(1), {}});
    chains.push_back({SkeletonLocus::Cycle2, skel.free_length(2), {}});
    if (skel.ell > 0)
        chains.push_back({shared ? SkeletonLocus::SharedEdge
                                 : SkeletonLocus::ConnectingEdge,
                          skel.ell,
                          {}});
    for (auto& c : chains) {
        c.cuts.insert(0);
        c.cuts.insert(c.length);
    }

    auto add_cut = [&](const SkeletonPoint& p) {
        SkeletonPoint c = canonical_point(skel, p);
        for (auto& ch : chains)
            if (ch.locus == c.locus) ch.cuts.insert(c.pos);
    };
    for (const auto& p : msk.mark) add_cut(p);
    for (const auto& p : extra_cuts) add_cut(p);

    SkelGraph g;
    g.skel = skel;
    auto vertex_at = [&](const SkeletonPoint& p) {
        SkeletonPoint key = vertex_key(skel, p);
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            if (g.vertices[i].key == key) return static_cast<int>(i);
        g.vertices.push_back({key, ""});
        return static_cast<int>(g.vertices.size() - 1);
    };

    std::map<SkeletonLocus, std::vector<int>> chain_edges;
    for (const auto& ch : chains) {
        std::vector<Rat> cuts(ch.cuts.begin(), ch.cuts.end());
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            int tail = vertex_at({ch.locus, cuts[i]});
            int head = vertex_at({ch.locus, cuts[i + 1]});
            g.edges.push_back(
                {tail, head, cuts[i + 1] - cuts[i], ch.locus, "", true});
            chain_edges[ch.locus].push_back(static_cast<int>(g.edges.size() - 1));
        }
    }

    for (int e : chain_edges[SkeletonLocus::Cycle1]) g.cycles[0].push_back({e, 1});
    for (int e : chain_edges[SkeletonLocus::Cycle2]) g.cycles[1].push_back({e, 1});
    if (shared && skel.ell > 0)
        for (int e : chain_edges[SkeletonLocus::SharedEdge]) {
            g.cycles[0].push_back({e, 1});
            g.cycles[1].push_back({e, 1});
        }

    g.base_vertex = g.find_vertex({SkeletonLocus::Cycle1, 0});

    // labels
    for (auto& v : g.vertices) {
        std::string name;
        if (v.key == g.vertices[g.base_vertex].key) name = "v0";
        if (shared && v.key == SkeletonPoint{SkeletonLocus::SharedEdge, 0})
            name = "w0";
        if (!shared && v.key == SkeletonPoint{SkeletonLocus::Cycle2, 0})
            name = "v0'";
        for (int i = 0; i < kNumMarks; ++i)
            if (vertex_key(skel, msk.mark[i]) == v.key)
                name += std::string(name.empty() ? "" : "=") + kMarkNames[i];
        if (name.empty())
            name = locus_tag(v.key.locus) + "@" + format_rat(v.key.pos);
        v.label = name;
    }
    for (auto& e : g.edges)
        e.label = "[" + g.vertices[e.tail].label + ">" +
                  g.vertices[e.head].label + "]";
    return g;
}

SlopeSolution solve_slope_field(const SkelGraph& g, const Divisor& d) {
    const std::size_t V = g.vertices.size(), E = g.edges.size();
    std::vector<std::vector<Rat>> A(V + 2, std::vector<Rat>(E, 0));
    std::vector<Rat> b(V + 2, 0);

    // divergence: at each vertex the outgoing slopes sum to the divisor
    // multiplicity there
    for (std::size_t e = 0; e < E; ++e) {
        A[g.edges[e].tail][e] += 1;
        A[g.edges[e].head][e] -= 1;
    }
    // divisor multiplicities keyed to vertices (entries may stack); the
    // caller must have cut the graph at every support point
    for (const auto& en : d.entries) b[g.find_vertex(en.at)] += en.mult;

    // closure: log|f| is single-valued around each cycle
    for (int c = 0; c < 2; ++c)
        for (auto [e, sign] : g.cycles[c])
            A[V + c][e] = Rat(sign) * g.edges[e].length;

    LinearSolution sol = solve_exact(A, b);
    if (!sol.consistent) throw Error("slope system inconsistent");
    if (!sol.unique) throw Error("slope system singular");
    SlopeSolution out;
    out.slope = sol.x;
    out.integral = std::all_of(sol.x.begin(), sol.x.end(), [](const Rat& r) {
        return denominator(r) == 1;
    });
    return out;
}

CoordinateFunctions build_coordinate_functions(const MarkedSkeleton& msk) {
    CoordinateFunctions out;
    auto at = [&](MarkLabel l, int m) {
        return DivisorEntry{msk.pos(l), m, to_string(l)};
    };
    out.f.entries = {at(MarkLabel::S1, 1),  at(MarkLabel::S2, 1),
                     at(MarkLabel::S3, 1),  at(MarkLabel::P1, -1),
                     at(MarkLabel::P2, -1), at(MarkLabel::P3, -1)};
    out.g.entries = {at(MarkLabel::T1, 1),  at(MarkLabel::T2, 1),
                     at(MarkLabel::T3, 1),  at(MarkLabel::P1, -1),
                     at(MarkLabel::P3, -1), at(MarkLabel::P4, -1)};

    auto m = [&](MarkLabel l) { return mu(msk.skel, msk.lat, msk.pos(l)).rep; };
    Vec2 target = m(MarkLabel::S3) + m(MarkLabel::P1) + m(MarkLabel::P3) -
                  m(MarkLabel::T2);
    TorusPoint x = reduce_mod_lattice(target, msk.lat);
    auto [U, V] = two_summand_decomposition(msk.lat, msk.skel, x);
    out.U = U;
    out.V = V;
    out.h.entries = {at(MarkLabel::T2, 1),  {U, 1, "U"},
                     {V, 1, "V"},           at(MarkLabel::S3, -1),
                     at(MarkLabel::P1, -1), at(MarkLabel::P3, -1)};

    for (const Divisor* d : {&out.f, &out.g, &out.h})
        if (!divisor_is_tropically_principal(msk, *d))
            throw Error("coordinate divisor is not tropically principal");
    return out;
}

TropicalCurve build_tropical_curve(const MarkedSkeleton& msk, const SkelGraph& g,
                                   const std::vector<SlopeSolution>& solutions,
                                   const std::vector<const Divisor*>& divisors) {
    const int dim = static_cast<int>(solutions.size());
    if (static_cast<int>(divisors.size()) != dim)
        throw Error("one divisor per coordinate expected");
    for (const auto& s : solutions)
        if (!s.integral) throw Error("non-integral slope field");

    TropicalCurve tc;
    tc.dim = dim;

    // integrate each coordinate from the base vertex
    const std::size_t V = g.vertices.size();
    std::vector<std::vector<Rat>> val(V);
    std::vector<bool> seen(V, false);
    std::vector<int> stack{g.base_vertex};
    val[g.base_vertex].assign(dim, 0);
    seen[g.base_vertex] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            const auto& ed = g.edges[e];
            int other = ed.tail == v ? ed.head : (ed.head == v ? ed.tail : -1);
            if (other < 0 || seen[other]) continue;
            Rat sign = ed.tail == v ? 1 : -1;
            val[other].resize(dim);
            for (int k = 0; k < dim; ++k)
                val[other][k] =
                    val[v][k] + sign * solutions[k].slope[e] * ed.length;
            seen[other] = true;
            stack.push_back(other);
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw Error("skeleton graph is disconnected");

    for (std::size_t v = 0; v < V; ++v)
        tc.vertices.push_back({val[v], g.vertices[v].label});
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& ed = g.edges[e];
        std::vector<Int> slope(dim);
        for (int k = 0; k < dim; ++k)
            slope[k] = numerator(solutions[k].slope[e]);
        tc.segments.push_back(
            {ed.tail, ed.head, slope, ed.length, ed.label, true});
    }

    // one ray per distinct zero/pole of the coordinate functions, direction
    // minus its multiplicity vector
    struct RaySeed {
        int base;
        std::vector<Int> dir;
    };
    std::map<std::string, RaySeed> seeds;
    for (int k = 0; k < dim; ++k)
        for (const auto& en : divisors[k]->entries) {
            auto it = seeds
                          .try_emplace(en.name,
                                       RaySeed{g.find_vertex(en.at),
                                               std::vector<Int>(dim, 0)})
                          .first;
            it->second.dir[k] -= en.mult;
        }
    std::map<std::string, std::size_t> ray_index;
    for (const auto& [name, seed] : seeds) {
        bool zero = std::all_of(seed.dir.begin(), seed.dir.end(),
                                [](const Int& x) { return x == 0; });
        if (zero) continue;
        ray_index[name] = tc.rays.size();
        tc.rays.push_back({seed.base, seed.dir, name});
    }

    // optional bounded edges toward coincident-pair branch vertices
    for (const auto& je : msk.join_edges) {
        if (je.eps <= 0) continue;
        std::string na = to_string(je.a), nb = to_string(je.b);
        auto ia = ray_index.find(na), ib = ray_index.find(nb);
        if (ia == ray_index.end() || ib == ray_index.end()) continue;
        TropicalCurve::Ray &ra = tc.rays[ia->second], &rb = tc.rays[ib->second];
        if (ra.base != rb.base) continue;  // pair does not coincide here
        std::vector<Int> sum(dim);
        for (int k = 0; k < dim; ++k) sum[k] = ra.dir[k] + rb.dir[k];
        std::vector<Rat> branch = tc.vertices[ra.base].pt;
        for (int k = 0; k < dim; ++k) branch[k] += je.eps * Rat(sum[k]);
        int bv = static_cast<int>(tc.vertices.size());
        tc.vertices.push_back({branch, na + "|" + nb});
        tc.segments.push_back({ra.base, bv, sum, je.eps,
                               "[" + na + "|" + nb + "]", false});
        ra.base = rb.base = bv;
    }
    return tc;
}

namespace {

Int vec_gcd(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, abs(x));
    return g;
}

// one piece of the embedded curve: a + t*u for t in [0, tmax] or [0, inf)
struct Piece {
    std::vector<Rat> a;
    std::vector<Rat> u;
    std::optional<Rat> tmax;
    int v1, v2;  // combinatorial endpoints (v2 = -1 for rays)
    std::string label;
    bool skeleton;
};

bool parallel(const std::vector<Rat>& u, const std::vector<Rat>& w) {
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * w[j] != u[j] * w[i]) return false;
    return true;
}

bool in_range(const Rat& t, const std::optional<Rat>& tmax) {
    return t >= 0 && (!tmax || t <= *tmax);
}

std::vector<Rat> point_at(const Piece& p, const Rat& t) {
    std::vector<Rat> x = p.a;
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += t * p.u[k];
    return x;
}

/// Returns a forbidden intersection point of the two pieces, if any.
/// Touching at a shared combinatorial endpoint is allowed.
std::optional<std::vector<Rat>> pieces_cross(const Piece& p, const Piece& q) {
    const std::size_t n = p.a.size();
    auto shares_vertex_at = [&](const std::vector<Rat>& x) {
        for (int a : {p.v1, p.v2})
            for (int b : {q.v1, q.v2})
                if (a >= 0 && a == b) return true;
        (void)x;
        return false;
    };
    auto allowed = [&](const std::vector<Rat>& x) {
        // the only allowed contact is at a shared combinatorial vertex, and
        // the contact point must actually be that vertex's image, which holds
        // automatically since both parameterizations pass through it
        return shares_vertex_at(x) &&
               ((point_at(p, 0) == x ||
                 (p.tmax && point_at(p, *p.tmax) == x)) &&
                (point_at(q, 0) == x ||
                 (q.tmax && point_at(q, *q.tmax) == x)));
    };

    if (!parallel(p.u, q.u)) {
        // t*u - s*w = q.a - p.a, solved from two independent coordinates
        std::vector<Rat> rhs(n);
        for (std::size_t k = 0; k < n; ++k) rhs[k] = q.a[k] - p.a[k];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Rat det = p.u[i] * (-q.u[j]) - (-q.u[i]) * p.u[j];
                if (det == 0) continue;
                Rat t = (rhs[i] * (-q.u[j]) - (-q.u[i]) * rhs[j]) / det;
                Rat s = (p.u[i] * rhs[j] - rhs[i] * p.u[j]) / det;
                for (std::size_t k = 0; k < n; ++k)
                    if (t * p.u[k] - s * q.u[k] != rhs[k]) return std::nullopt;
                if (!in_range(t, p.tmax) || !in_range(s, q.tmax))
                    return std::nullopt;
                std::vector<Rat> x = point_at(p, t);
                if (allowed(x)) return std::nullopt;
                return x;
            }
        return std::nullopt;
    }

    // parallel; collinear only if the offset is also parallel to u
    std::vector<Rat> off(n);
    for (std::size_t k = 0; k < n; ++k) off[k] = q.a[k] - p.a[k];
    if (!parallel(p.u, off)) return std::nullopt;
    std::size_t nz = 0;
    while (nz < n && p.u[nz] == 0) ++nz;
    if (nz == n) return std::nullopt;  // degenerate piece
    Rat t0 = off[nz] / p.u[nz];
    Rat c = q.u[nz] / p.u[nz];  // q's direction in p's parameter scale
    // q covers t in t0 + c*[0, q.tmax]
    Rat lo = t0;
    std::optional<Rat> hi;
    if (q.tmax)
        hi = t0 + c * *q.tmax;
    else if (c < 0)
        hi = t0;  // extends to -inf: interval is (-inf, t0]
    if (hi && *hi < lo) std::swap(lo, *hi);
    bool q_unbounded_up = !q.tmax && c > 0;
    bool q_unbounded_down = !q.tmax && c < 0;
    // intersect [lo, hi] (with possible infinities) with [0, p.tmax]
    Rat ilo = q_unbounded_down ? Rat(0) : std::max(lo, Rat(0));
    std::optional<Rat> ihi = p.tmax;
    if (!q_unbounded_up && hi && (!ihi || *hi < *ihi)) ihi = *hi;
    if (ihi && *ihi < ilo) return std::nullopt;
    if (ihi && *ihi == ilo) {
        std::vector<Rat> x = point_at(p, ilo);
        if (allowed(x)) return std::nullopt;
        return x;
    }
    return point_at(p, ilo);  // overlap of positive length: never allowed
}

}  // namespace

FaithfulnessReport check_faithful(const TropicalCurve& tc) {
    FaithfulnessReport rep;
    for (const auto& seg : tc.segments) {
        if (!seg.skeleton) continue;
        Int g = vec_gcd(seg.slope);
        if (g != 1) {
            rep.skeleton_faithful = false;
            rep.expansion_failures.push_back(
                "edge " + seg.label + ": expansion factor " + g.str());
        }
    }
    for (const auto& ray : tc.rays)
        if (vec_gcd(ray.dir) != 1) {
            rep.extended_faithful = false;
            rep.expansion_failures.push_back("ray " + ray.label +
                                             ": direction not primitive");
        }

    std::vector<Piece> pieces;
    for (const auto& seg : tc.segments) {
        Piece p;
        p.a = tc.vertices[seg.a].pt;
        p.u.resize(tc.dim);
        for (int k = 0; k < tc.dim; ++k)
            p.u[k] = tc.vertices[seg.b].pt[k] - p.a[k];
        p.tmax = 1;
        p.v1 = seg.a;
        p.v2 = seg.b;
        p.label = "edge " + seg.label;
        p.skeleton = seg.skeleton;
        pieces.push_back(std::move(p));
    }
    for (const auto& ray : tc.rays) {
        Piece p;
        p.a = tc.vertices[ray.base].pt;
        p.u.resize(tc.dim);
        for (int k = 0; k < tc.dim; ++k) p.u[k] = Rat(ray.dir[k]);
        p.v1 = ray.base;
        p.v2 = -1;
        p.label = "ray " + ray.label;
        p.skeleton = false;
        pieces.push_back(std::move(p));
    }

    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (std::size_t j = i + 1; j < pieces.size(); ++j) {
            auto hit = pieces_cross(pieces[i], pieces[j]);
            if (!hit) continue;
            rep.crossings.push_back({*hit, pieces[i].label, pieces[j].label});
            rep.extended_faithful = false;
            if (pieces[i].skeleton && pieces[j].skeleton)
                rep.skeleton_faithful = false;
        }
    return rep;
}

std::vector<std::string> check_harmonicity(const SkelGraph& g, const Divisor& d,
                                           const SlopeSolution& sol) {
    std::vector<std::string> bad;
    std::vector<Rat> div(g.vertices.size(), 0);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        div[g.edges[e].tail] += sol.slope[e];
        div[g.edges[e].head] -= sol.slope[e];
    }
    std::vector<Rat> mult(g.vertices.size(), 0);
    for (const auto& en : d.entries) mult[g.find_vertex(en.at)] += en.mult;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (div[v] != mult[v])
            bad.push_back("vertex " + g.vertices[v].label + ": divergence " +
                          format_rat(div[v]) + " != multiplicity " +
                          format_rat(mult[v]));
    for (int c = 0; c < 2; ++c) {
        Rat total = 0;
        for (auto [e, sign] : g.cycles[c])
            total += Rat(sign) * sol.slope[e] * g.edges[e].length;
        if (total != 0)
            bad.push_back("cycle " + std::to_string(c + 1) +
                          ": closure sum " + format_rat(total));
    }
    return bad;
}

std::vector<std::string> check_balancing(const TropicalCurve& tc) {
    std::vector<std::string> bad;
    std::vector<std::vector<Rat>> sum(tc.vertices.size(),
                                      std::vector<Rat>(tc.dim, 0));
    for (const auto& seg : tc.segments)
        for (int k = 0; k < tc.dim; ++k) {
            sum[seg.a][k] += Rat(seg.slope[k]);
            sum[seg.b][k] -= Rat(seg.slope[k]);
        }
    for (const auto& ray : tc.rays)
        for (int k = 0; k < tc.dim; ++k) sum[ray.base][k] += Rat(ray.dir[k]);
    for (std::size_t v = 0; v < tc.vertices.size(); ++v)
        for (int k = 0; k < tc.dim; ++k)
            if (sum[v][k] != 0) {
                bad.push_back("vertex " + tc.vertices[v].label +
                              ": unbalanced in coordinate " +
                              std::to_string(k + 1));
                break;
            }
    return bad;
}

TropResult tropicalize(const SchottkyRank2& s, const TropOptions& opts) {
    TropResult r;
    VerificationReport vr = verify_good_domain(s);
    if (!vr.ok())
        throw Error("not a good fundamental domain: " + vr.failures.front());
    r.normalized = normalize(s);
    r.q = log_q(r.normalized);
    if (!check_assumption(r.q))
        throw Error("unsupported: shared edge longer than half cycle");
    r.skel = build_skeleton(r.normalized, r.q);
    r.msk = place_marked_points(r.skel, TropLattice::from_period_matrix(r.q));
    r.msk.join_edges = opts.join_edges;
    r.fns = build_coordinate_functions(r.msk);
    r.graph = build_graph(r.msk, {r.fns.U, r.fns.V});
    r.sol_f = solve_slope_field(r.graph, r.fns.f);
    r.sol_g = solve_slope_field(r.graph, r.fns.g);
    r.sol_h = solve_slope_field(r.graph, r.fns.h);
    r.curve2 = build_tropical_curve(r.msk, r.graph, {r.sol_f, r.sol_g},
                                    {&r.fns.f, &r.fns.g});
    r.curve3 = build_tropical_curve(r.msk, r.graph,
                                    {r.sol_f, r.sol_g, r.sol_h},
                                    {&r.fns.f, &r.fns.g, &r.fns.h});
    r.report2 = check_faithful(r.curve2);
    r.report3 = check_faithful(r.curve3);

    r.warnings.push_back(
        "divisor of g uses poles P1, P3, P4; the variant with poles "
        "P2, P3, P4 fails the lattice-membership test");
    if (r.skel.kind == SkeletonKind::ConnectingPoint)
        r.warnings.push_back(
            "cycles meet in a point; marked-point construction applied with "
            "zero join length");
    return r;
}

}  // namespace mumford2
