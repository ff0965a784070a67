#include "mumford2/skeleton.hpp"

#include <algorithm>

namespace mumford2 {

std::string to_string(SkeletonKind k) {
    switch (k) {
        case SkeletonKind::SharedEdge: return "shared-edge";
        case SkeletonKind::ConnectingEdge: return "connecting-edge";
        case SkeletonKind::ConnectingPoint: return "connecting-point";
    }
    return "?";
}

TorusPoint reduce_mod_lattice(const Vec2& x, const TropLattice& lat) {
    // x = s·(−λ1) + u·(−λ2); Cramer on the negated basis matrix.
    Rat det = lat.det();  // det of (−λ1 | −λ2) equals det of (λ1 | λ2)
    if (det == 0) throw Error("degenerate lattice");
    Rat s = (x[0] * (-lat.l22) - (-lat.l12) * x[1]) / det;
    Rat u = ((-lat.l11) * x[1] - x[0] * (-lat.l12)) / det;
    Rat fs = rat_frac(s), fu = rat_frac(u);
    Vec2 rep = fs * Vec2{-lat.l11, -lat.l12} + fu * Vec2{-lat.l12, -lat.l22};
    return {rep};
}

SkeletonPoint canonical_point(const MetricSkeleton& skel, const SkeletonPoint& p) {
    SkeletonPoint r = p;
    if (r.locus == SkeletonLocus::Cycle1 || r.locus == SkeletonLocus::Cycle2) {
        int i = r.locus == SkeletonLocus::Cycle1 ? 1 : 2;
        Rat L = skel.cycle_length(i);
        r.pos = r.pos - Rat(rat_floor(r.pos / L)) * L;  // wrap into [0, L)
        if (skel.kind == SkeletonKind::SharedEdge && r.pos > skel.free_length(i)) {
            return {SkeletonLocus::SharedEdge, r.pos - skel.free_length(i)};
        }
    } else if (r.locus == SkeletonLocus::SharedEdge) {
        if (skel.kind != SkeletonKind::SharedEdge)
            throw Error("no shared edge in this skeleton");
        if (r.pos < 0 || r.pos > skel.ell)
            throw Error("shared-edge offset out of range");
    } else {
        if (skel.kind == SkeletonKind::SharedEdge)
            throw Error("no connecting edge in this skeleton");
        if (r.pos < 0 || r.pos > skel.ell)
            throw Error("connecting-edge offset out of range");
    }
    return r;
}

TorusPoint mu(const MetricSkeleton& skel, const TropLattice& lat,
              const SkeletonPoint& p0) {
    SkeletonPoint p = canonical_point(skel, p0);
    Vec2 raw{0, 0};
    if (skel.kind == SkeletonKind::SharedEdge) {
        Vec2 v{skel.ell, skel.ell};
        switch (p.locus) {
            case SkeletonLocus::Cycle1: raw = v + Vec2{p.pos, 0}; break;
            case SkeletonLocus::Cycle2: raw = v + Vec2{0, p.pos}; break;
            case SkeletonLocus::SharedEdge: raw = {p.pos, p.pos}; break;
            default: throw Error("unreachable");
        }
    } else {
        switch (p.locus) {
            case SkeletonLocus::Cycle1: raw = {p.pos, 0}; break;
            case SkeletonLocus::Cycle2: raw = {0, p.pos}; break;
            // μ contracts the bridge: both coordinates of log|u| are locally
            // constant off the cycles.
            case SkeletonLocus::ConnectingEdge: raw = {0, 0}; break;
            default: throw Error("unreachable");
        }
    }
    return reduce_mod_lattice(raw, lat);
}

MetricSkeleton build_skeleton(const SchottkyRank2& s, const PeriodMatrix& q) {
    MetricSkeleton skel;
    skel.L1 = -q.q11;
    skel.L2 = -q.q22;
    if (!(skel.L1 > 0 && skel.L2 > 0)) throw Error("non-positive cycle length");

    TreePath cyc1 = path({s.B1.center, s.B1.log_radius},
                         {s.C1.center, s.C1.log_radius});
    TreePath cyc2 = path({s.B2.center, s.B2.log_radius},
                         {s.C2.center, s.C2.log_radius});
    SegmentGap gap = segment_gap(cyc1, cyc2);

    if (q.q12 < 0) {
        skel.kind = SkeletonKind::SharedEdge;
        skel.ell = -q.q12;
        if (!gap.meet || gap.overlap_length != skel.ell)
            throw Error(
                "internal consistency: tree overlap disagrees with log|q12|");
        if (!(skel.ell < std::min(skel.L1, skel.L2)))
            throw Error("shared edge not shorter than both cycles");
    } else if (q.q12 > 0) {
        throw Error("period matrix has positive off-diagonal entry");
    } else if (gap.meet) {
        if (gap.overlap_length != 0)
            throw Error(
                "internal consistency: cycles overlap but log|q12| is zero");
        skel.kind = SkeletonKind::ConnectingPoint;
        skel.ell = 0;
    } else {
        skel.kind = SkeletonKind::ConnectingEdge;
        skel.ell = gap.distance;
    }
    return skel;
}

Rat torus_distance_max(const TorusPoint& a, const TorusPoint& b,
                       const TropLattice& lat) {
    Vec2 d = a.rep - b.rep;
    std::optional<Rat> best;
    for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n) {
            Vec2 shifted = d + Rat(m) * lat.lambda1() + Rat(n) * lat.lambda2();
            Rat norm = std::max(Rat(abs(shifted[0])), Rat(abs(shifted[1])));
            if (!best || norm < *best) best = norm;
        }
    return *best;
}

IsometryReport check_mu_cycle_isometry(const MetricSkeleton& skel,
                                       const TropLattice& lat, const Rat& step) {
    IsometryReport rep;
    if (step <= 0) throw Error("grid step must be positive");
    for (int cycle = 1; cycle <= 2; ++cycle) {
        SkeletonLocus locus =
            cycle == 1 ? SkeletonLocus::Cycle1 : SkeletonLocus::Cycle2;
        Rat L = skel.cycle_length(cycle);
        std::vector<Rat> arcs;
        for (Rat a = 0; a < L; a += step) arcs.push_back(a);
        std::vector<TorusPoint> imgs;
        imgs.reserve(arcs.size());
        for (const Rat& a : arcs) imgs.push_back(mu(skel, lat, {locus, a}));
        for (std::size_t i = 0; i < arcs.size(); ++i)
            for (std::size_t j = i + 1; j < arcs.size(); ++j) {
                Rat arc_d = arcs[j] - arcs[i];
                arc_d = std::min(arc_d, Rat(L - arc_d));
                Rat img_d = torus_distance_max(imgs[i], imgs[j], lat);
                if (arc_d != img_d) {
                    rep.ok = false;
                    rep.violations.push_back(
                        "cycle " + std::to_string(cycle) + " arcs " +
                        format_rat(arcs[i]) + ", " + format_rat(arcs[j]) +
                        ": arc distance " + format_rat(arc_d) +
                        " != image distance " + format_rat(img_d));
                }
            }
    }
    return rep;
}

std::pair<SkeletonPoint, SkeletonPoint> two_summand_decomposition(
    const TropLattice& lat, const MetricSkeleton& skel, const TorusPoint& x) {
    // 2v is twice the image of the base vertex: (2ell, 2ell) when the cycles
    // share an edge, the origin otherwise
    Rat sh = skel.kind == SkeletonKind::SharedEdge ? skel.ell : Rat(0);
    Rat amax = skel.free_length(1), bmax = skel.free_length(2);
    std::optional<std::pair<Rat, Rat>> found;
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
            Vec2 cand = x.rep - Vec2{2 * sh, 2 * sh} +
                        Rat(m) * lat.lambda1() + Rat(n) * lat.lambda2();
            if (cand[0] > 0 && cand[0] < amax && cand[1] > 0 && cand[1] < bmax) {
                if (found && *found != std::pair<Rat, Rat>{cand[0], cand[1]})
                    throw Error("ambiguous two-summand decomposition");
                found = {cand[0], cand[1]};
            }
        }
    if (!found)
        throw Error("no two-summand decomposition: target is not 2v + "
                    "alpha e1 + beta e2 with alpha, beta in the open box");
    return {{SkeletonLocus::Cycle1, found->first},
            {SkeletonLocus::Cycle2, found->second}};
}

}  // namespace mumford2
