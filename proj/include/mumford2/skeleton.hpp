#pragma once

#include <array>
#include <string>
#include <vector>

#include "mumford2/berkovich.hpp"
#include "mumford2/moebius.hpp"

namespace mumford2 {

using Vec2 = std::array<Rat, 2>;

inline Vec2 operator+(const Vec2& a, const Vec2& b) {
    return {a[0] + b[0], a[1] + b[1]};
}
inline Vec2 operator-(const Vec2& a, const Vec2& b) {
    return {a[0] - b[0], a[1] - b[1]};
}
inline Vec2 operator*(const Rat& s, const Vec2& v) {
    return {s * v[0], s * v[1]};
}

enum class SkeletonKind { SharedEdge, ConnectingEdge, ConnectingPoint };

std::string to_string(SkeletonKind k);

/// Genus-2 metric graph: two cycles of lengths L1, L2 sharing an edge of
/// length ell, joined by a bridge of length ell, or meeting in a point
/// (ell = 0).
struct MetricSkeleton {
    SkeletonKind kind;
    Rat L1, L2, ell;

    Rat cycle_length(int i) const { return i == 1 ? L1 : L2; }
    /// Length of the part of cycle i that is not the shared edge.
    Rat free_length(int i) const {
        return kind == SkeletonKind::SharedEdge ? cycle_length(i) - ell
                                                : cycle_length(i);
    }
};

/// Lattice log|Λ| ⊂ Q² with basis λ1 = (logq11, logq12), λ2 = (logq12, logq22).
struct TropLattice {
    Rat l11, l12, l22;

    Vec2 lambda1() const { return {l11, l12}; }
    Vec2 lambda2() const { return {l12, l22}; }
    Rat det() const { return l11 * l22 - l12 * l12; }

    static TropLattice from_period_matrix(const PeriodMatrix& q) {
        return {q.q11, q.q12, q.q22};
    }
};

/// Canonical representative in the fundamental parallelepiped
/// {s·(−λ1) + u·(−λ2) : 0 ≤ s,u < 1}.
struct TorusPoint {
    Vec2 rep;

    bool operator==(const TorusPoint&) const = default;
};

TorusPoint reduce_mod_lattice(const Vec2& x, const TropLattice& lat);

enum class SkeletonLocus { Cycle1, Cycle2, SharedEdge, ConnectingEdge };

/// Point of the skeleton. Cycle arcs are measured from the base vertex v0 in
/// the orientation whose μ-image increases in e_i; positions on the shared or
/// connecting edge use the offset from the far vertex w0 (shared) or from the
/// cycle-1 endpoint (bridge).
struct SkeletonPoint {
    SkeletonLocus locus;
    Rat pos;

    bool operator==(const SkeletonPoint&) const = default;
};

/// Canonical form: cycle arcs in [0, L_i), with arcs on the shared part
/// rewritten as SharedEdge offsets.
SkeletonPoint canonical_point(const MetricSkeleton& skel, const SkeletonPoint& p);

TorusPoint mu(const MetricSkeleton& skel, const TropLattice& lat,
              const SkeletonPoint& p);

struct BuildCheck {
    MetricSkeleton skel;
    SegmentGap tree_gap;  // cross-check data from the Berkovich tree
};

/// Skeleton from a normalized good fundamental domain plus its period matrix,
/// cross-checked against the tree geometry of the cycle paths.
MetricSkeleton build_skeleton(const SchottkyRank2& s, const PeriodMatrix& q);

struct IsometryReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Max-metric distance of μ-images (minimal lift mod Λ) must equal the arc
/// distance for every grid pair within one cycle.
IsometryReport check_mu_cycle_isometry(const MetricSkeleton& skel,
                                       const TropLattice& lat, const Rat& step);

/// Minimal max-norm over small lattice shifts of the difference of two
/// representatives.
Rat torus_distance_max(const TorusPoint& a, const TorusPoint& b,
                       const TropLattice& lat);

/// Unique pair (S, T) with μ(S) = v + α e1, μ(T) = v + β e2 and
/// μ(S) + μ(T) = x, for x = 2v + α e1 + β e2 inside the open box
/// 0 < α < L1 − ell, 0 < β < L2 − ell.
std::pair<SkeletonPoint, SkeletonPoint> two_summand_decomposition(
    const TropLattice& lat, const MetricSkeleton& skel, const TorusPoint& x);

}  // namespace mumford2
