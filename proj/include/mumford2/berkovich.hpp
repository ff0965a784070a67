#pragma once

#include "mumford2/puiseux.hpp"

namespace mumford2 {

/// Type-2 point ζ_{a,r}: sup-seminorm over the closed disc of center a and
/// log-radius r. ζ_{a,r} = ζ_{b,s} iff log|a−b| ≤ r = s, so equality is a
/// predicate, never structural.
struct TypeTwoPoint {
    Puiseux center;
    Rat log_radius;
};

bool point_eq(const TypeTwoPoint& x, const TypeTwoPoint& y);

/// ζ_{a,R} with R = max{r, s, log|a−b|}; commutative under point equality.
TypeTwoPoint join(const TypeTwoPoint& x, const TypeTwoPoint& y);

/// Path-distance metric ρ = 2R − r − s.
Rat path_distance(const TypeTwoPoint& x, const TypeTwoPoint& y);

/// Geodesic [x,y] = [ζ_{a,r}, ζ_{a,R}] ∪ [ζ_{b,R}, ζ_{b,s}]; either monotone
/// segment may be degenerate.
struct TreePath {
    TypeTwoPoint from, top_from, top_to, to;  // top_* both equal the join

    Rat length() const;
};

TreePath path(const TypeTwoPoint& x, const TypeTwoPoint& y);

/// Median (Fermat point) of three points in the tree.
TypeTwoPoint median(const TypeTwoPoint& x, const TypeTwoPoint& y,
                    const TypeTwoPoint& z);

struct SegmentGap {
    Rat distance;            // minimal ρ between the two geodesics
    TypeTwoPoint on_first;   // nearest point on the first path
    TypeTwoPoint on_second;  // nearest point on the second path
    bool meet = false;       // paths intersect; witnesses span the overlap
    Rat overlap_length = 0;  // > 0 when the intersection is a segment
};

SegmentGap segment_gap(const TreePath& p1, const TreePath& p2);

}  // namespace mumford2
