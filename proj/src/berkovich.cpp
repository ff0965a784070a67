#include "mumford2/berkovich.hpp"

#include <algorithm>

namespace mumford2 {

bool point_eq(const TypeTwoPoint& x, const TypeTwoPoint& y) {
    if (x.log_radius != y.log_radius) return false;
    return log_abs_within(x.center - y.center, x.log_radius, false);
}

TypeTwoPoint join(const TypeTwoPoint& x, const TypeTwoPoint& y) {
    Rat R = std::max(x.log_radius, y.log_radius);
    Puiseux diff = x.center - y.center;
    // when |diff| exceeds R it is the exact leading term of the difference
    if (!log_abs_within(diff, R, false)) R = -diff.terms().front().first;
    return {x.center, R};
}

Rat path_distance(const TypeTwoPoint& x, const TypeTwoPoint& y) {
    return 2 * join(x, y).log_radius - x.log_radius - y.log_radius;
}

Rat TreePath::length() const {
    return (top_from.log_radius - from.log_radius) +
           (top_to.log_radius - to.log_radius);
}

TreePath path(const TypeTwoPoint& x, const TypeTwoPoint& y) {
    TypeTwoPoint top = join(x, y);
    return {x, {x.center, top.log_radius}, {y.center, top.log_radius}, y};
}

TypeTwoPoint median(const TypeTwoPoint& x, const TypeTwoPoint& y,
                    const TypeTwoPoint& z) {
    // Of the three pairwise joins, two coincide and dominate the third; the
    // minimal one is the center of the tripod.
    TypeTwoPoint jxy = join(x, y), jxz = join(x, z), jyz = join(y, z);
    const TypeTwoPoint* m = &jxy;
    if (jxz.log_radius < m->log_radius) m = &jxz;
    if (jyz.log_radius < m->log_radius) m = &jyz;
    return *m;
}

SegmentGap segment_gap(const TreePath& p1, const TreePath& p2) {
    const TypeTwoPoint &a = p1.from, &b = p1.to;
    const TypeTwoPoint &c = p2.from, &d = p2.to;
    // Projections of p2's endpoints onto the geodesic [a,b]. If they differ,
    // the geodesic [c,d] passes through [a,b] and the overlap is the segment
    // between them.
    TypeTwoPoint m1 = median(a, b, c);
    TypeTwoPoint m2 = median(a, b, d);
    if (!point_eq(m1, m2))
        return {0, m1, m2, true, path_distance(m1, m2)};
    TypeTwoPoint q = median(c, d, a);
    Rat dist = path_distance(m1, q);
    if (dist == 0) return {0, m1, q, true, 0};
    return {dist, m1, q, false, 0};
}

}  // namespace mumford2
