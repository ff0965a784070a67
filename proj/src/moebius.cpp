#include "mumford2/moebius.hpp"

#include <algorithm>

namespace mumford2 {

MoebiusMap MoebiusMap::compose(const MoebiusMap& r) const {
    return {a * r.a + b * r.c, a * r.b + b * r.d,
            c * r.a + d * r.c, c * r.b + d * r.d};
}

MoebiusMap MoebiusMap::identity() {
    return {Puiseux::one(), Puiseux::zero(), Puiseux::zero(), Puiseux::one()};
}

P1Point moebius_apply(const MoebiusMap& m, const P1Point& z) {
    if (z.infinite) {
        if (m.c.is_zero()) return P1Point::infinity();
        return P1Point::finite(m.a / m.c);
    }
    return moebius_apply(m, z.value);
}

P1Point moebius_apply(const MoebiusMap& m, const Puiseux& z) {
    Puiseux den = m.c * z + m.d;
    if (den.is_zero()) return P1Point::infinity();
    Puiseux num = m.a * z + m.b;
    if (num.is_zero()) return P1Point::finite(Puiseux::zero());
    return P1Point::finite(num * den.inv());
}

bool Disc::contains(const Puiseux& z, bool open_disc) const {
    return log_abs_within(z - center, log_radius, open_disc);
}

bool disc_eq(const Disc& a, const Disc& b) {
    if (a.log_radius != b.log_radius) return false;
    return log_abs_within(a.center - b.center, a.log_radius, false);
}

namespace {

// log|c·z0 + d| compares the pole −d/c against the disc of center z0 without
// dividing: |c||z0 − pole| = |c·z0 + d|.
LogAbs pole_offset(const MoebiusMap& m, const Puiseux& center) {
    return (m.c * center + m.d).log_abs();
}

}  // namespace

Disc image_of_disc(const MoebiusMap& m, const Disc& disc) {
    Rat logdet = log_abs_finite(m.det());
    LogAbs denom = pole_offset(m, disc.center);
    if (!m.c.is_zero()) {
        // pole strictly outside the closed disc: |c||pole−center| > |c|·radius
        LogAbs bound = log_add(m.c.log_abs(), LogAbs(disc.log_radius));
        if (!(bound < denom)) throw Error("pole in disc: image is not a disc");
    }
    P1Point ic = moebius_apply(m, disc.center);
    if (ic.infinite) throw Error("pole in disc: image is not a disc");
    return {ic.value, logdet + disc.log_radius - 2 * log_finite(denom)};
}

Disc image_of_complement(const MoebiusMap& m, const Disc& disc, bool removed_open) {
    if (m.c.is_zero())
        throw Error("pole at infinity: image of complement is not a disc");
    Rat logdet = log_abs_finite(m.det());
    Rat logc = log_abs_finite(m.c);
    LogAbs denom = pole_offset(m, disc.center);
    LogAbs bound = LogAbs(logc + disc.log_radius);
    bool pole_ok = removed_open ? denom < bound : !(bound < denom);
    if (!pole_ok)
        throw Error(removed_open ? "pole not interior to removed disc"
                                 : "pole outside removed disc");
    return {m.a / m.c, logdet - 2 * logc - disc.log_radius};
}

VerificationReport verify_good_domain(const SchottkyRank2& s) {
    VerificationReport rep;
    auto fail = [&rep](std::string msg) { rep.failures.push_back(std::move(msg)); };

    auto ds = s.discs();
    static const char* names[4] = {"B1", "C1", "B2", "C2"};
    rep.discs_disjoint = true;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            LogAbs dist = (ds[i]->center - ds[j]->center).log_abs();
            Rat rmax = std::max(ds[i]->log_radius, ds[j]->log_radius);
            if (!(LogAbs(rmax) < dist)) {
                rep.discs_disjoint = false;
                fail(std::string("discs ") + names[i] + " and " + names[j] +
                     " are not disjoint");
            }
        }

    rep.zero_outside = true;
    for (int i = 0; i < 4; ++i) {
        if (ds[i]->contains(Puiseux::zero(), false)) {
            rep.zero_outside = false;
            fail(std::string("0 lies in disc ") + names[i]);
        }
    }

    for (int i = 1; i <= 2; ++i) {
        try {
            Disc img = image_of_complement(s.gen(i), s.B(i), /*removed_open=*/true);
            rep.maps_closed[i - 1] = disc_eq(img, s.C(i));
            if (!rep.maps_closed[i - 1])
                fail("gen" + std::to_string(i) + " does not map P1\\B" +
                     std::to_string(i) + "° onto C" + std::to_string(i));
        } catch (const Error& e) {
            rep.maps_closed[i - 1] = false;
            fail("gen" + std::to_string(i) + " closed-image check: " + e.what());
        }
        try {
            Disc img = image_of_complement(s.gen(i).inverse(), s.C(i),
                                           /*removed_open=*/false);
            rep.maps_open[i - 1] = disc_eq(img, s.B(i));
            if (!rep.maps_open[i - 1])
                fail("gen" + std::to_string(i) + "^-1 does not map P1\\C" +
                     std::to_string(i) + " onto B" + std::to_string(i) + "°");
        } catch (const Error& e) {
            rep.maps_open[i - 1] = false;
            fail("gen" + std::to_string(i) + " open-image check: " + e.what());
        }
    }
    return rep;
}

SchottkyRank2 conjugate(const SchottkyRank2& s, const MoebiusMap& g) {
    if (!g.c.is_zero()) {
        // pole of g must avoid every closed disc so disc images stay discs
        for (const Disc* d : s.discs())
            (void)image_of_disc(g, *d);
    }
    MoebiusMap ginv = g.inverse();
    return {g.compose(s.gen1).compose(ginv), g.compose(s.gen2).compose(ginv),
            image_of_disc(g, s.B1), image_of_disc(g, s.C1),
            image_of_disc(g, s.B2), image_of_disc(g, s.C2)};
}

namespace {

SchottkyRank2 swap_generator(const SchottkyRank2& s, int i) {
    SchottkyRank2 r = s;
    if (i == 1) {
        r.gen1 = s.gen1.inverse();
        std::swap(r.B1, r.C1);
    } else {
        r.gen2 = s.gen2.inverse();
        std::swap(r.B2, r.C2);
    }
    return r;
}

// Point just off `center`: outside the closed disc of log-radius `radius`,
// closer than every distance in `bounds`. Midpoint in the dense value group.
Puiseux point_near(const Puiseux& center, const Rat& radius,
                   const std::vector<Rat>& bounds) {
    Rat dmin = bounds.front();
    for (const Rat& b : bounds) dmin = std::min(dmin, b);
    if (!(radius < dmin)) throw Error("no room to pick a nearby point");
    Rat target = (radius + dmin) / 2;  // log|p − center| = target
    return center + Puiseux::monomial(1, -target);
}

MoebiusMap cross_conjugator(const Puiseux& p, const Puiseux& q) {
    // z ↦ (z−p)/(z−q)
    return {Puiseux::one(), p.neg(), Puiseux::one(), q.neg()};
}

Rat off_diagonal_logq(const SchottkyRank2& s) {
    const Puiseux &b1 = s.B1.center, &c1 = s.C1.center;
    const Puiseux &b2 = s.B2.center, &c2 = s.C2.center;
    return -(log_abs_finite(b2 - c1) + log_abs_finite(c2 - b1) -
             log_abs_finite(b2 - b1) - log_abs_finite(c2 - c1));
}

}  // namespace

SchottkyRank2 normalize(const SchottkyRank2& s0) {
    if (!verify_good_domain(s0).ok())
        throw Error("normalize requires a verified good fundamental domain");

    // Relabel generators so that the pair (b1, c2) realizes the maximal
    // pairwise distance; some cross pair always does by the ultrametric
    // inequality.
    SchottkyRank2 s = s0;
    {
        auto dist = [&](const Disc& x, const Disc& y) {
            return log_abs_finite(x.center - y.center);
        };
        struct Cand {
            int swap1, swap2;
            Rat d;
        };
        std::vector<Cand> cands = {
            {0, 1, dist(s.B1, s.B2)},  // (b1, b2): b2 must become c2
            {0, 0, dist(s.B1, s.C2)},
            {1, 1, dist(s.C1, s.B2)},
            {1, 0, dist(s.C1, s.C2)},
        };
        const Cand* best = &cands[0];
        for (const Cand& c : cands)
            if (best->d < c.d) best = &c;
        if (best->swap1) s = swap_generator(s, 1);
        if (best->swap2) s = swap_generator(s, 2);
    }

    {
        const Puiseux &b1 = s.B1.center, &c1 = s.C1.center;
        const Puiseux &b2 = s.B2.center, &c2 = s.C2.center;
        Puiseux p = point_near(b1, s.B1.log_radius,
                               {log_abs_finite(b1 - c1), log_abs_finite(b1 - b2),
                                log_abs_finite(b1 - c2)});
        Puiseux q = point_near(c2, s.C2.log_radius,
                               {log_abs_finite(c2 - b1), log_abs_finite(c2 - c1),
                                log_abs_finite(c2 - b2)});
        s = conjugate(s, cross_conjugator(p, q));
    }

    // Orientation: overlapping cycles must contribute with opposite signs,
    // log q12 <= 0. A positive value means cycle 1 is traversed backwards
    // (the relabeling tie between (b1, c2) and (c1, c2) broke the wrong way);
    // swap generator 1, reconjugating so the ordering survives.
    if (off_diagonal_logq(s) > 0) {
        const Puiseux &b1 = s.B1.center, &c1 = s.C1.center;
        const Puiseux &b2 = s.B2.center, &c2 = s.C2.center;
        Puiseux p = point_near(c1, s.C1.log_radius,
                               {log_abs_finite(c1 - c2), log_abs_finite(c1 - b1),
                                log_abs_finite(c1 - b2)});
        Puiseux q = point_near(c2, s.C2.log_radius,
                               {log_abs_finite(c2 - c1), log_abs_finite(c2 - b2),
                                log_abs_finite(c2 - b1)});
        s = conjugate(s, cross_conjugator(p, q));
        s = swap_generator(s, 1);
    }

    // Shared-edge case: make |b2| < |c1| strict.
    if (off_diagonal_logq(s) < 0 &&
        !(s.B2.center.log_abs() < s.C1.center.log_abs())) {
        const Puiseux &b1 = s.B1.center, &c1 = s.C1.center;
        const Puiseux &b2 = s.B2.center, &c2 = s.C2.center;
        Puiseux p = point_near(c1, s.C1.log_radius,
                               {log_abs_finite(c1 - c2), log_abs_finite(c1 - b1),
                                log_abs_finite(c1 - b2)});
        Puiseux q = point_near(c2, s.C2.log_radius,
                               {log_abs_finite(c2 - c1), log_abs_finite(c2 - b2),
                                log_abs_finite(c2 - b1)});
        s = conjugate(s, cross_conjugator(p, q));
        s = swap_generator(s, 1);
    }

    LogAbs lb1 = s.B1.center.log_abs(), lc1 = s.C1.center.log_abs();
    LogAbs lb2 = s.B2.center.log_abs(), lc2 = s.C2.center.log_abs();
    if (!(lb1 < lc1 && lc1 < lc2 && lb1 < lb2 && lb2 < lc2))
        throw Error("normalization failed to order the disc centers");
    if (!verify_good_domain(s).ok())
        throw Error("normalized datum failed good-domain verification");
    return s;
}

PeriodMatrix log_q(const SchottkyRank2& s) {
    for (int i = 1; i <= 2; ++i)
        if (!(s.B(i).center.log_abs() < s.C(i).center.log_abs()))
            throw Error("log_q requires the normalized ordering |b_i| < |c_i|");
    PeriodMatrix pm;
    pm.q11 = -(2 * log_abs_finite(s.C1.center) - s.B1.log_radius - s.C1.log_radius);
    pm.q22 = -(2 * log_abs_finite(s.C2.center) - s.B2.log_radius - s.C2.log_radius);
    pm.q12 = off_diagonal_logq(s);
    return pm;
}

Rat u_log_abs(const SchottkyRank2& s, int i, const Puiseux& z) {
    for (const Disc* d : s.discs())
        if (d->contains(z, /*open_disc=*/true))
            throw Error("outside fundamental domain hypothesis: z in an open disc");
    return log_abs_finite(z - s.B(i).center) - log_abs_finite(z - s.C(i).center);
}

std::vector<GroupWord> reduced_words(const SchottkyRank2& s, int max_len) {
    if (max_len < 0) throw Error("word length must be >= 0");
    const MoebiusMap letter[4] = {s.gen1, s.gen1.inverse(), s.gen2,
                                  s.gen2.inverse()};
    std::vector<GroupWord> out;
    out.push_back({{}, MoebiusMap::identity()});
    std::size_t level_begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t w = level_begin; w < level_end; ++w) {
            for (std::int8_t l = 0; l < 4; ++l) {
                if (!out[w].letters.empty() &&
                    (out[w].letters.back() ^ 1) == l)
                    continue;  // adjacent inverse pair
                GroupWord next;
                next.letters = out[w].letters;
                next.letters.push_back(l);
                next.map = out[w].map.compose(letter[l]);
                out.push_back(std::move(next));
            }
        }
        level_begin = level_end;
    }
    return out;
}

UOrbit u_orbit(const SchottkyRank2& s, int i, const Puiseux& basepoint,
               int max_len) {
    if (max_len < 0) throw Error("word length must be >= 0");
    const MoebiusMap letter[4] = {s.gen1, s.gen1.inverse(), s.gen2,
                                  s.gen2.inverse()};
    const Puiseux gia = [&] {
        P1Point p = moebius_apply(s.gen(i), basepoint);
        if (p.infinite) throw Error("degenerate basepoint: orbit hits infinity");
        return p.value;
    }();
    // Build words by prepending letters, so a child's orbit point is one
    // generator applied to its parent's cached point (no matrix composition).
    UOrbit orb;
    orb.pairs.push_back({-1, basepoint, gia});
    orb.level_end.push_back(1);
    std::size_t level_begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t level_end = orb.pairs.size();
        for (std::size_t w = level_begin; w < level_end; ++w) {
            for (std::int8_t l = 0; l < 4; ++l) {
                if (orb.pairs[w].first_letter >= 0 &&
                    (orb.pairs[w].first_letter ^ 1) == l)
                    continue;  // adjacent inverse pair
                P1Point ga =
                    moebius_apply(letter[l], P1Point::finite(orb.pairs[w].ga));
                P1Point ggia =
                    moebius_apply(letter[l], P1Point::finite(orb.pairs[w].ggia));
                if (ga.infinite || ggia.infinite)
                    throw Error("degenerate word: orbit point at infinity");
                orb.pairs.push_back({l, ga.value, ggia.value});
            }
        }
        level_begin = level_end;
        orb.level_end.push_back(orb.pairs.size());
    }
    return orb;
}

Rat u_log_abs_truncated(const UOrbit& orbit, const Puiseux& z, int max_len) {
    if (max_len < 0 ||
        static_cast<std::size_t>(max_len) >= orbit.level_end.size())
        throw Error("word length outside the computed orbit");
    Rat sum = 0;
    for (std::size_t w = 0; w < orbit.level_end[max_len]; ++w) {
        Puiseux dn = z - orbit.pairs[w].ga;
        Puiseux dd = z - orbit.pairs[w].ggia;
        if (dn.is_zero() || dd.is_zero())
            throw Error("degenerate z: coincides with an orbit point");
        sum += log_abs_finite(dn) - log_abs_finite(dd);
    }
    return sum;
}

Rat u_log_abs_truncated(const SchottkyRank2& s, int i, const Puiseux& z,
                        const Puiseux& basepoint, int max_len) {
    return u_log_abs_truncated(u_orbit(s, i, basepoint, max_len), z, max_len);
}

MoebiusMap hyperbolic_generator(const Puiseux& b, const Puiseux& c,
                                const Puiseux& k) {
    Puiseux one = Puiseux::one();
    return {c - k * b, (b * c * (one - k)).neg(), one - k, (b - k * c).neg()};
}

}  // namespace mumford2
