#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mumford2/puiseux.hpp"

namespace mumford2 {

/// Point of P¹(K).
struct P1Point {
    bool infinite = false;
    Puiseux value;  // ignored when infinite

    static P1Point infinity() { return {true, {}}; }
    static P1Point finite(Puiseux v) { return {false, std::move(v)}; }
};

/// Projective 2x2 matrix over K acting by z ↦ (az+b)/(cz+d).
struct MoebiusMap {
    Puiseux a, b, c, d;

    Puiseux det() const { return a * d - b * c; }
    MoebiusMap inverse() const { return {d, b.neg(), c.neg(), a}; }  // adjugate
    MoebiusMap compose(const MoebiusMap& rhs) const;                 // this ∘ rhs
    static MoebiusMap identity();
};

P1Point moebius_apply(const MoebiusMap& m, const P1Point& z);
P1Point moebius_apply(const MoebiusMap& m, const Puiseux& z);

/// Closed disc {z : log|z − center| ≤ log_radius}; the open variant is a
/// bookkeeping flag at call sites, never a separate type.
struct Disc {
    Puiseux center;
    Rat log_radius;

    bool contains(const Puiseux& z, bool open_disc) const;
};

/// Equal center-distance ≤ radius and equal radii.
bool disc_eq(const Disc& a, const Disc& b);

Disc image_of_disc(const MoebiusMap& m, const Disc& disc);

/// Image of P¹ minus `disc` under m. With `removed_open` the open disc is
/// removed (pole required in its interior, image is closed); otherwise the
/// closed disc is removed (pole required in the closed disc, image is open).
Disc image_of_complement(const MoebiusMap& m, const Disc& disc, bool removed_open);

struct SchottkyRank2 {
    MoebiusMap gen1, gen2;
    Disc B1, C1, B2, C2;

    const MoebiusMap& gen(int i) const { return i == 1 ? gen1 : gen2; }
    const Disc& B(int i) const { return i == 1 ? B1 : B2; }
    const Disc& C(int i) const { return i == 1 ? C1 : C2; }
    std::array<const Disc*, 4> discs() const { return {&B1, &C1, &B2, &C2}; }
};

struct VerificationReport {
    bool discs_disjoint = false;
    bool zero_outside = false;
    std::array<bool, 2> maps_closed{};  // γ_i(P¹\B_i°) = C_i
    std::array<bool, 2> maps_open{};    // γ_i⁻¹(P¹\B_i) = C_i°
    std::vector<std::string> failures;

    bool ok() const {
        return discs_disjoint && zero_outside && maps_closed[0] &&
               maps_closed[1] && maps_open[0] && maps_open[1];
    }
};

VerificationReport verify_good_domain(const SchottkyRank2& s);

/// Good-fundamental-domain datum conjugated and relabeled so that
/// |b1|<|c1|<|c2| and |b1|<|b2|<|c2|, with additionally |b2|<|c1| when the
/// cycles share an edge. Same conjugacy class; passes verify_good_domain.
SchottkyRank2 normalize(const SchottkyRank2& s);

/// Conjugate generators and discs by g; the pole of g must lie outside all
/// four closed discs.
SchottkyRank2 conjugate(const SchottkyRank2& s, const MoebiusMap& g);

struct PeriodMatrix {
    Rat q11, q12, q22;  // entries log|q_ij|

    Rat logq(int i, int j) const { return i == j ? (i == 1 ? q11 : q22) : q12; }
};

/// Requires the normalized ordering |b_i| < |c_i|.
PeriodMatrix log_q(const SchottkyRank2& s);

/// log|u_i(z)| = log|z−b_i| − log|z−c_i| for z outside all four open discs.
Rat u_log_abs(const SchottkyRank2& s, int i, const Puiseux& z);

/// Word in the free group on γ1, γ2; letters index {γ1, γ1⁻¹, γ2, γ2⁻¹}.
struct GroupWord {
    std::vector<std::int8_t> letters;
    MoebiusMap map;
};

/// All reduced words of length ≤ max_len, count 1 + Σ 4·3^(m−1).
std::vector<GroupWord> reduced_words(const SchottkyRank2& s, int max_len);

/// Orbit points (γa, γγ_i a) for all reduced words γ of length ≤ max_len,
/// grouped by word length. Computing them is the expensive part of the
/// truncated u-product; build once per (group, i, basepoint) and reuse.
struct UOrbit {
    struct Pair {
        std::int8_t first_letter;  // -1 for the empty word
        Puiseux ga, ggia;
    };
    std::vector<Pair> pairs;
    std::vector<std::size_t> level_end;  // pairs[0..level_end[L]) = words of length <= L
};

UOrbit u_orbit(const SchottkyRank2& s, int i, const Puiseux& basepoint,
               int max_len);

/// Partial sum of log|∏ (z−γa)/(z−γγ_i a)| over reduced words of length ≤ L.
Rat u_log_abs_truncated(const UOrbit& orbit, const Puiseux& z, int max_len);
Rat u_log_abs_truncated(const SchottkyRank2& s, int i, const Puiseux& z,
                        const Puiseux& basepoint, int max_len);

/// Hyperbolic map with repelling fixed point b, attracting fixed point c and
/// multiplier k (|k| < 1), as a matrix without root extraction.
MoebiusMap hyperbolic_generator(const Puiseux& b, const Puiseux& c, const Puiseux& k);

}  // namespace mumford2
