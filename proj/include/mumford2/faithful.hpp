#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mumford2/skeleton.hpp"

namespace mumford2 {

enum class MarkLabel { P1, P2, P3, P4, S1, S2, S3, T1, T2, T3 };
inline constexpr int kNumMarks = 10;

const char* to_string(MarkLabel l);
std::optional<MarkLabel> parse_mark_label(const std::string& s);

/// Optional bounded edge between a coincident pair of retraction points and
/// their common branch vertex.
struct JoinEdgeSpec {
    MarkLabel a, b;
    Rat eps;
};

struct MarkedSkeleton {
    MetricSkeleton skel;
    TropLattice lat;
    Rat A, B;  // free cycle lengths L_i - 2 ell
    std::array<SkeletonPoint, kNumMarks> mark;
    std::vector<std::pair<MarkLabel, MarkLabel>> coincidences;
    std::vector<JoinEdgeSpec> join_edges;

    const SkeletonPoint& pos(MarkLabel l) const {
        return mark[static_cast<int>(l)];
    }
};

/// |q11| < |q12|^2 and |q22| < |q12|^2, i.e. both cycles are more than twice
/// as long as the shared edge.
bool check_assumption(const PeriodMatrix& q);

MarkedSkeleton place_marked_points(const MetricSkeleton& skel,
                                   const TropLattice& lat);

struct DivisorEntry {
    SkeletonPoint at;
    int mult;
    std::string name;
};

struct Divisor {
    std::vector<DivisorEntry> entries;

    int degree() const;
};

/// Σ mult·μ(p) ≡ 0 mod the lattice.
bool divisor_is_tropically_principal(const MarkedSkeleton& msk,
                                     const Divisor& d);

/// Skeleton subdivided at a set of cut points. Edges are oriented along
/// increasing arc position of their chain; the two cycles are kept as oriented
/// edge lists for closure constraints.
struct SkelGraph {
    struct Vertex {
        SkeletonPoint key;  // canonical vertex key
        std::string label;  // "v0", "w0", mark names, positions
    };
    struct Edge {
        int tail, head;
        Rat length;
        SkeletonLocus chain;
        std::string label;  // "[v0>P1]" style
        bool skeleton = true;
    };

    MetricSkeleton skel;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    // (edge index, +1/-1) traversals of cycle 1 and cycle 2
    std::array<std::vector<std::pair<int, int>>, 2> cycles;
    int base_vertex = 0;

    int find_vertex(const SkeletonPoint& p) const;
    std::optional<int> find_edge(int tail, int head) const;
};

/// Canonical vertex key: junction points are folded onto a single
/// representative (v0 = cycle-1 arc 0, shared/bridge endpoints, ...).
SkeletonPoint vertex_key(const MetricSkeleton& skel, const SkeletonPoint& p);

SkelGraph build_graph(const MarkedSkeleton& msk,
                      const std::vector<SkeletonPoint>& extra_cuts);

struct SlopeSolution {
    std::vector<Rat> slope;  // per edge, along its orientation
    bool integral = false;
};

/// Solves for the slopes of log|f|: at every vertex the outgoing slopes sum to
/// the divisor multiplicity there, and the total increment around each cycle
/// vanishes. The system has a unique solution for a genus-2 graph.
SlopeSolution solve_slope_field(const SkelGraph& g, const Divisor& d);

/// div f = S1+S2+S3-P1-P2-P3, div g = T1+T2+T3-P1-P3-P4,
/// div h = T2+U+V-S3-P1-P3 with (U,V) the two-summand decomposition of
/// μ(S3)+μ(P1)+μ(P3)-μ(T2).
struct CoordinateFunctions {
    Divisor f, g, h;
    SkeletonPoint U, V;
};

CoordinateFunctions build_coordinate_functions(const MarkedSkeleton& msk);

struct TropicalCurve {
    struct Vertex {
        std::vector<Rat> pt;
        std::string label;
    };
    struct Segment {
        int a, b;
        std::vector<Int> slope;  // pt[b] - pt[a] = length * slope
        Rat length;
        std::string label;
        bool skeleton = true;
    };
    struct Ray {
        int base;
        std::vector<Int> dir;
        std::string label;
    };

    int dim = 2;
    std::vector<Vertex> vertices;
    std::vector<Segment> segments;
    std::vector<Ray> rays;
};

/// Embed the subdivided skeleton via the integrated slope fields (value 0 at
/// the base vertex) and attach a ray of direction -(multiplicity vector) at
/// every zero/pole of the coordinate functions.
TropicalCurve build_tropical_curve(const MarkedSkeleton& msk, const SkelGraph& g,
                                   const std::vector<SlopeSolution>& solutions,
                                   const std::vector<const Divisor*>& divisors);

struct Crossing {
    std::vector<Rat> point;
    std::string piece1, piece2;
};

struct FaithfulnessReport {
    bool skeleton_faithful = true;  // isometric and injective on the skeleton
    bool extended_faithful = true;  // whole curve embeds with primitive rays
    std::vector<std::string> expansion_failures;
    std::vector<Crossing> crossings;
};

FaithfulnessReport check_faithful(const TropicalCurve& tc);

/// Violations of vertex divergence (outgoing slopes sum to the divisor
/// multiplicity) and cycle closure for a solved slope field; empty when exact.
std::vector<std::string> check_harmonicity(const SkelGraph& g, const Divisor& d,
                                           const SlopeSolution& sol);

/// Violations of the balancing condition (outgoing slope vectors of segments
/// and rays sum to zero at every vertex).
std::vector<std::string> check_balancing(const TropicalCurve& tc);

struct TropOptions {
    Rat grid_step = Rat(1, 16);
    std::vector<JoinEdgeSpec> join_edges;
};

struct TropResult {
    SchottkyRank2 normalized;
    PeriodMatrix q;
    MetricSkeleton skel;
    MarkedSkeleton msk;
    CoordinateFunctions fns;
    SkelGraph graph;
    SlopeSolution sol_f, sol_g, sol_h;
    TropicalCurve curve2, curve3;
    FaithfulnessReport report2, report3;
    std::vector<std::string> warnings;
};

/// Full pipeline: verify -> normalize -> period matrix -> skeleton -> marked
/// points -> coordinate functions -> slope fields -> curves in dimension 2
/// and 3 -> faithfulness checks.
TropResult tropicalize(const SchottkyRank2& s, const TropOptions& opts = {});

}  // namespace mumford2
