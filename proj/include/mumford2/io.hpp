#pragma once

#include <string>

#include "mumford2/faithful.hpp"

namespace mumford2 {

struct InstanceOptions {
    std::optional<Rat> precision;
    Rat grid_step = Rat(1, 16);
    std::vector<JoinEdgeSpec> join_edges;
};

struct Instance {
    std::string version = "1";
    SchottkyRank2 group;
    InstanceOptions options;
};

Instance parse_instance(const std::string& json_text);
Instance load_instance(const std::string& path);

/// Canonical JSON echo; re-parses to an equal instance.
std::string serialize_instance(const Instance& inst);

struct Classified {
    SchottkyRank2 normalized;
    PeriodMatrix q;
    MetricSkeleton skel;
};

Classified classify(const SchottkyRank2& s);

std::string classify_report(const Instance& inst, const Classified& c);
std::string tropicalize_report(const Instance& inst, const TropResult& r,
                               int dim);
std::string render_svg(const TropicalCurve& tc, const FaithfulnessReport& rep);

struct VerifyOutcome {
    bool ok = true;
    std::string report;
};

/// Oracle suite: fundamental-domain checks, period/tree cross-checks,
/// u-function truncation agreement, μ isometry grid, two-summand uniqueness
/// grid, harmonicity and closure of the solved slope fields.
VerifyOutcome run_verify(const Instance& inst, int words, const Rat& grid_step);

}  // namespace mumford2
