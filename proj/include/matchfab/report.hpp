#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "matchfab/analytic.hpp"
#include "matchfab/generators.hpp"
#include "matchfab/matching.hpp"
#include "matchfab/pfaffian.hpp"

namespace matchfab {

using Json = nlohmann::ordered_json;

struct Caps {
    int enum_edges = kDefaultEnumEdgeCap;
    int det_order = kDefaultDetOrderCap;
    long long cycle_count = kDefaultCycleCap;
    int max_generation = kDefaultMaxGeneration;
    // Empirical all-pairs BFS / blossom are skipped above this vertex count;
    // resource policy like the other caps, not correctness.
    int empirical_vertices = 4096;
};

enum class CheckStatus { pass, fail, skipped };
const char* to_string(CheckStatus s);

struct VerifyResult {
    std::map<std::string, CheckStatus> verdicts;
    Json detail; // per-check values, keyed like verdicts

    bool any_failed() const;
    bool any_skipped() const;
};

// Every applicable analytic-vs-empirical cross-check for one (family, g).
VerifyResult run_verify(Family family, int g, const Caps& caps);

Json verify_to_json(Family family, int g, const VerifyResult& r);

// One AnalyticReport row: closed-form values plus empirical columns where
// caps allow, with agreement verdicts for whatever was cross-checked.
Json report_row(Family family, int g, const Caps& caps);

// Fixed-width table over a generation range.
std::string report_table(Family family, int g_min, int g_max, const Caps& caps);

Json matching_to_json(const Matching& m);
Json graph_to_json(const Graph& g);

// Orientation sidecar: one "u v" line per directed edge, canonical order.
std::string orientation_sidecar(const OrientedGraph& og);

} // namespace matchfab
