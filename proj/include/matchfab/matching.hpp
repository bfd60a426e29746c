#pragma once

#include <vector>

#include "matchfab/exact.hpp"
#include "matchfab/graph.hpp"

namespace matchfab {

// Exhaustive enumeration refuses graphs with more edges than this unless a
// caller raises the cap.
inline constexpr int kDefaultEnumEdgeCap = 70;

struct Matching {
    std::vector<EdgeId> edges;  // canonical order, pairwise vertex-disjoint
    std::vector<char> covered;  // per-vertex coverage flags

    int size() const { return static_cast<int>(edges.size()); }
    bool perfect = false;       // covers every vertex of the host graph
};

// Exact maximum-cardinality matching on a general graph
// (augmenting paths with blossom contraction).
Matching maximum_matching(const Graph& g);

int matching_number(const Graph& g);

bool has_perfect_matching(const Graph& g);

// Exact count of maximum matchings by exhaustive branch-and-bound over the
// lowest-indexed undecided vertex.  Independent of the blossom solver except
// for the target size.
BigInt count_maximum_matchings_bruteforce(const Graph& g, int max_edges = kDefaultEnumEdgeCap);

struct PerfectMatchingCount {
    BigInt count;
    bool odd_vertex_count = false; // count forced to 0; flagged, not an error
};

// Exact count of perfect matchings by pick-lowest-uncovered-vertex branching.
PerfectMatchingCount count_perfect_matchings_bruteforce(const Graph& g,
                                                        int max_edges = kDefaultEnumEdgeCap);

// Validates disjointness and membership; throws on violation.
void check_matching(const Graph& g, const Matching& m);

} // namespace matchfab
