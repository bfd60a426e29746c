#pragma once

#include <map>
#include <optional>
#include <string>

#include "matchfab/exact.hpp"
#include "matchfab/graph.hpp"

namespace matchfab {

struct DegreeCorrelationReport {
    std::map<int, long long> histogram;   // degree -> vertex count
    std::map<int, Rational> cumulative;   // P_cum(d) = sum_{d' >= d} P(d')
    std::map<int, Rational> knn;          // average neighbor degree per class
    std::optional<Rational> pearson;      // nullopt on regular graphs (0/0)
};

// Exact-rational degree statistics.  knn is edge-endpoint weighted: for the
// class of degree-d vertices it is (total degree of all their neighbors) /
// (total degree of the class), the definition under which the closed forms
// hold exactly.
DegreeCorrelationReport degree_stats(const Graph& g);

struct DistanceStats {
    Rational average;           // over unordered vertex pairs
    int diameter = 0;
    std::string multiset_digest; // order-independent digest of the distance multiset
};

// All-pairs BFS; throws DisconnectedError on disconnected input.
DistanceStats distance_stats(const Graph& g);

} // namespace matchfab
