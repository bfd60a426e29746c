#include "matchfab/stats.hpp"

#include <cstdio>

namespace matchfab {

DegreeCorrelationReport degree_stats(const Graph& g) {
    if (g.vertex_count() == 0) throw DomainError("degree_stats on empty graph");
    DegreeCorrelationReport rep;
    const int n = g.vertex_count();

    for (int v = 0; v < n; ++v) ++rep.histogram[g.degree(v)];

    long long tail = 0;
    for (auto it = rep.histogram.rbegin(); it != rep.histogram.rend(); ++it) {
        tail += it->second;
        rep.cumulative[it->first] = make_rational(big_of(tail), BigInt(n));
    }

    std::map<int, BigInt> neighbor_degree_sum, class_degree_sum;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        class_degree_sum[d] += d;
        BigInt s = 0;
        for (int w : g.neighbors(v)) s += g.degree(w);
        neighbor_degree_sum[d] += s;
    }
    for (const auto& [d, total] : class_degree_sum)
        if (d > 0) rep.knn[d] = make_rational(neighbor_degree_sum[d], total);

    // Pearson degree correlation over edges, with the half-sums cleared:
    // r = (4 E S_jk - T1^2) / (2 E T2 - T1^2),
    // T1 = sum (j+k), T2 = sum (j^2+k^2), S_jk = sum j*k.
    BigInt s_jk = 0, t1 = 0, t2 = 0;
    for (const auto& e : g.edges()) {
        const BigInt j = g.degree(e.u), k = g.degree(e.v);
        s_jk += j * k;
        t1 += j + k;
        t2 += j * j + k * k;
    }
    const BigInt m = g.edge_count();
    const BigInt num = 4 * m * s_jk - t1 * t1;
    const BigInt den = 2 * m * t2 - t1 * t1;
    if (sgn(den) != 0) rep.pearson = make_rational(num, den);
    return rep;
}

DistanceStats distance_stats(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw DomainError("distance_stats on empty graph");
    std::map<int, long long> hist; // distance -> unordered pair count
    BigInt total = 0;
    int diameter = 0;
    for (int src = 0; src < n; ++src) {
        const auto dist = bfs_distances(g, src);
        for (int dst = src + 1; dst < n; ++dst) {
            if (dist[dst] < 0) throw DisconnectedError("distance_stats: graph is disconnected");
            total += dist[dst];
            ++hist[dist[dst]];
            diameter = std::max(diameter, dist[dst]);
        }
    }
    DistanceStats out;
    out.average = (n > 1) ? make_rational(total, BigInt(BigInt(n) * (n - 1) / 2)) : Rational(0);
    out.diameter = diameter;

    std::uint64_t h = 1469598103934665603ull; // FNV-1a over "d:c;" entries
    auto mix = [&h](long long x) {
        for (int i = 0; i < 8; ++i) {
            h ^= static_cast<std::uint64_t>(x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    for (const auto& [d, c] : hist) {
        mix(d);
        mix(c);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    out.multiset_digest = buf;
    return out;
}

} // namespace matchfab
