#include "matchfab/generators.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace matchfab {

OrientedGraph::OrientedGraph(Graph base, const std::vector<DirectedEdge>& directed)
    : base_(std::move(base)) {
    for (const auto& de : directed) {
        if (!base_.has_edge(de.tail, de.head))
            throw Error("orientation refers to missing edge " + std::to_string(de.tail) +
                        "-" + std::to_string(de.head));
        const EdgeId e = make_edge(de.tail, de.head);
        const int s = (de.tail == e.u) ? +1 : -1;
        auto [it, inserted] = sign_.emplace(key(e.u, e.v), s);
        if (!inserted)
            throw Error("edge directed twice: " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    if (static_cast<int>(sign_.size()) != base_.edge_count())
        throw Error("orientation does not cover every edge");
}

int OrientedGraph::sign(int u, int v) const {
    const EdgeId e = make_edge(u, v);
    auto it = sign_.find(key(e.u, e.v));
    if (it == sign_.end()) return 0;
    return (u == e.u) ? it->second : -it->second;
}

std::vector<DirectedEdge> OrientedGraph::directed_edges() const {
    std::vector<DirectedEdge> out;
    out.reserve(base_.edge_count());
    for (const auto& e : base_.edges()) {
        if (sign(e.u, e.v) > 0)
            out.push_back({e.u, e.v});
        else
            out.push_back({e.v, e.u});
    }
    return out;
}

namespace {

void check_generation(int g, int max_generation) {
    if (g < 1) throw DomainError("generation must be >= 1");
    if (g > max_generation)
        throw CapExceededError("generation " + std::to_string(g) + " exceeds cap " +
                               std::to_string(max_generation));
}

// Both families are amalgams of four copies of the previous generation.
// Copy i's local hubs v1, v2 merge into global hubs; which global role they
// take is the only structural difference between the two identification
// schemes.  Global ids: hubs v1..v4 are 0..3, then the four copy interiors
// (previous ordering minus local v1, v2) as contiguous blocks.  This keeps
// the skew adjacency of H_g^e in the recursive block form the determinant
// identities are stated in.
struct HubWiring {
    // role_of_v1[i], role_of_v2[i]: global hub index (0..3) that copy i's
    // local v1 / v2 becomes, i = 0..3.
    std::array<int, 4> role_of_v1;
    std::array<int, 4> role_of_v2;
};

// F_g: v1 <- {1.v1, 4.v1}, v2 <- {2.v2, 3.v1}, v3 <- {1.v2, 2.v1}, v4 <- {3.v2, 4.v2}
constexpr HubWiring kFractalWiring{{0, 2, 1, 0}, {2, 1, 3, 3}};
// H_g: v1 <- {1.v1, 4.v1}, v2 <- {3.v2, 4.v2}, v3 <- {1.v2, 2.v1}, v4 <- {2.v2, 3.v1}
constexpr HubWiring kNonfractalWiring{{0, 2, 3, 0}, {2, 3, 1, 1}};

struct AmalgamStep {
    Graph graph;
    std::vector<DirectedEdge> directed; // empty unless orientation requested
};

AmalgamStep amalgamate(const AmalgamStep& prev, const HubWiring& wiring, bool oriented) {
    const Graph& p = prev.graph;
    const int np = p.vertex_count();
    const int interior = np - 2; // everything but local v1, v2
    AmalgamStep out;
    out.graph = Graph(4 + 4 * interior);

    auto map_vertex = [&](int copy, int local) {
        if (local == 0) return wiring.role_of_v1[copy];
        if (local == 1) return wiring.role_of_v2[copy];
        return 4 + copy * interior + (local - 2);
    };

    const auto prev_edges = p.edges();
    for (int copy = 0; copy < 4; ++copy)
        for (const auto& e : prev_edges)
            out.graph.add_edge(map_vertex(copy, e.u), map_vertex(copy, e.v));

    for (int r = 0; r < 4; ++r) {
        out.graph.set_hub_role(r, static_cast<HubRole>(r));
        out.graph.set_gen_iteration(r, 1);
    }
    for (int copy = 0; copy < 4; ++copy)
        for (int local = 2; local < np; ++local)
            out.graph.set_gen_iteration(map_vertex(copy, local),
                                        p.meta(local).gen_iteration + 1);

    if (oriented) {
        out.directed.reserve(4 * prev.directed.size());
        for (int copy = 0; copy < 4; ++copy)
            for (const auto& de : prev.directed)
                out.directed.push_back({map_vertex(copy, de.tail), map_vertex(copy, de.head)});
    }
    return out;
}

AmalgamStep fractal_base() {
    // Quadrangle with v1, v2 diagonal: v1-v3, v1-v4, v2-v3, v2-v4.
    AmalgamStep s;
    s.graph = Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    for (int r = 0; r < 4; ++r) {
        s.graph.set_hub_role(r, static_cast<HubRole>(r));
        s.graph.set_gen_iteration(r, 1);
    }
    return s;
}

AmalgamStep nonfractal_base(bool oriented) {
    // Quadrangle with v1, v4 diagonal: v1-v2, v1-v3, v2-v4, v3-v4.
    AmalgamStep s;
    s.graph = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    for (int r = 0; r < 4; ++r) {
        s.graph.set_hub_role(r, static_cast<HubRole>(r));
        s.graph.set_gen_iteration(r, 1);
    }
    if (oriented) s.directed = {{0, 1}, {0, 2}, {3, 1}, {2, 3}};
    return s;
}

AmalgamStep build_amalgam(int g, int max_generation, const HubWiring& wiring,
                          bool nonfractal, bool oriented) {
    check_generation(g, max_generation);
    AmalgamStep s = nonfractal ? nonfractal_base(oriented) : fractal_base();
    for (int i = 2; i <= g; ++i) s = amalgamate(s, wiring, oriented);
    s.graph.set_family_tag(nonfractal ? FamilyTag::nonfractal : FamilyTag::fractal);
    return s;
}

Graph edge_replacement(int g, int max_generation, bool keep_edge, FamilyTag tag) {
    check_generation(g, max_generation);
    Graph cur = keep_edge ? nonfractal_base(false).graph : fractal_base().graph;
    for (int it = 2; it <= g; ++it) {
        const auto old_edges = cur.edges();
        const int old_n = cur.vertex_count();
        Graph next(old_n + 2 * static_cast<int>(old_edges.size()));
        for (int v = 0; v < old_n; ++v) {
            next.set_gen_iteration(v, cur.meta(v).gen_iteration);
            if (cur.meta(v).hub_role) next.set_hub_role(v, *cur.meta(v).hub_role);
        }
        int w = old_n;
        for (const auto& e : old_edges) {
            const int w1 = w++, w2 = w++;
            next.set_gen_iteration(w1, it);
            next.set_gen_iteration(w2, it);
            if (keep_edge) {
                // quadrangle u-v-w1-w2 with the original edge kept
                next.add_edge(e.u, e.v);
                next.add_edge(e.v, w1);
                next.add_edge(w1, w2);
                next.add_edge(w2, e.u);
            } else {
                // quadrangle u-w1-v-w2 with u, v diagonal; original edge dropped
                next.add_edge(e.u, w1);
                next.add_edge(w1, e.v);
                next.add_edge(e.v, w2);
                next.add_edge(w2, e.u);
            }
        }
        cur = std::move(next);
    }
    cur.set_family_tag(tag);
    return cur;
}

} // namespace

Graph gen_fractal(int g, int max_generation) {
    return build_amalgam(g, max_generation, kFractalWiring, false, false).graph;
}

Graph gen_fractal_edge_replacement(int g, int max_generation) {
    return edge_replacement(g, max_generation, false, FamilyTag::fractal);
}

Graph gen_nonfractal(int g, int max_generation) {
    return build_amalgam(g, max_generation, kNonfractalWiring, true, false).graph;
}

Graph gen_nonfractal_edge_replacement(int g, int max_generation) {
    return edge_replacement(g, max_generation, true, FamilyTag::nonfractal);
}

OrientedGraph gen_nonfractal_oriented(int g, int max_generation) {
    AmalgamStep s = build_amalgam(g, max_generation, kNonfractalWiring, true, true);
    return OrientedGraph(std::move(s.graph), s.directed);
}

Graph gen_sierpinski_ext(int g, int max_generation) {
    check_generation(g, max_generation);
    Graph cur = make_k4();
    for (int i = 2; i <= g; ++i) cur = subdivided_line(cur);
    cur.set_family_tag(FamilyTag::sierpinski);
    return cur;
}

Graph make_k4() {
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Graph make_cycle(int n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(0, n - 1);
    return g;
}

} // namespace matchfab
