#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "matchfab/graph.hpp"

namespace matchfab {

// Hard ceiling on generation index; N_g = (2/3)(4^g + 2) grows as 4^g.
inline constexpr int kDefaultMaxGeneration = 10;

struct DirectedEdge {
    int tail = 0;
    int head = 0;
};

// A graph plus one direction per edge.  sign(u, v) realizes the skew
// adjacency convention: +1 when u -> v is the stored direction, -1 when
// v -> u, 0 when u-v is not an edge.
class OrientedGraph {
public:
    OrientedGraph() = default;
    OrientedGraph(Graph base, const std::vector<DirectedEdge>& directed);

    const Graph& base() const { return base_; }

    int sign(int u, int v) const;

    // One entry per edge of base(), in canonical EdgeId order.
    std::vector<DirectedEdge> directed_edges() const;

private:
    static std::uint64_t key(int u, int v) {
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    }

    Graph base_;
    std::unordered_map<std::uint64_t, int> sign_; // canonical (u<v) -> +1/-1
};

// F_g: fractal scale-free network, built by amalgamating four copies of
// F_{g-1} at their hubs.  N = (2/3)(4^g + 2), E = 4^g.
Graph gen_fractal(int g, int max_generation = kDefaultMaxGeneration);

// F_g by iterated edge replacement: each edge u-v becomes a quadrangle with
// u and v diagonal (the original edge is removed).
Graph gen_fractal_edge_replacement(int g, int max_generation = kDefaultMaxGeneration);

// H_g: non-fractal counterpart with the same degree sequence, amalgamation
// construction.
Graph gen_nonfractal(int g, int max_generation = kDefaultMaxGeneration);

// H_g by iterated edge replacement: each edge u-v is kept and completed to a
// quadrangle u-v-w1-w2 by two fresh vertices.
Graph gen_nonfractal_edge_replacement(int g, int max_generation = kDefaultMaxGeneration);

// H_g^e: the recursive orientation (v1->v2, v1->v3, v4->v2, v3->v4 at g = 1,
// copies carried verbatim).
OrientedGraph gen_nonfractal_oriented(int g, int max_generation = kDefaultMaxGeneration);

// S++_g = Gamma^{g-1}(K4): extended Sierpinski graph, 3-regular,
// N = 4*3^{g-1}, E = 2*3^g.
Graph gen_sierpinski_ext(int g, int max_generation = kDefaultMaxGeneration);

Graph make_k4();
Graph make_cycle(int n);

} // namespace matchfab
