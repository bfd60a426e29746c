#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matchfab/errors.hpp"

namespace matchfab {

enum class HubRole { v1 = 0, v2 = 1, v3 = 2, v4 = 3 };
enum class FamilyTag { fractal, nonfractal, sierpinski, derived };

const char* to_string(HubRole r);
const char* to_string(FamilyTag t);

struct VertexMeta {
    int gen_iteration = 1;
    std::optional<HubRole> hub_role;
};

// Canonical undirected edge, u < v.
struct EdgeId {
    int u = 0;
    int v = 0;
    auto operator<=>(const EdgeId&) const = default;
};

inline EdgeId make_edge(int a, int b) {
    return a < b ? EdgeId{a, b} : EdgeId{b, a};
}

// Undirected simple graph with dense 0-based vertex ids, sorted neighbor
// lists, and per-vertex generation metadata.  Immutable once built; all
// operations below are pure functions.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<EdgeId>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    // Throws on out-of-range, self-loop or duplicate edge.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::span<const int> neighbors(int v) const;

    // Canonical order: u ascending, then v ascending.
    std::vector<EdgeId> edges() const;

    const VertexMeta& meta(int v) const;
    void set_gen_iteration(int v, int it);
    void set_hub_role(int v, HubRole role);
    std::optional<int> hub(HubRole role) const; // vertex carrying the role

    std::optional<FamilyTag> family_tag() const { return family_; }
    void set_family_tag(FamilyTag t) { family_ = t; }

    // Sorted (ascending) multiset of degrees.
    std::vector<int> degree_multiset() const;

    bool operator==(const Graph& other) const {
        return adj_ == other.adj_;
    }

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    std::vector<VertexMeta> meta_;
    std::optional<FamilyTag> family_;
    int edge_count_ = 0;
};

// --- graph operators ------------------------------------------------------

// B(G): every edge u-v is replaced by a 2-path u-w-v through a fresh vertex.
// Original vertices keep their ids; vertex n + k subdivides the k-th
// canonical edge.
Graph subdivision(const Graph& g);

// L(G): one vertex per edge of G (in canonical EdgeId order), adjacent when
// the corresponding edges share an endpoint.
Graph line_graph(const Graph& g);

// Gamma(G) = L(B(G)).
Graph subdivided_line(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new; // -1 for removed vertices
    std::vector<int> new_to_old;
};

// Induced subgraph on the complement of `drop` (duplicates allowed in
// `drop`); kept vertices are renumbered densely preserving order.
InducedSubgraph remove_vertices(const Graph& g, const std::vector<int>& drop);

// --- traversal helpers ----------------------------------------------------

// BFS distances from src; -1 where unreachable.
std::vector<int> bfs_distances(const Graph& g, int src);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// --- serialization --------------------------------------------------------

// "n m\n" header followed by m lines "u v" in canonical order.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

// Deterministic DOT: isolated vertices as node statements, then one
// "u -- v;" line per canonical edge.
std::string to_dot(const Graph& g);
Graph parse_dot(std::string_view text); // accepts exactly the emitted subset

} // namespace matchfab
