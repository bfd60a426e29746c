#include "matchfab/matching.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace matchfab {

namespace {

// Edmonds' blossom algorithm, array-based formulation: repeatedly grow an
// alternating BFS forest from each free vertex, contracting odd cycles
// (blossoms) via the base[] map until an augmenting path appears.
class BlossomSolver {
public:
    explicit BlossomSolver(const Graph& g)
        : g_(g), n_(g.vertex_count()), match_(n_, -1), parent_(n_, -1), base_(n_, 0) {}

    std::vector<int> solve() {
        greedy_init();
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0) find_augmenting_path(v);
        return match_;
    }

private:
    void greedy_init() {
        for (int v = 0; v < n_; ++v) {
            if (match_[v] >= 0) continue;
            for (int w : g_.neighbors(v)) {
                if (match_[w] < 0) {
                    match_[v] = w;
                    match_[w] = v;
                    break;
                }
            }
        }
    }

    int lowest_common_base(int a, int b) {
        std::vector<char> seen(n_, 0);
        for (int v = a;;) {
            v = base_[v];
            seen[v] = 1;
            if (match_[v] < 0) break;
            v = parent_[match_[v]];
        }
        for (int v = b;;) {
            v = base_[v];
            if (seen[v]) return v;
            v = parent_[match_[v]];
        }
    }

    void mark_blossom_path(int v, int b, int child, std::vector<char>& in_blossom) {
        while (base_[v] != b) {
            in_blossom[base_[v]] = 1;
            in_blossom[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    void contract_blossom(int a, int b, std::deque<int>& queue, std::vector<char>& used) {
        const int base = lowest_common_base(a, b);
        std::vector<char> in_blossom(n_, 0);
        mark_blossom_path(a, base, b, in_blossom);
        mark_blossom_path(b, base, a, in_blossom);
        for (int v = 0; v < n_; ++v) {
            if (in_blossom[base_[v]]) {
                base_[v] = base;
                if (!used[v]) {
                    used[v] = 1;
                    queue.push_back(v);
                }
            }
        }
    }

    void find_augmenting_path(int root) {
        std::vector<char> used(n_, 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);

        used[root] = 1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : g_.neighbors(v)) {
                if (base_[v] == base_[w] || match_[v] == w) continue;
                if (w == root || (match_[w] >= 0 && parent_[match_[w]] >= 0)) {
                    contract_blossom(v, w, queue, used);
                } else if (parent_[w] < 0) {
                    parent_[w] = v;
                    if (match_[w] < 0) {
                        augment_along(w);
                        return;
                    }
                    used[match_[w]] = 1;
                    queue.push_back(match_[w]);
                }
            }
        }
    }

    void augment_along(int v) {
        while (v >= 0) {
            const int pv = parent_[v];
            const int next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
};

// Exhaustive maximum-matching counter.  Vertices are decided in ascending
// order: the lowest undecided vertex is either left unmatched for good or
// matched to one of its still-undecided neighbors.  Every matching
// corresponds to exactly one leaf, so counting leaves of the target size
// counts maximum matchings.
struct EnumState {
    const Graph& g;
    std::vector<char> decided; // matched or permanently unmatched
    int target_size;
    int allowed_unmatched; // any target-size matching leaves exactly this many
    int undecided;
    BigInt count = 0;

    EnumState(const Graph& graph, int target)
        : g(graph), decided(graph.vertex_count(), 0), target_size(target),
          allowed_unmatched(graph.vertex_count() - 2 * target),
          undecided(graph.vertex_count()) {}

    void run(int from, int size, int unmatched) {
        if (size + undecided / 2 < target_size) return;
        const int n = g.vertex_count();
        int v = from;
        while (v < n && decided[v]) ++v;
        if (v == n) {
            if (size == target_size) ++count;
            return;
        }
        if (unmatched < allowed_unmatched) {
            decided[v] = 1;
            --undecided;
            run(v + 1, size, unmatched + 1);
            decided[v] = 0;
            ++undecided;
        }
        decided[v] = 1;
        --undecided;
        for (int w : g.neighbors(v)) {
            if (decided[w]) continue; // everything below v is decided
            decided[w] = 1;
            --undecided;
            run(v + 1, size + 1, unmatched);
            decided[w] = 0;
            ++undecided;
        }
        decided[v] = 0;
        ++undecided;
    }
};

} // namespace

Matching maximum_matching(const Graph& g) {
    const auto match = BlossomSolver(g).solve();
    Matching m;
    m.covered.assign(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (match[v] >= 0) {
            m.covered[v] = 1;
            if (v < match[v]) m.edges.push_back({v, match[v]});
        }
    }
    m.perfect = (2 * m.size() == g.vertex_count());
    return m;
}

int matching_number(const Graph& g) { return maximum_matching(g).size(); }

bool has_perfect_matching(const Graph& g) {
    if (g.vertex_count() % 2 != 0) return false;
    return maximum_matching(g).perfect;
}

BigInt count_maximum_matchings_bruteforce(const Graph& g, int max_edges) {
    if (g.edge_count() > max_edges)
        throw CapExceededError("enumeration cap: " + std::to_string(g.edge_count()) +
                               " edges > " + std::to_string(max_edges));
    const int target = matching_number(g);
    EnumState st(g, target);
    st.run(0, 0, 0);
    return st.count;
}

PerfectMatchingCount count_perfect_matchings_bruteforce(const Graph& g, int max_edges) {
    if (g.edge_count() > max_edges)
        throw CapExceededError("enumeration cap: " + std::to_string(g.edge_count()) +
                               " edges > " + std::to_string(max_edges));
    PerfectMatchingCount out;
    if (g.vertex_count() % 2 != 0) {
        out.count = 0;
        out.odd_vertex_count = true;
        return out;
    }
    std::vector<char> covered(g.vertex_count(), 0);
    BigInt count = 0;
    // Match the lowest uncovered vertex to each uncovered neighbor in turn.
    auto rec = [&](auto&& self, int from) -> void {
        int v = from;
        while (v < g.vertex_count() && covered[v]) ++v;
        if (v == g.vertex_count()) {
            ++count;
            return;
        }
        covered[v] = 1;
        for (int w : g.neighbors(v)) {
            if (covered[w]) continue;
            covered[w] = 1;
            self(self, v + 1);
            covered[w] = 0;
        }
        covered[v] = 0;
    };
    rec(rec, 0);
    out.count = count;
    return out;
}

void check_matching(const Graph& g, const Matching& m) {
    std::vector<char> seen(g.vertex_count(), 0);
    for (const auto& e : m.edges) {
        if (!g.has_edge(e.u, e.v))
            throw Error("matching edge not in graph");
        if (seen[e.u] || seen[e.v])
            throw Error("matching edges share a vertex");
        seen[e.u] = seen[e.v] = 1;
    }
}

} // namespace matchfab
