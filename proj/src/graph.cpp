#include "matchfab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

namespace matchfab {

const char* to_string(HubRole r) {
    switch (r) {
        case HubRole::v1: return "v1";
        case HubRole::v2: return "v2";
        case HubRole::v3: return "v3";
        case HubRole::v4: return "v4";
    }
    return "?";
}

const char* to_string(FamilyTag t) {
    switch (t) {
        case FamilyTag::fractal: return "fractal";
        case FamilyTag::nonfractal: return "nonfractal";
        case FamilyTag::sierpinski: return "sierpinski";
        case FamilyTag::derived: return "derived";
    }
    return "?";
}

Graph::Graph(int n) {
    if (n < 0) throw Error("negative vertex count");
    adj_.resize(n);
    meta_.resize(n);
}

Graph Graph::from_edges(int n, const std::vector<EdgeId>& edges) {
    Graph g(n);
    for (const auto& e : edges) g.add_edge(e.u, e.v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw Error("vertex index out of range: " + std::to_string(v));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error("self-loop rejected at vertex " + std::to_string(u));
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        throw Error("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

std::span<const int> Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<EdgeId> Graph::edges() const {
    std::vector<EdgeId> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.push_back({u, v});
    return out;
}

const VertexMeta& Graph::meta(int v) const {
    check_vertex(v);
    return meta_[v];
}

void Graph::set_gen_iteration(int v, int it) {
    check_vertex(v);
    if (it < 1) throw Error("gen_iteration must be >= 1");
    meta_[v].gen_iteration = it;
}

void Graph::set_hub_role(int v, HubRole role) {
    check_vertex(v);
    for (int u = 0; u < vertex_count(); ++u)
        if (u != v && meta_[u].hub_role == role)
            throw Error(std::string("hub role ") + to_string(role) + " already assigned");
    meta_[v].hub_role = role;
}

std::optional<int> Graph::hub(HubRole role) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (meta_[v].hub_role == role) return v;
    return std::nullopt;
}

std::vector<int> Graph::degree_multiset() const {
    std::vector<int> d(vertex_count());
    for (int v = 0; v < vertex_count(); ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

Graph subdivision(const Graph& g) {
    const auto es = g.edges();
    Graph b(g.vertex_count() + static_cast<int>(es.size()));
    for (int v = 0; v < g.vertex_count(); ++v)
        b.set_gen_iteration(v, g.meta(v).gen_iteration);
    int w = g.vertex_count();
    for (const auto& e : es) {
        b.add_edge(e.u, w);
        b.add_edge(w, e.v);
        ++w;
    }
    if (g.family_tag()) b.set_family_tag(FamilyTag::derived);
    return b;
}

Graph line_graph(const Graph& g) {
    const auto es = g.edges();
    const int m = static_cast<int>(es.size());
    // Vertices of L(G) follow the canonical edge order of G; two of them are
    // adjacent exactly when the underlying edges share an endpoint.
    std::vector<std::vector<int>> incident(g.vertex_count());
    for (int i = 0; i < m; ++i) {
        incident[es[i].u].push_back(i);
        incident[es[i].v].push_back(i);
    }
    Graph lg(m);
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = incident[v];
        for (size_t a = 0; a < inc.size(); ++a)
            for (size_t b = a + 1; b < inc.size(); ++b)
                lg.add_edge(inc[a], inc[b]);
    }
    if (g.family_tag()) lg.set_family_tag(FamilyTag::derived);
    return lg;
}

Graph subdivided_line(const Graph& g) { return line_graph(subdivision(g)); }

InducedSubgraph remove_vertices(const Graph& g, const std::vector<int>& drop) {
    std::vector<char> dropped(g.vertex_count(), 0);
    for (int v : drop) {
        if (v < 0 || v >= g.vertex_count())
            throw Error("remove_vertices: index out of range: " + std::to_string(v));
        dropped[v] = 1;
    }
    InducedSubgraph out;
    out.old_to_new.assign(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (dropped[v]) continue;
        out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    Graph h(static_cast<int>(out.new_to_old.size()));
    for (int nv = 0; nv < h.vertex_count(); ++nv) {
        const int ov = out.new_to_old[nv];
        h.set_gen_iteration(nv, g.meta(ov).gen_iteration);
        if (g.meta(ov).hub_role) h.set_hub_role(nv, *g.meta(ov).hub_role);
    }
    for (const auto& e : g.edges())
        if (!dropped[e.u] && !dropped[e.v])
            h.add_edge(out.old_to_new[e.u], out.old_to_new[e.v]);
    if (g.family_tag()) h.set_family_tag(FamilyTag::derived);
    out.graph = std::move(h);
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> q;
    dist[src] = 0;
    q.push_back(src);
    while (!q.empty()) {
        const int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    const auto d = bfs_distances(g, 0);
    return std::find(d.begin(), d.end(), -1) == d.end();
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.vertex_count(), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            const int v = q.front();
            q.pop_front();
            for (int w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = color[v] ^ 1;
                    q.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

namespace {

int parse_int(std::string_view s, size_t& pos) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\n' || s[pos] == '\r' || s[pos] == '\t'))
        ++pos;
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
    if (ec != std::errc())
        throw Error("edge list parse error at offset " + std::to_string(pos));
    pos = static_cast<size_t>(ptr - s.data());
    return value;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    size_t pos = 0;
    const int n = parse_int(text, pos);
    const int m = parse_int(text, pos);
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        const int u = parse_int(text, pos);
        const int v = parse_int(text, pos);
        if (u >= v) throw Error("edge list not canonical: " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(u, v);
    }
    while (pos < text.size()) {
        if (text[pos] != ' ' && text[pos] != '\n' && text[pos] != '\r' && text[pos] != '\t')
            throw Error("trailing garbage in edge list");
        ++pos;
    }
    return g;
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph matchfab {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) os << "  " << v << ";\n";
    for (const auto& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

Graph parse_dot(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    if (!std::getline(is, line) || line != "graph matchfab {")
        throw Error("dot parse error: bad header");
    std::vector<EdgeId> edges;
    std::vector<int> isolated;
    int max_vertex = -1;
    bool closed = false;
    while (std::getline(is, line)) {
        if (line == "}") {
            closed = true;
            break;
        }
        int u = 0, v = 0;
        char dash1 = 0, dash2 = 0, semi = 0;
        std::istringstream ls(line);
        if ((ls >> u >> dash1 >> dash2 >> v >> semi) && dash1 == '-' && dash2 == '-' && semi == ';') {
            edges.push_back({u, v});
            max_vertex = std::max({max_vertex, u, v});
            continue;
        }
        std::istringstream ns(line);
        if ((ns >> u >> semi) && semi == ';') {
            isolated.push_back(u);
            max_vertex = std::max(max_vertex, u);
            continue;
        }
        throw Error("dot parse error: '" + line + "'");
    }
    if (!closed) throw Error("dot parse error: missing closing brace");
    return Graph::from_edges(max_vertex + 1, edges);
}

} // namespace matchfab
