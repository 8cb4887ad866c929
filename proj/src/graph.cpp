#include "lapdiam/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <sstream>

namespace lapdiam {

std::size_t VertexSet::size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        for (auto w = words_[i]; w != 0; w &= w - 1) {
            out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        }
    }
    return out;
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
    VertexSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
    return out;
}

bool VertexSet::intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & other.words_[i]) return true;
    }
    return false;
}

namespace {

void check_endpoint(std::size_t n, Vertex v) {
    if (v >= n) {
        throw GraphError("vertex index " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")");
    }
}

}  // namespace

GraphBuilder::GraphBuilder(std::size_t n) {
    if (n == 0) throw GraphError("graph must have at least one vertex");
    adj_.assign(n, VertexSet(n));
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
    check_endpoint(adj_.size(), u);
    check_endpoint(adj_.size(), v);
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
    return *this;
}

Graph GraphBuilder::build() const {
    Graph g;
    g.adj_ = adj_;
    g.degrees_.resize(adj_.size());
    std::size_t twice = 0;
    for (std::size_t i = 0; i < adj_.size(); ++i) {
        g.degrees_[i] = adj_[i].size();
        twice += g.degrees_[i];
    }
    g.edge_count_ = twice / 2;
    return g;
}

Graph::Graph(std::size_t n, std::span<const Edge> edge_list) {
    GraphBuilder b(n);
    for (const auto& [u, v] : edge_list) b.add_edge(u, v);
    *this = b.build();
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex i = 0; i < order(); ++i) {
        for (Vertex j : adj_[i].members()) {
            if (j > i) out.emplace_back(i, j);
        }
    }
    return out;
}

bool PathInGraph::contains(Vertex v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

Graph complement(const Graph& g) {
    const auto n = g.order();
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (!g.adjacent(i, j)) b.add_edge(i, j);
        }
    }
    return b.build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const auto offset = g.order();
    GraphBuilder b(offset + h.order());
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (auto [u, v] : h.edges()) b.add_edge(u + offset, v + offset);
    return b.build();
}

Graph join(const Graph& g1, const Graph& g2) {
    const auto offset = g1.order();
    GraphBuilder b(offset + g2.order());
    for (auto [u, v] : g1.edges()) b.add_edge(u, v);
    for (auto [u, v] : g2.edges()) b.add_edge(u + offset, v + offset);
    for (Vertex i = 0; i < offset; ++i) {
        for (Vertex j = 0; j < g2.order(); ++j) b.add_edge(i, j + offset);
    }
    return b.build();
}

Graph add_edge(const Graph& g, Edge e) {
    auto edges = g.edges();
    edges.push_back(e);
    return Graph(g.order(), edges);
}

Graph delete_edge(const Graph& g, Edge e) {
    const auto [u, v] = e;
    check_endpoint(g.order(), u);
    check_endpoint(g.order(), v);
    if (u == v || !g.adjacent(u, v)) {
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
    }
    GraphBuilder b(g.order());
    for (auto [a, c] : g.edges()) {
        if (!((a == u && c == v) || (a == v && c == u))) b.add_edge(a, c);
    }
    return b.build();
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
    std::vector<bool> gone(g.order(), false);
    for (auto v : removed) {
        check_endpoint(g.order(), v);
        gone[v] = true;
    }
    std::vector<Vertex> relabel(g.order(), kUnreachable);
    std::size_t kept = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!gone[v]) relabel[v] = kept++;
    }
    if (kept == 0) throw GraphError("cannot delete every vertex");
    GraphBuilder b(kept);
    for (auto [u, v] : g.edges()) {
        if (!gone[u] && !gone[v]) b.add_edge(relabel[u], relabel[v]);
    }
    return b.build();
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.order()) throw GraphError("permutation size mismatch");
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
    return b.build();
}

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence seq;
    seq.degrees.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) seq.degrees[v] = g.degree(v);
    std::sort(seq.degrees.begin(), seq.degrees.end(), std::greater<>());
    return seq;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
    check_endpoint(g.order(), source);
    std::vector<std::size_t> dist(g.order(), kUnreachable);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (auto w : g.neighbors(v).members()) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::size_t component_count(const Graph& g) {
    std::vector<bool> seen(g.order(), false);
    std::size_t components = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        ++components;
        std::vector<Vertex> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (auto w : g.neighbors(v).members()) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

bool is_complete(const Graph& g) {
    const auto n = g.order();
    return g.size() == n * (n - 1) / 2;
}

std::optional<std::size_t> diameter(const Graph& g) {
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        for (auto d : bfs_distances(g, v)) {
            if (d == kUnreachable) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

std::vector<PathInGraph> find_diametral_paths(const Graph& g, std::size_t cap) {
    if (cap == 0) throw GraphError("path cap must be at least 1");
    std::vector<PathInGraph> out;
    const auto d = diameter(g);
    if (!d || *d == 0) return out;

    // Every shortest path of length d from s climbs the BFS layers of s one at a time.
    for (Vertex s = 0; s < g.order() && out.size() < cap; ++s) {
        const auto layer = bfs_distances(g, s);
        std::vector<Vertex> current{s};
        std::function<void()> extend = [&] {
            if (out.size() >= cap) return;
            const auto v = current.back();
            if (current.size() == *d + 1) {
                if (v > s) out.push_back(PathInGraph{current});
                return;
            }
            for (auto w : g.neighbors(v).members()) {
                if (layer[w] == current.size()) {
                    current.push_back(w);
                    extend();
                    current.pop_back();
                }
            }
        };
        extend();
    }
    return out;
}

std::vector<Vertex> gamma(const Graph& g, const PathInGraph& path, Vertex z) {
    check_endpoint(g.order(), z);
    if (path.contains(z)) throw GraphError("vertex " + std::to_string(z) + " lies on the path");
    std::vector<Vertex> out;
    for (auto v : path.vertices) {
        if (g.adjacent(z, v)) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t) {
    const auto n = g.order();
    check_endpoint(n, s);
    check_endpoint(n, t);
    if (s == t || g.adjacent(s, t)) throw GraphError("local connectivity needs distinct non-adjacent vertices");

    // Split v into v_in = 2v and v_out = 2v+1 with unit capacity between them.
    const auto nodes = 2 * n;
    std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
    for (Vertex v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? static_cast<int>(n) : 1;
    for (auto [u, v] : g.edges()) {
        cap[2 * u + 1][2 * v] = static_cast<int>(n);
        cap[2 * v + 1][2 * u] = static_cast<int>(n);
    }
    const auto source = 2 * s + 1;
    const auto sink = 2 * t;
    std::size_t flow = 0;
    while (true) {
        std::vector<std::size_t> parent(nodes, kUnreachable);
        parent[source] = source;
        std::deque<std::size_t> queue{source};
        while (!queue.empty() && parent[sink] == kUnreachable) {
            const auto x = queue.front();
            queue.pop_front();
            for (std::size_t y = 0; y < nodes; ++y) {
                if (cap[x][y] > 0 && parent[y] == kUnreachable) {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if (parent[sink] == kUnreachable) break;
        for (auto y = sink; y != source; y = parent[y]) {
            --cap[parent[y]][y];
            ++cap[y][parent[y]];
        }
        ++flow;
    }
    return flow;
}

std::size_t vertex_connectivity(const Graph& g) {
    const auto n = g.order();
    if (is_complete(g)) return n - 1;
    if (!is_connected(g)) return 0;
    std::size_t best = n - 1;
    for (Vertex s = 0; s < n; ++s) {
        for (Vertex t = s + 1; t < n; ++t) {
            if (!g.adjacent(s, t)) best = std::min(best, local_vertex_connectivity(g, s, t));
        }
    }
    return best;
}

std::string to_string(const Graph& g) {
    std::ostringstream os;
    os << "Graph(n=" << g.order() << ", edges=[";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        os << (first ? "" : ",") << "(" << u << "," << v << ")";
        first = false;
    }
    os << "])";
    return os.str();
}

}  // namespace lapdiam
