#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lapdiam {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed graph arguments (bad endpoints, loops, missing edges).
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Fixed-width bit set sized at construction. Used for adjacency rows.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe() const { return universe_; }
    bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    std::size_t size() const;
    bool empty() const;
    std::vector<Vertex> members() const;
    VertexSet operator&(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;
    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    /// Builds a graph from an edge list; duplicate pairs collapse.
    /// Throws GraphError on loops or out-of-range endpoints.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    static Graph empty(std::size_t n) { return Graph(n, std::span<const Edge>{}); }

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return degrees_[v]; }

    /// Edges (i, j) with i < j in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph() = default;
    std::vector<VertexSet> adj_;
    std::vector<std::size_t> degrees_;
    std::size_t edge_count_ = 0;

    friend class GraphBuilder;
};

/// Mutable staging area for bulk construction without an edge list.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n);
    GraphBuilder& add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    Graph build() const;

private:
    std::vector<VertexSet> adj_;
};

/// Ordered vertex sequence with consecutive vertices adjacent.
struct PathInGraph {
    std::vector<Vertex> vertices;

    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    bool contains(Vertex v) const;
    friend auto operator<=>(const PathInGraph&, const PathInGraph&) = default;
};

/// Degrees sorted non-increasing: degrees[0] is δ_1, degrees[n-1] is δ_n.
struct DegreeSequence {
    std::vector<std::size_t> degrees;

    /// 1-based access matching δ_i.
    std::size_t operator()(std::size_t i) const { return degrees.at(i - 1); }
    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);
inline constexpr std::size_t kDefaultPathCap = 10'000;

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g1, const Graph& g2);

Graph add_edge(const Graph& g, Edge e);
Graph delete_edge(const Graph& g, Edge e);
/// Removes the given vertices and relabels the survivors in increasing order.
Graph delete_vertices(const Graph& g, std::span<const Vertex> removed);
/// Relabels vertex v as perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

DegreeSequence degree_sequence(const Graph& g);
std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

/// Hop distances from v; kUnreachable for vertices in other components.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex v);

/// Diameter, or std::nullopt when the graph is disconnected (infinite diameter).
std::optional<std::size_t> diameter(const Graph& g);

/// Shortest paths of length diameter(g), each listed once with first < last,
/// in lexicographic order of vertex sequences, truncated at `cap`.
/// Returns an empty list for disconnected graphs and for K_1.
std::vector<PathInGraph> find_diametral_paths(const Graph& g, std::size_t cap = kDefaultPathCap);

/// Γ_{G,P}(z) = N(z) ∩ V(P), sorted ascending. Throws if z lies on P.
std::vector<Vertex> gamma(const Graph& g, const PathInGraph& path, Vertex z);

/// Maximum number of internally vertex-disjoint s-t paths, for non-adjacent s, t.
std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t);

/// κ(G); n-1 for complete graphs, 0 for disconnected graphs.
std::size_t vertex_connectivity(const Graph& g);

std::string to_string(const Graph& g);

}  // namespace lapdiam
