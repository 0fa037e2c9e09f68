#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace distideal {

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown by metric operations on graphs that are not connected.
class DisconnectedGraph : public GraphError {
public:
    DisconnectedGraph() : GraphError("graph is not connected; distances are undefined") {}
};

using Vertex = int;
using VertexSet = std::vector<Vertex>;

// Simple undirected graph on vertices 0..n-1, stored as adjacency bitmasks.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
    Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    int order() const { return n_; }
    int size() const;

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
    std::uint64_t neighbours(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const;

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

bool is_connected(const Graph& g);

/// BFS distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// All-pairs shortest-path lengths. Throws DisconnectedGraph.
std::vector<std::vector<int>> distances(const Graph& g);

int diameter(const Graph& g);

/// Induced subgraph on `subset`, relabelled 0..k-1 in ascending vertex order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset);
Graph induced_subgraph(const Graph& g, std::uint64_t mask);

/// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

std::optional<VertexSet> contains_induced(const Graph& host, const Graph& pattern);

/// Exhaustive subset-and-permutation search. Exponential; used as a test oracle.
std::optional<VertexSet> contains_induced_bruteforce(const Graph& host, const Graph& pattern);

/// Induced cycle of odd length >= 7 (an odd hole), by subset enumeration.
std::optional<VertexSet> find_odd_hole(const Graph& g);

bool is_induced_cycle(const Graph& g, std::uint64_t mask);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);

// graph6 short form (n <= 62).
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// "n m" header followed by m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Reads graphs from text that is either graph6 (one per line) or a single edge list.
std::vector<Graph> parse_graph_file(std::string_view text);

}  // namespace distideal
