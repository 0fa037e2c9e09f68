#include "distideal/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>

namespace distideal {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices) {
        throw GraphError("vertex count out of range: " + std::to_string(n));
    }
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw GraphError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
    }
}

int Graph::size() const {
    int twice = 0;
    for (auto a : adj_) twice += std::popcount(a);
    return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
}

int Graph::degree(Vertex v) const { return std::popcount(adj_[v]); }

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = u + 1; v < n_; ++v) {
            if (adjacent(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// metric

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (std::uint64_t nb = g.neighbours(u); nb != 0; nb &= nb - 1) {
            Vertex w = std::countr_zero(nb);
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    auto dist = bfs_distances(g, 0);
    return std::ranges::none_of(dist, [](int d) { return d < 0; });
}

std::vector<std::vector<int>> distances(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedGraph();
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) out.push_back(bfs_distances(g, v));
    return out;
}

int diameter(const Graph& g) {
    int best = 0;
    for (const auto& row : distances(g)) best = std::max(best, *std::ranges::max_element(row));
    return best;
}

// ---------------------------------------------------------------------------
// subgraphs

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
    VertexSet sorted(subset.begin(), subset.end());
    std::ranges::sort(sorted);
    if (std::ranges::adjacent_find(sorted) != sorted.end()) {
        throw GraphError("induced_subgraph: repeated vertex");
    }
    for (Vertex v : sorted) {
        if (v < 0 || v >= g.order()) throw GraphError("induced_subgraph: vertex out of range");
    }
    Graph h(static_cast<int>(sorted.size()));
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (g.adjacent(sorted[i], sorted[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return h;
}

Graph induced_subgraph(const Graph& g, std::uint64_t mask) {
    VertexSet s;
    for (; mask != 0; mask &= mask - 1) s.push_back(std::countr_zero(mask));
    return induced_subgraph(g, s);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw GraphError("relabel: permutation size mismatch");
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

namespace {

// Pattern vertices ordered so each one (after the first) has as many
// already-placed neighbours as possible.
std::vector<Vertex> search_order(const Graph& p) {
    int k = p.order();
    std::vector<Vertex> order;
    std::vector<bool> placed(static_cast<std::size_t>(k), false);
    for (int step = 0; step < k; ++step) {
        Vertex best = -1;
        int best_links = -1, best_deg = -1;
        for (Vertex v = 0; v < k; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (Vertex u : order) links += p.adjacent(u, v) ? 1 : 0;
            if (links > best_links || (links == best_links && p.degree(v) > best_deg)) {
                best = v;
                best_links = links;
                best_deg = p.degree(v);
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    return order;
}

struct InducedMatcher {
    const Graph& host;
    const Graph& pattern;
    std::vector<Vertex> order;
    std::vector<Vertex> image;  // image[pattern vertex] = host vertex
    std::uint64_t used = 0;

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        Vertex p = order[depth];
        for (Vertex h = 0; h < host.order(); ++h) {
            if ((used >> h) & 1U) continue;
            if (host.degree(h) < pattern.degree(p)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < depth && ok; ++j) {
                Vertex q = order[j];
                ok = pattern.adjacent(p, q) == host.adjacent(h, image[q]);
            }
            if (!ok) continue;
            image[p] = h;
            used |= std::uint64_t{1} << h;
            if (extend(depth + 1)) return true;
            used &= ~(std::uint64_t{1} << h);
        }
        return false;
    }
};

bool next_subset(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

bool isomorphic_bruteforce(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> perm(static_cast<std::size_t>(a.order()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (relabel(a, perm) == b) return true;
    } while (std::ranges::next_permutation(perm).found);
    return false;
}

}  // namespace

std::optional<VertexSet> contains_induced(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order()) return std::nullopt;
    if (pattern.order() == 0) return VertexSet{};
    InducedMatcher m{host, pattern, search_order(pattern),
                     std::vector<Vertex>(static_cast<std::size_t>(pattern.order()), -1)};
    if (!m.extend(0)) return std::nullopt;
    VertexSet witness = m.image;
    std::ranges::sort(witness);
    return witness;
}

std::optional<VertexSet> contains_induced_bruteforce(const Graph& host, const Graph& pattern) {
    int k = pattern.order();
    if (k > host.order()) return std::nullopt;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    do {
        if (isomorphic_bruteforce(induced_subgraph(host, idx), pattern)) return idx;
    } while (next_subset(idx, host.order()));
    return std::nullopt;
}

bool is_induced_cycle(const Graph& g, std::uint64_t mask) {
    if (std::popcount(mask) < 3) return false;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
        if (std::popcount(g.neighbours(std::countr_zero(m)) & mask) != 2) return false;
    }
    // 2-regular: connected iff a walk from one vertex covers the mask
    std::uint64_t seen = mask & (~mask + 1);
    std::uint64_t frontier = seen;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m != 0; m &= m - 1) next |= g.neighbours(std::countr_zero(m));
        next &= mask & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == mask;
}

std::optional<VertexSet> find_odd_hole(const Graph& g) {
    // Exponential in n; intended for small graphs.
    int n = g.order();
    for (int k = 7; k <= n; k += 2) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        std::iota(idx.begin(), idx.end(), 0);
        do {
            std::uint64_t mask = 0;
            for (int v : idx) mask |= std::uint64_t{1} << v;
            if (is_induced_cycle(g, mask)) return idx;
        } while (next_subset(idx, n));
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// families

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

// ---------------------------------------------------------------------------
// graph6

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw GraphError("graph6: empty input");
    for (char c : text) {
        if (c < 63 || c > 126) throw GraphError("graph6: character out of range");
    }
    int n = text[0] - 63;
    if (n > 62) throw GraphError("graph6: only the short form (n <= 62) is supported");
    std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
    std::size_t chars = (bits + 5) / 6;
    if (text.size() != 1 + chars) {
        throw GraphError("graph6: expected " + std::to_string(1 + chars) + " characters, got " +
                         std::to_string(text.size()));
    }
    if (n == 0) throw GraphError("graph6: empty graph");
    Graph g(n);
    std::size_t k = 0;
    auto bit = [&](std::size_t pos) { return ((text[1 + pos / 6] - 63) >> (5 - pos % 6)) & 1; };
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (bit(k)) g.add_edge(i, j);
        }
    }
    for (; k < chars * 6; ++k) {
        if (bit(k)) throw GraphError("graph6: nonzero padding bits");
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    int n = g.order();
    if (n < 1 || n > 62) throw GraphError("graph6: n out of range for the short form");
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

// ---------------------------------------------------------------------------
// edge lists

namespace {

std::vector<long> read_integers(std::string_view text) {
    std::vector<long> out;
    const char* p = text.data();
    const char* end = p + text.size();
    while (p < end) {
        while (p < end && (*p == ' ' || *p == '\t' || *p == '\n' || *p == '\r')) ++p;
        if (p == end) break;
        long value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc() || next == p) throw GraphError("edge list: expected an integer");
        out.push_back(value);
        p = next;
    }
    return out;
}

std::vector<Graph> parse_edge_lists(std::string_view text) {
    auto ints = read_integers(text);
    std::vector<Graph> out;
    std::size_t pos = 0;
    while (pos < ints.size()) {
        if (pos + 2 > ints.size()) throw GraphError("edge list: truncated header");
        long n = ints[pos], m = ints[pos + 1];
        if (n < 1 || n > Graph::kMaxVertices) throw GraphError("edge list: vertex count out of range");
        if (m < 0 || pos + 2 + 2 * static_cast<std::size_t>(m) > ints.size()) {
            throw GraphError("edge list: edge count does not match the body");
        }
        pos += 2;
        Graph g(static_cast<int>(n));
        for (long e = 0; e < m; ++e, pos += 2) {
            long u = ints[pos], v = ints[pos + 1];
            if (u < 0 || v < 0 || u >= n || v >= n) throw GraphError("edge list: vertex out of range");
            if (g.adjacent(static_cast<int>(u), static_cast<int>(v))) throw GraphError("edge list: duplicate edge");
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    auto graphs = parse_edge_lists(text);
    if (graphs.size() != 1) throw GraphError("edge list: expected exactly one graph");
    return graphs.front();
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream os;
    auto edges = g.edges();
    os << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) os << u << ' ' << v << '\n';
    return os.str();
}

std::vector<Graph> parse_graph_file(std::string_view text) {
    // An edge-list header is two integers separated by whitespace; a graph6
    // line is a single token.
    std::istringstream is{std::string(text)};
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) return {};
    bool edge_list = lines.front().find_first_of(" \t") != std::string::npos;
    if (edge_list) return parse_edge_lists(text);
    std::vector<Graph> out;
    out.reserve(lines.size());
    for (const auto& l : lines) out.push_back(parse_graph6(l));
    return out;
}

}  // namespace distideal
