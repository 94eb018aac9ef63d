#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace ridlab {

// Vertices are 0..n-1. Adjacency rows are 64-bit masks, which caps the order
// at 62 -- the graph6 short-form limit and enough for every experiment here.
inline constexpr int kMaxOrder = 62;

class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
        if (n < 0 || n > kMaxOrder)
            throw std::invalid_argument("Graph: order must be in [0, " +
                                        std::to_string(kMaxOrder) + "], got " + std::to_string(n));
    }

    int n() const { return n_; }

    int m() const {
        int total = 0;
        for (std::uint64_t row : adj_) total += std::popcount(row);
        return total / 2;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)] |= bit(v);
        adj_[static_cast<std::size_t>(v)] |= bit(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
    }

    // Neighborhood as a bit mask; bit v set iff uv is an edge.
    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    std::uint64_t closed_neighbors(int v) const { return neighbors(v) | bit(v); }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    int min_degree() const {
        if (n_ == 0) return 0;
        int d = n_;
        for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    std::uint64_t vertex_mask() const {
        return n_ == 64 ? ~0ull : ((1ull << n_) - 1);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> result;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adj_[static_cast<std::size_t>(u)] & bit(v)) result.emplace_back(u, v);
        return result;
    }

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }
    bool operator!=(const Graph& other) const { return !(*this == other); }

    static std::uint64_t bit(int v) { return 1ull << v; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("Graph: vertex " + std::to_string(v) + " out of range [0, " +
                                        std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// --- deterministic constructors -------------------------------------------
//
// Vertex numberings are part of the contract: paths and cycles in traversal
// order, star center = 0, double-star supports = 0 and 1.

inline Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

// Star on n vertices, i.e. K_{1,n-1}; center is vertex 0.
inline Graph star(int n) {
    if (n < 1) throw std::invalid_argument("star: need n >= 1");
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: need a, b >= 1");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

inline Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

// Double star S_{p,q}: supports 0 and 1, p leaves 2..p+1 on vertex 0,
// q leaves p+2..p+q+1 on vertex 1.
inline Graph double_star(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("double_star: need p, q >= 1");
    Graph g(p + q + 2);
    g.add_edge(0, 1);
    for (int i = 0; i < p; ++i) g.add_edge(0, 2 + i);
    for (int i = 0; i < q; ++i) g.add_edge(1, 2 + p + i);
    return g;
}

// --- structure queries ------------------------------------------------------

inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::uint64_t seen = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (seen & Graph::bit(s)) continue;
        std::uint64_t comp = Graph::bit(s);
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(v);
            }
            frontier = next & ~comp;
            comp |= frontier;
        }
        seen |= comp;
        std::vector<int> verts;
        for (std::uint64_t c = comp; c;) {
            int v = std::countr_zero(c);
            c &= c - 1;
            verts.push_back(v);
        }
        comps.push_back(std::move(verts));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    if (g.n() == 0) return false;
    return components(g).size() == 1;
}

inline bool is_tree(const Graph& g) {
    return g.n() >= 1 && is_connected(g) && g.m() == g.n() - 1;
}

inline std::vector<int> leaves(const Graph& g) {
    std::vector<int> result;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 1) result.push_back(v);
    return result;
}

// BFS distances from source; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        std::uint64_t nb = g.neighbors(v);
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (dist[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(u);
            }
        }
    }
    return dist;
}

inline int diameter(const Graph& g) {
    if (!is_connected(g)) throw std::domain_error("diameter: graph is disconnected");
    int diam = 0;
    for (int v = 0; v < g.n(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int d : dist) diam = std::max(diam, d);
    }
    return diam;
}

// Subgraph induced by the vertex set `mask`; vertices are renumbered by
// ascending original index.
inline Graph induced(const Graph& g, std::uint64_t mask) {
    if (mask & ~g.vertex_mask()) throw std::invalid_argument("induced: vertex set out of range");
    std::vector<int> verts;
    for (std::uint64_t m = mask; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        verts.push_back(v);
    }
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

inline Graph induced(const Graph& g, const std::vector<int>& verts) {
    std::uint64_t mask = 0;
    for (int v : verts) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("induced: vertex out of range");
        mask |= Graph::bit(v);
    }
    return induced(g, mask);
}

}  // namespace ridlab
