#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ridlab/graph.hpp"

namespace ridlab {

// A total assignment V -> {0,1,2}; the triple (V0, V1, V2).
struct Labeling {
    std::vector<std::uint8_t> values;

    Labeling() = default;
    explicit Labeling(std::size_t n, std::uint8_t fill = 0) : values(n, fill) { check(); }
    explicit Labeling(std::vector<std::uint8_t> v) : values(std::move(v)) { check(); }
    Labeling(std::initializer_list<std::uint8_t> v) : values(v) { check(); }

    int weight() const { return std::accumulate(values.begin(), values.end(), 0); }
    std::size_t size() const { return values.size(); }
    std::uint8_t operator[](std::size_t i) const { return values[i]; }
    std::uint8_t& operator[](std::size_t i) { return values[i]; }
    bool operator==(const Labeling& o) const { return values == o.values; }

    // Text form: comma-free digit string in vertex order, e.g. "011012".
    std::string to_string() const {
        std::string s;
        s.reserve(values.size());
        for (std::uint8_t v : values) s.push_back(static_cast<char>('0' + v));
        return s;
    }

    static Labeling from_string(const std::string& s) {
        std::vector<std::uint8_t> v;
        v.reserve(s.size());
        for (char c : s) {
            if (c < '0' || c > '2')
                throw std::invalid_argument("Labeling: expected digits 0..2, got '" +
                                            std::string(1, c) + "'");
            v.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return Labeling(std::move(v));
    }

private:
    void check() const {
        for (std::uint8_t v : values)
            if (v > 2) throw std::invalid_argument("Labeling: values must be in {0,1,2}");
    }
};

struct VertexSet {
    std::uint64_t bits = 0;

    VertexSet() = default;
    explicit VertexSet(std::uint64_t b) : bits(b) {}
    VertexSet(std::initializer_list<int> verts) {
        for (int v : verts) add(v);
    }

    void add(int v) { bits |= Graph::bit(v); }
    bool contains(int v) const { return (bits >> v) & 1ull; }
    int size() const { return std::popcount(bits); }
    bool operator==(const VertexSet& o) const { return bits == o.bits; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::uint64_t b = bits; b;) {
            int v = std::countr_zero(b);
            b &= b - 1;
            out.push_back(v);
        }
        return out;
    }
};

namespace detail {

inline void require_match(const Graph& g, const Labeling& f) {
    if (f.size() != static_cast<std::size_t>(g.n()))
        throw std::invalid_argument("labeling length " + std::to_string(f.size()) +
                                    " does not match graph order " + std::to_string(g.n()));
}

inline void require_subset(const Graph& g, const VertexSet& s) {
    if (s.bits & ~g.vertex_mask())
        throw std::invalid_argument("vertex set contains out-of-range vertices");
}

inline int neighbor_value_sum(const Graph& g, const Labeling& f, int v) {
    int sum = 0;
    std::uint64_t nb = g.neighbors(v);
    while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        sum += f[static_cast<std::size_t>(u)];
        if (sum >= 2) break;
    }
    return sum;
}

inline std::uint64_t zero_mask(const Labeling& f) {
    std::uint64_t mask = 0;
    for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v] == 0) mask |= Graph::bit(static_cast<int>(v));
    return mask;
}

}  // namespace detail

// Italian: every 0-vertex has neighbor-value sum >= 2. An isolated vertex
// labeled 0 has empty neighborhood sum 0, so it fails with no special case.
inline bool is_italian(const Graph& g, const Labeling& f) {
    detail::require_match(g, f);
    for (int v = 0; v < g.n(); ++v)
        if (f[static_cast<std::size_t>(v)] == 0 && detail::neighbor_value_sum(g, f, v) < 2)
            return false;
    return true;
}

// Restrained Italian: Italian, and the 0-labeled vertices induce a subgraph
// with no isolated vertex.
inline bool is_restrained_italian(const Graph& g, const Labeling& f) {
    detail::require_match(g, f);
    std::uint64_t zeros = detail::zero_mask(f);
    for (int v = 0; v < g.n(); ++v) {
        if (f[static_cast<std::size_t>(v)] != 0) continue;
        if ((g.neighbors(v) & zeros) == 0) return false;
        if (detail::neighbor_value_sum(g, f, v) < 2) return false;
    }
    return true;
}

// Restrained Roman: every 0-vertex has a 2-labeled neighbor, and the
// 0-labeled vertices induce no isolated vertex.
inline bool is_rrd_function(const Graph& g, const Labeling& f) {
    detail::require_match(g, f);
    std::uint64_t zeros = detail::zero_mask(f);
    std::uint64_t twos = 0;
    for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v] == 2) twos |= Graph::bit(static_cast<int>(v));
    for (int v = 0; v < g.n(); ++v) {
        if (f[static_cast<std::size_t>(v)] != 0) continue;
        if ((g.neighbors(v) & twos) == 0) return false;
        if ((g.neighbors(v) & zeros) == 0) return false;
    }
    return true;
}

inline bool is_dominating_set(const Graph& g, const VertexSet& s) {
    detail::require_subset(g, s);
    for (int v = 0; v < g.n(); ++v)
        if (!s.contains(v) && (g.neighbors(v) & s.bits) == 0) return false;
    return true;
}

// Restrained: dominating, and every vertex outside S has a neighbor outside S.
inline bool is_restrained_dominating_set(const Graph& g, const VertexSet& s) {
    detail::require_subset(g, s);
    std::uint64_t outside = g.vertex_mask() & ~s.bits;
    for (int v = 0; v < g.n(); ++v) {
        if (s.contains(v)) continue;
        if ((g.neighbors(v) & s.bits) == 0) return false;
        if ((g.neighbors(v) & outside) == 0) return false;
    }
    return true;
}

}  // namespace ridlab
