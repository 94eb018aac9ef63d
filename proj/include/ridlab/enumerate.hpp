#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ridlab/canonical.hpp"
#include "ridlab/graph.hpp"

namespace ridlab {

// Isomorph-free stream of free trees on n vertices. Rooted trees are walked
// as canonical level sequences (root at level 0, successor rule of Beyer and
// Hedetniemi, descending lexicographic order starting from the path); a
// rooted tree is emitted iff its sequence equals the canonical sequence of
// its underlying free tree rooted at a centroid, so each isomorphism class
// appears exactly once.
class TreeEnumerator {
public:
    explicit TreeEnumerator(int n) : n_(n) {
        if (n < 1 || n > 16) throw std::invalid_argument("TreeEnumerator: need 1 <= n <= 16");
        levels_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) levels_[static_cast<std::size_t>(i)] = i;
    }

    std::optional<Graph> next() {
        while (!done_) {
            Graph t = from_levels(levels_);
            bool take = free_tree_canonical_levels(t) == levels_;
            advance();
            if (take) return t;
        }
        return std::nullopt;
    }

private:
    void advance() {
        int p = -1;
        for (int i = n_ - 1; i >= 0; --i)
            if (levels_[static_cast<std::size_t>(i)] >= 2) {
                p = i;
                break;
            }
        if (p < 0) {
            done_ = true;
            return;
        }
        int q = p - 1;
        while (levels_[static_cast<std::size_t>(q)] != levels_[static_cast<std::size_t>(p)] - 1) --q;
        for (int i = p; i < n_; ++i)
            levels_[static_cast<std::size_t>(i)] = levels_[static_cast<std::size_t>(i - (p - q))];
    }

    static Graph from_levels(const std::vector<int>& levels) {
        Graph t(static_cast<int>(levels.size()));
        for (std::size_t i = 1; i < levels.size(); ++i) {
            std::size_t j = i;
            while (levels[--j] != levels[i] - 1) {}
            t.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
        return t;
    }

    int n_;
    std::vector<int> levels_;
    bool done_ = false;
};

namespace detail {

// All graphs on n vertices, one per isomorphism class, by orderly extension:
// a graph whose identity labeling is canonical stays canonical after its
// last vertex is deleted, so extending each canonical k-vertex graph by one
// vertex with every neighborhood mask and keeping the canonically labeled
// results reaches every class exactly once.
inline std::vector<Graph> all_graphs_upto_iso(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("all_graphs_upto_iso: need 1 <= n <= 8");
    std::vector<Graph> level{Graph(1)};
    for (int k = 1; k < n; ++k) {
        std::vector<Graph> bigger;
        for (const Graph& g : level) {
            for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
                Graph h(k + 1);
                for (int u = 0; u < k; ++u)
                    for (int v = u + 1; v < k; ++v)
                        if (g.has_edge(u, v)) h.add_edge(u, v);
                for (int u = 0; u < k; ++u)
                    if (mask & Graph::bit(u)) h.add_edge(u, k);
                if (is_canonically_labeled(h)) bigger.push_back(std::move(h));
            }
        }
        level = std::move(bigger);
    }
    return level;
}

}  // namespace detail

// Isomorph-free stream of connected simple graphs on n vertices.
class ConnectedGraphEnumerator {
public:
    explicit ConnectedGraphEnumerator(int n) {
        if (n < 1 || n > 8)
            throw std::invalid_argument("ConnectedGraphEnumerator: need 1 <= n <= 8");
        for (Graph& g : detail::all_graphs_upto_iso(n))
            if (is_connected(g)) graphs_.push_back(std::move(g));
    }

    std::optional<Graph> next() {
        if (pos_ >= graphs_.size()) return std::nullopt;
        return graphs_[pos_++];
    }

private:
    std::vector<Graph> graphs_;
    std::size_t pos_ = 0;
};

inline std::vector<Graph> all_trees(int n) {
    TreeEnumerator en(n);
    std::vector<Graph> out;
    while (auto t = en.next()) out.push_back(std::move(*t));
    return out;
}

inline std::vector<Graph> all_connected_graphs(int n) {
    ConnectedGraphEnumerator en(n);
    std::vector<Graph> out;
    while (auto g = en.next()) out.push_back(std::move(*g));
    return out;
}

}  // namespace ridlab
