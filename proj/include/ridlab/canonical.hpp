#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "ridlab/graph.hpp"

namespace ridlab {
namespace detail {

// Transposing two "twin" vertices (equal neighborhoods apart from each
// other) is an automorphism, so a labeling search only needs one of them
// per branch point.
inline bool are_twins(const Graph& g, int u, int v) {
    std::uint64_t du = g.neighbors(u);
    std::uint64_t dv = g.neighbors(v);
    if (du == dv) return true;
    return (du ^ dv) == (Graph::bit(u) | Graph::bit(v));
}

// Block value of `cand` against the ordered prefix: bit for prefix[0] is the
// most significant, matching the graph6 column-major bit order.
inline std::uint64_t block_value(const Graph& g, const std::vector<int>& prefix, int cand) {
    std::uint64_t b = 0;
    std::uint64_t nb = g.neighbors(cand);
    for (int p : prefix) b = (b << 1) | ((nb >> p) & 1ull);
    return b;
}

struct MaxStringSearch {
    const Graph& g;
    std::vector<int> prefix;
    std::uint64_t used = 0;

    explicit MaxStringSearch(const Graph& graph) : g(graph) { prefix.reserve(g.n()); }

    // Walks orderings whose block strings tie-or-beat `best`, updating
    // `best` in place; on return `best` holds the lexicographic maximum.
    // Blocks below depth are invalidated with -1 whenever a prefix improves.
    void run(std::vector<std::int64_t>& best) {
        int depth = static_cast<int>(prefix.size());
        if (depth == g.n()) return;
        std::vector<int> tried;
        for (int cand = 0; cand < g.n(); ++cand) {
            if (used & Graph::bit(cand)) continue;
            bool dup = false;
            for (int t : tried)
                if (are_twins(g, t, cand)) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            tried.push_back(cand);

            std::int64_t b = depth == 0 ? 0 : static_cast<std::int64_t>(block_value(g, prefix, cand));
            if (depth > 0) {
                if (b < best[depth - 1]) continue;
                if (b > best[depth - 1]) {
                    best[depth - 1] = b;
                    std::fill(best.begin() + depth, best.end(), -1);
                }
            }
            prefix.push_back(cand);
            used |= Graph::bit(cand);
            run(best);
            used &= ~Graph::bit(cand);
            prefix.pop_back();
        }
    }
};

}  // namespace detail

// Canonical form: the lexicographically greatest sequence of upper-triangle
// blocks (vertex j's adjacency bits to vertices 0..j-1) over all vertex
// orderings. Equal canonical blocks <=> isomorphic.
inline std::vector<std::int64_t> canonical_blocks(const Graph& g) {
    std::vector<std::int64_t> best(static_cast<std::size_t>(std::max(g.n() - 1, 0)), -1);
    detail::MaxStringSearch search(g);
    search.run(best);
    return best;
}

// True iff the identity labeling already attains the canonical block string.
// Used as the acceptance test of the orderly graph generator.
inline bool is_canonically_labeled(const Graph& g) {
    std::vector<std::int64_t> ref(static_cast<std::size_t>(std::max(g.n() - 1, 0)));
    std::vector<int> idprefix;
    for (int j = 1; j < g.n(); ++j) {
        idprefix.push_back(j - 1);  // identity prefix 0..j-1
        ref[static_cast<std::size_t>(j - 1)] =
            static_cast<std::int64_t>(detail::block_value(g, idprefix, j));
    }

    // Depth-first over orderings: follow ties, reject on the first ordering
    // that produces a strictly larger block.
    std::vector<int> prefix;
    std::uint64_t used = 0;
    std::function<bool(void)> walk = [&]() -> bool {
        int depth = static_cast<int>(prefix.size());
        if (depth == g.n()) return true;
        std::vector<int> tried;
        for (int cand = 0; cand < g.n(); ++cand) {
            if (used & Graph::bit(cand)) continue;
            bool dup = false;
            for (int t : tried)
                if (detail::are_twins(g, t, cand)) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            tried.push_back(cand);
            if (depth > 0) {
                std::int64_t b = static_cast<std::int64_t>(detail::block_value(g, prefix, cand));
                if (b > ref[static_cast<std::size_t>(depth - 1)]) return false;
                if (b < ref[static_cast<std::size_t>(depth - 1)]) continue;
            }
            prefix.push_back(cand);
            used |= Graph::bit(cand);
            bool ok = walk();
            used &= ~Graph::bit(cand);
            prefix.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    return walk();
}

// --- free-tree canonical sequences -----------------------------------------

// Centroid(s) of a tree: the one or two vertices minimizing the largest
// component of T - v.
inline std::vector<int> tree_centroids(const Graph& t) {
    if (!is_tree(t)) throw std::domain_error("tree_centroids: input is not a tree");
    int n = t.n();
    std::vector<int> size(static_cast<std::size_t>(n), 1);
    std::vector<int> order, parent(static_cast<std::size_t>(n), -1);
    order.reserve(static_cast<std::size_t>(n));
    order.push_back(0);
    std::uint64_t seen = Graph::bit(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        std::uint64_t nb = t.neighbors(v) & ~seen;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            seen |= Graph::bit(u);
            parent[static_cast<std::size_t>(u)] = v;
            order.push_back(u);
        }
    }
    for (std::size_t i = order.size(); i-- > 1;)
        size[static_cast<std::size_t>(parent[static_cast<std::size_t>(order[i])])] +=
            size[static_cast<std::size_t>(order[i])];

    int best = n;
    std::vector<int> result;
    for (int v = 0; v < n; ++v) {
        int worst = n - size[static_cast<std::size_t>(v)];
        std::uint64_t nb = t.neighbors(v);
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (parent[static_cast<std::size_t>(u)] == v)
                worst = std::max(worst, size[static_cast<std::size_t>(u)]);
        }
        if (worst < best) {
            best = worst;
            result.assign(1, v);
        } else if (worst == best) {
            result.push_back(v);
        }
    }
    return result;
}

// Canonical level sequence of the tree rooted at `root`: depth-first with
// child subtree sequences arranged in non-increasing lexicographic order,
// which maximizes the overall sequence.
inline std::vector<int> rooted_canonical_levels(const Graph& t, int root) {
    std::function<std::vector<int>(int, int)> rep = [&](int v, int from) {
        std::vector<std::vector<int>> kids;
        std::uint64_t nb = t.neighbors(v);
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (u != from) kids.push_back(rep(u, v));
        }
        std::sort(kids.begin(), kids.end(), std::greater<>());
        std::vector<int> out{0};
        for (const auto& k : kids)
            for (int level : k) out.push_back(level + 1);
        return out;
    };
    return rep(root, -1);
}

// Isomorphism-invariant sequence for a free tree: the larger of the
// canonical sequences rooted at its centroid(s).
inline std::vector<int> free_tree_canonical_levels(const Graph& t) {
    std::vector<int> best;
    for (int c : tree_centroids(t)) best = std::max(best, rooted_canonical_levels(t, c));
    return best;
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n()) return false;
    if (a.n() > 16 || b.n() > 16)
        throw std::invalid_argument("is_isomorphic: supported up to 16 vertices");
    if (a.m() != b.m()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    if (is_tree(a) != is_tree(b)) return false;
    if (is_tree(a)) return free_tree_canonical_levels(a) == free_tree_canonical_levels(b);
    return canonical_blocks(a) == canonical_blocks(b);
}

// |Aut(G)| by backtracking over adjacency-preserving bijections; used by the
// labeled-counting cross-checks in the test suites.
inline std::uint64_t automorphism_count(const Graph& g) {
    int n = g.n();
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::uint64_t taken = 0;
    std::uint64_t count = 0;
    std::function<void(int)> place = [&](int v) {
        if (v == n) {
            ++count;
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (taken & Graph::bit(w)) continue;
            if (g.degree(w) != g.degree(v)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.has_edge(u, v) != g.has_edge(image[static_cast<std::size_t>(u)], w)) ok = false;
            if (!ok) continue;
            image[static_cast<std::size_t>(v)] = w;
            taken |= Graph::bit(w);
            place(v + 1);
            taken &= ~Graph::bit(w);
        }
    };
    place(0);
    return count;
}

}  // namespace ridlab
