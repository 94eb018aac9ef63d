#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ridlab/graph.hpp"
#include "ridlab/labeling.hpp"
#include "ridlab/rational.hpp"

namespace ridlab {

struct SolveResult {
    int value = 0;
    Labeling witness;
    std::uint64_t nodes_explored = 0;
};

struct SetSolveResult {
    int value = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
};

namespace detail {

// Exhaustive label assignment in vertex order 0..n-1, labels tried 0 < 1 < 2,
// so complete labelings are visited lexicographically and the first optimum
// recorded is the lexicographically first one. Branches die on weight
// (partial weight can only grow) or on a 0-vertex whose remaining
// neighborhood can no longer satisfy the coverage / 0-neighbor demands.
//
// mode_roman = false: restrained Italian (0-vertex needs neighbor sum >= 2).
// mode_roman = true:  restrained Roman   (0-vertex needs a 2-neighbor).
class LabelingSearch {
public:
    LabelingSearch(const Graph& g, bool mode_roman) : g_(g), roman_(mode_roman), n_(g.n()) {
        label_.fill(-1);
        nsum_.fill(0);
        nzero_.fill(0);
        ntwo_.fill(0);
        for (int v = 0; v < n_; ++v) nun_[static_cast<std::size_t>(v)] = g_.degree(v);
    }

    SolveResult run() {
        SolveResult out;
        best_ = n_ + 1;  // all-1 labeling is feasible, so the optimum is <= n
        have_witness_ = false;
        dfs(0, 0);
        if (!have_witness_) throw std::logic_error("LabelingSearch: no feasible labeling found");
        out.value = best_;
        out.witness = Labeling(std::vector<std::uint8_t>(witness_.begin(), witness_.begin() + n_));
        out.nodes_explored = nodes_;
        return out;
    }

private:
    bool viable(int v) const {
        auto vi = static_cast<std::size_t>(v);
        int k = nun_[vi];
        bool has_zero = nzero_[vi] > 0;
        if (roman_) {
            bool has_two = ntwo_[vi] > 0;
            if (has_two && has_zero) return true;
            if (has_two || has_zero) return k >= 1;
            return k >= 2;
        }
        if (has_zero) return nsum_[vi] + 2 * k >= 2;
        return k >= 1 && nsum_[vi] + 2 * (k - 1) >= 2;
    }

    bool assign(int v, int l) {
        label_[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(l);
        std::uint64_t nb = g_.neighbors(v);
        bool ok = true;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            auto ui = static_cast<std::size_t>(u);
            --nun_[ui];
            nsum_[ui] += l;
            if (l == 0) ++nzero_[ui];
            if (l == 2) ++ntwo_[ui];
            if (label_[ui] == 0 && !viable(u)) ok = false;
        }
        if (ok && l == 0 && !viable(v)) ok = false;
        return ok;
    }

    void unassign(int v, int l) {
        label_[static_cast<std::size_t>(v)] = -1;
        std::uint64_t nb = g_.neighbors(v);
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            auto ui = static_cast<std::size_t>(u);
            ++nun_[ui];
            nsum_[ui] -= l;
            if (l == 0) --nzero_[ui];
            if (l == 2) --ntwo_[ui];
        }
    }

    void dfs(int idx, int weight) {
        if (idx == n_) {
            if (!have_witness_ || weight < best_) {
                best_ = weight;
                have_witness_ = true;
                witness_ = label_;
            }
            return;
        }
        for (int l = 0; l <= 2; ++l) {
            int w = weight + l;
            if (have_witness_ ? w >= best_ : w > n_) break;
            ++nodes_;
            bool ok = assign(idx, l);
            if (ok) dfs(idx + 1, w);
            unassign(idx, l);
        }
    }

    const Graph& g_;
    bool roman_;
    int n_;
    std::array<std::int8_t, kMaxOrder> label_{};
    std::array<std::int8_t, kMaxOrder> witness_{};
    std::array<std::int16_t, kMaxOrder> nsum_{};
    std::array<std::int16_t, kMaxOrder> nzero_{};
    std::array<std::int16_t, kMaxOrder> ntwo_{};
    std::array<std::int16_t, kMaxOrder> nun_{};
    int best_ = 0;
    bool have_witness_ = false;
    std::uint64_t nodes_ = 0;
};

// Per-component solve; a global lexicographically-first optimum decomposes
// into lexicographically-first optima of the components.
template <typename Verify>
SolveResult solve_labeling(const Graph& g, bool mode_roman, Verify verify) {
    if (g.n() < 1) throw std::invalid_argument("solver: need n >= 1");
    SolveResult total;
    total.witness = Labeling(static_cast<std::size_t>(g.n()));
    for (const auto& comp : components(g)) {
        Graph sub = induced(g, comp);
        LabelingSearch search(sub, mode_roman);
        SolveResult r = search.run();
        if (!verify(sub, r.witness) || r.witness.weight() != r.value)
            throw std::logic_error("solver: witness failed verification");
        total.value += r.value;
        total.nodes_explored += r.nodes_explored;
        for (std::size_t i = 0; i < comp.size(); ++i)
            total.witness[static_cast<std::size_t>(comp[i])] = r.witness[i];
    }
    return total;
}

// Subset search in vertex order, "out" tried before "in", so the first
// optimum found has the lexicographically first indicator vector.
template <typename Feasible>
SetSolveResult solve_subset(const Graph& g, Feasible feasible) {
    int n = g.n();
    SetSolveResult out;
    int best = n + 1;  // S = V is always feasible for both set parameters
    bool have = false;
    std::uint64_t chosen = 0;
    std::uint64_t nodes = 0;

    auto dfs = [&](auto&& self, int idx, int size) -> void {
        if (have ? size >= best : size > n) return;
        if (idx == n) {
            ++nodes;
            VertexSet s(chosen);
            if (feasible(g, s) && (!have || size < best)) {
                best = size;
                have = true;
                out.witness = s;
            }
            return;
        }
        ++nodes;
        self(self, idx + 1, size);
        chosen |= Graph::bit(idx);
        self(self, idx + 1, size + 1);
        chosen &= ~Graph::bit(idx);
    };
    dfs(dfs, 0, 0);
    if (!have) throw std::logic_error("solve_subset: no feasible set");
    out.value = best;
    out.nodes_explored = nodes;
    return out;
}

}  // namespace detail

// Exact restrained Italian domination number. Disconnected inputs are solved
// per component and summed; an isolated vertex forces label 1. The witness is
// the lexicographically first optimum under vertex order 0..n-1 and label
// order 0 < 1 < 2.
inline SolveResult rid_number_exact(const Graph& g) {
    return detail::solve_labeling(g, false, [](const Graph& h, const Labeling& f) {
        return is_restrained_italian(h, f);
    });
}

// Exact restrained Roman domination number; same search with the Roman
// coverage test swapped in.
inline SolveResult rrd_number(const Graph& g) {
    return detail::solve_labeling(
        g, true, [](const Graph& h, const Labeling& f) { return is_rrd_function(h, f); });
}

inline SetSolveResult domination_number(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("domination_number: need n >= 1");
    return detail::solve_subset(
        g, [](const Graph& h, const VertexSet& s) { return is_dominating_set(h, s); });
}

inline SetSolveResult restrained_domination_number(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("restrained_domination_number: need n >= 1");
    return detail::solve_subset(
        g, [](const Graph& h, const VertexSet& s) { return is_restrained_dominating_set(h, s); });
}

// eta(G) = min{ gamma_rR(G), n - 2m/5, n - (2m-5)/3 }, evaluated exactly.
inline Rational eta_bound(const Graph& g) {
    if (g.n() < 3) throw std::domain_error("eta_bound: need n >= 3");
    if (!is_connected(g)) throw std::domain_error("eta_bound: graph is disconnected");
    std::int64_t n = g.n();
    std::int64_t m = g.m();
    Rational eta(rrd_number(g).value);
    eta = min(eta, Rational(5 * n - 2 * m, 5));
    eta = min(eta, Rational(3 * n - (2 * m - 5), 3));
    return eta;
}

}  // namespace ridlab
