#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ridlab/graph.hpp"
#include "ridlab/labeling.hpp"
#include "ridlab/solvers.hpp"

namespace ridlab {

// Rooted-subtree state of a vertex in the restrained Italian DP.
//   label:                    the vertex's own value.
//   coverage_owed_by_parent:  for a 0-vertex, how much of the Italian demand
//                             (neighbor sum >= 2) its parent must still
//                             supply; coverage from children is capped at 2.
//   needs_zero_parent:        the 0-vertex has no 0-child, so its parent
//                             must be labeled 0 to satisfy the restrained
//                             condition.
// Both obligations at once can never be met, so those two of the eight
// combinations stay at infinite cost; at the root only states with no parent
// obligation are feasible.
struct DpState {
    int label;
    int coverage_owed_by_parent;
    bool needs_zero_parent;
};

namespace detail {

inline constexpr int kNumStates = 8;
inline constexpr std::array<DpState, kNumStates> kStates = {{
    {1, 0, false},  // 0: label 1
    {2, 0, false},  // 1: label 2
    {0, 0, false},  // 2
    {0, 1, false},  // 3
    {0, 2, false},  // 4
    {0, 0, true},   // 5
    {0, 1, true},   // 6
    {0, 2, true},   // 7
}};

inline constexpr int kInf = 1 << 28;

// Child states a parent with the given label can absorb: a 0-child must owe
// at most the parent's label, and may demand a 0-parent only from a 0-parent.
inline const std::vector<int>& child_states_under_nonzero(int parent_label) {
    static const std::vector<int> under1 = {0, 1, 2, 3};
    static const std::vector<int> under2 = {0, 1, 2, 3, 4};
    return parent_label == 1 ? under1 : under2;
}
inline constexpr std::array<int, 4> kChildStatesUnderZero = {0, 1, 2, 5};

struct MergeCell {
    int cost = kInf;
    int prev_cov = -1;
    int prev_hz = -1;
    int child_state = -1;
};

struct VertexDp {
    std::array<int, kNumStates> cost;
    // back-pointers for label 1 / label 2: the chosen state per child
    std::vector<int> pick1, pick2;
    // merge tables for label 0, one layer per child: cells indexed (cov, hz)
    std::vector<std::array<MergeCell, 6>> merge;
};

inline int cell_index(int cov, int hz) { return cov * 2 + hz; }

}  // namespace detail

// gamma_rI of a tree by a rooted dynamic program over the eight DpState
// combinations, O(n * states^2). Witness reconstructed by back-pointers;
// ties break toward the smaller child-state index.
inline SolveResult rid_number_tree_dp(const Graph& t) {
    if (t.n() < 1) throw std::invalid_argument("rid_number_tree_dp: need n >= 1");
    if (!is_tree(t)) throw std::domain_error("rid_number_tree_dp: input is not a tree");
    using namespace detail;

    const int n = t.n();
    std::vector<int> order, parent(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
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
            children[static_cast<std::size_t>(v)].push_back(u);
            order.push_back(u);
        }
    }

    std::vector<VertexDp> dp(static_cast<std::size_t>(n));
    std::uint64_t nodes = 0;

    for (std::size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        auto& d = dp[static_cast<std::size_t>(v)];
        const auto& kids = children[static_cast<std::size_t>(v)];
        d.cost.fill(kInf);
        ++nodes;

        // label 1 and label 2: children are independent
        for (int own = 0; own < 2; ++own) {
            int label = own + 1;
            int total = label;
            auto& pick = own == 0 ? d.pick1 : d.pick2;
            pick.assign(kids.size(), -1);
            for (std::size_t ci = 0; ci < kids.size() && total < kInf; ++ci) {
                const auto& kd = dp[static_cast<std::size_t>(kids[ci])];
                int bestc = kInf;
                for (int s : child_states_under_nonzero(label))
                    if (kd.cost[static_cast<std::size_t>(s)] < bestc) {
                        bestc = kd.cost[static_cast<std::size_t>(s)];
                        pick[ci] = s;
                    }
                total = bestc >= kInf ? kInf : total + bestc;
            }
            d.cost[static_cast<std::size_t>(own)] = total;
        }

        // label 0: fold children through (coverage capped at 2, has-0-child)
        d.merge.assign(kids.size(), {});
        std::array<int, 6> cur;
        cur.fill(kInf);
        cur[static_cast<std::size_t>(cell_index(0, 0))] = 0;
        for (std::size_t ci = 0; ci < kids.size(); ++ci) {
            const auto& kd = dp[static_cast<std::size_t>(kids[ci])];
            auto& layer = d.merge[ci];
            for (int s : kChildStatesUnderZero) {
                int sc = kd.cost[static_cast<std::size_t>(s)];
                if (sc >= kInf) continue;
                int gain = kStates[static_cast<std::size_t>(s)].label;  // coverage provided
                bool zero_child = kStates[static_cast<std::size_t>(s)].label == 0;
                for (int cov = 0; cov <= 2; ++cov)
                    for (int hz = 0; hz <= 1; ++hz) {
                        int c = cur[static_cast<std::size_t>(cell_index(cov, hz))];
                        if (c >= kInf) continue;
                        int ncov = std::min(2, cov + gain);
                        int nhz = zero_child ? 1 : hz;
                        auto& cell = layer[static_cast<std::size_t>(cell_index(ncov, nhz))];
                        if (c + sc < cell.cost) {
                            cell.cost = c + sc;
                            cell.prev_cov = cov;
                            cell.prev_hz = hz;
                            cell.child_state = s;
                        }
                    }
            }
            for (int cell = 0; cell < 6; ++cell)
                cur[static_cast<std::size_t>(cell)] = layer[static_cast<std::size_t>(cell)].cost;
        }
        for (int cov = 0; cov <= 2; ++cov)
            for (int hz = 0; hz <= 1; ++hz) {
                int owed = 2 - cov;
                int state = (hz ? 2 : 5) + owed;
                d.cost[static_cast<std::size_t>(state)] =
                    cur[static_cast<std::size_t>(cell_index(cov, hz))];
            }
    }

    // root may not owe coverage nor demand a 0-parent
    const auto& rd = dp[0];
    int root_state = -1;
    int best = kInf;
    for (int s : {0, 1, 2})
        if (rd.cost[static_cast<std::size_t>(s)] < best) {
            best = rd.cost[static_cast<std::size_t>(s)];
            root_state = s;
        }
    if (root_state < 0) throw std::logic_error("rid_number_tree_dp: no feasible root state");

    Labeling witness(static_cast<std::size_t>(n));
    std::vector<std::pair<int, int>> stack{{0, root_state}};
    while (!stack.empty()) {
        auto [v, s] = stack.back();
        stack.pop_back();
        const auto& d = dp[static_cast<std::size_t>(v)];
        const auto& kids = children[static_cast<std::size_t>(v)];
        witness[static_cast<std::size_t>(v)] =
            static_cast<std::uint8_t>(kStates[static_cast<std::size_t>(s)].label);
        if (s == 0 || s == 1) {
            const auto& pick = s == 0 ? d.pick1 : d.pick2;
            for (std::size_t ci = 0; ci < kids.size(); ++ci) stack.push_back({kids[ci], pick[ci]});
        } else {
            const DpState& st = kStates[static_cast<std::size_t>(s)];
            int cov = 2 - st.coverage_owed_by_parent;
            int hz = st.needs_zero_parent ? 0 : 1;
            for (std::size_t ci = kids.size(); ci-- > 0;) {
                const auto& cell = d.merge[ci][static_cast<std::size_t>(cell_index(cov, hz))];
                stack.push_back({kids[ci], cell.child_state});
                cov = cell.prev_cov;
                hz = cell.prev_hz;
            }
        }
    }

    SolveResult out;
    out.value = best;
    out.witness = witness;
    out.nodes_explored = nodes;
    if (!is_restrained_italian(t, witness) || witness.weight() != best)
        throw std::logic_error("rid_number_tree_dp: witness failed verification");
    return out;
}

}  // namespace ridlab
