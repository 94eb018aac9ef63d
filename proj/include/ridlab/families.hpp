#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ridlab/canonical.hpp"
#include "ridlab/graph.hpp"

namespace ridlab {

// A named, parameterized member of one of the constructive families, carrying
// the value its family predicts for gamma_rI. Predictions are checked against
// the solver in the test suites, never assumed.
struct FamilyInstance {
    std::string name;
    std::vector<std::pair<std::string, int>> params;
    Graph graph;
    int predicted_rid = 0;
};

// T_{4,k}: k copies of K_{1,3} (center u_i, leaves v_i, w_i, x_i) plus a new
// vertex z adjacent to the leaf x_i of every copy. Numbering: copy i occupies
// 4i..4i+3 as (u, v, w, x); z is vertex 4k. gamma_rI = 2k + 2.
inline FamilyInstance build_T4k(int k) {
    if (k < 1) throw std::invalid_argument("build_T4k: need k >= 1");
    Graph g(4 * k + 1);
    int z = 4 * k;
    for (int i = 0; i < k; ++i) {
        int u = 4 * i;
        g.add_edge(u, u + 1);
        g.add_edge(u, u + 2);
        g.add_edge(u, u + 3);
        g.add_edge(z, u + 3);
    }
    return {"J.T4k", {{"k", k}}, g, 2 * k + 2};
}

// The five sporadic extremal trees with gamma_rI = (n + 3) / 2.
inline FamilyInstance build_J(const std::string& tag) {
    Graph g;
    if (tag == "T1") {
        g = path(3);
    } else if (tag == "T2") {
        g = double_star(2, 3);
    } else if (tag == "T3") {
        // caterpillar: spine 0-3-6, every spine vertex carrying two leaves
        g = Graph(9);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(0, 3);
        g.add_edge(3, 4);
        g.add_edge(3, 5);
        g.add_edge(3, 6);
        g.add_edge(6, 7);
        g.add_edge(6, 8);
    } else if (tag == "T4") {
        // S_{2,2} on 0..5 (supports 0 and 3), then 5-6, a leaf 7 on 6, and
        // vertex 8 on 6 carrying the two leaves 9 and 10
        g = Graph(11);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(0, 3);
        g.add_edge(3, 4);
        g.add_edge(3, 5);
        g.add_edge(5, 6);
        g.add_edge(6, 7);
        g.add_edge(6, 8);
        g.add_edge(8, 9);
        g.add_edge(8, 10);
    } else if (tag == "T5") {
        // S_{2,2} on 0..5 (supports 0 and 1) with an extra leaf on the leaf 5
        g = Graph(7);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(0, 3);
        g.add_edge(1, 4);
        g.add_edge(1, 5);
        g.add_edge(5, 6);
    } else {
        throw std::invalid_argument("build_J: unknown tag '" + tag + "' (want T1..T5)");
    }
    return {"J." + tag, {}, g, (g.n() + 3) / 2};
}

// All members of the J family of a given order (empty for even orders).
inline std::vector<FamilyInstance> j_members_of_order(int n) {
    std::vector<FamilyInstance> out;
    if (n == 3) out.push_back(build_J("T1"));
    if (n == 7) {
        out.push_back(build_J("T2"));
        out.push_back(build_J("T5"));
    }
    if (n == 9) out.push_back(build_J("T3"));
    if (n == 11) out.push_back(build_J("T4"));
    if (n >= 5 && n % 4 == 1) out.push_back(build_T4k((n - 1) / 4));
    return out;
}

// Omega: complete bipartite base with parts X (independent, |X| in {1,2})
// and Y (|Y| >= 2, |X| <= |Y|), every X-Y edge present, plus Y-internal
// edges only, with min degree >= 1 inside Y. Membership tries every X.
inline bool is_in_omega(const Graph& g) {
    if (g.n() < 3) throw std::domain_error("is_in_omega: need n >= 3");
    auto fits = [&](std::uint64_t x_mask) {
        std::uint64_t y_mask = g.vertex_mask() & ~x_mask;
        int ysize = std::popcount(y_mask);
        if (ysize < 2 || std::popcount(x_mask) > ysize) return false;
        for (std::uint64_t b = x_mask; b;) {
            int x = std::countr_zero(b);
            b &= b - 1;
            if ((g.neighbors(x) & y_mask) != y_mask) return false;
            if (g.neighbors(x) & x_mask) return false;
        }
        for (std::uint64_t b = y_mask; b;) {
            int y = std::countr_zero(b);
            b &= b - 1;
            if ((g.neighbors(y) & y_mask) == 0) return false;
        }
        return true;
    };
    for (int u = 0; u < g.n(); ++u) {
        if (fits(Graph::bit(u))) return true;
        for (int v = u + 1; v < g.n(); ++v)
            if (fits(Graph::bit(u) | Graph::bit(v))) return true;
    }
    return false;
}

// Psi(i): a dominating vertex and exactly one vertex of degree one.
// Psi(ii): vertices x, y with xy not an edge, N(x) = V \ {x,y}, N(y) a
// nonempty proper subset of V \ {x,y}, and V \ {x,y} inducing min degree >= 1.
inline bool is_in_psi(const Graph& g) {
    int n = g.n();
    bool has_universal = false;
    int degree_one = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) has_universal = true;
        if (g.degree(v) == 1) ++degree_one;
    }
    if (has_universal && degree_one == 1) return true;

    for (int x = 0; x < n; ++x) {
        if (g.degree(x) != n - 2) continue;
        for (int y = 0; y < n; ++y) {
            if (y == x || g.has_edge(x, y)) continue;
            std::uint64_t h_mask = g.vertex_mask() & ~Graph::bit(x) & ~Graph::bit(y);
            int hsize = n - 2;
            int ydeg = g.degree(y);
            if ((g.neighbors(y) & ~h_mask) != 0) continue;
            if (ydeg < 1 || ydeg > hsize - 1) continue;
            bool ok = true;
            for (std::uint64_t b = h_mask; b && ok;) {
                int h = std::countr_zero(b);
                b &= b - 1;
                if ((g.neighbors(h) & h_mask) == 0) ok = false;
            }
            if (ok) return true;
        }
    }
    return false;
}

// Theta: a 3-vertex part H such that every outside vertex has at least two
// neighbors in H and the outside induces min degree >= 1.
inline bool is_in_theta(const Graph& g) {
    int n = g.n();
    if (n < 5) return false;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                std::uint64_t h_mask = Graph::bit(a) | Graph::bit(b) | Graph::bit(c);
                std::uint64_t k_mask = g.vertex_mask() & ~h_mask;
                bool ok = true;
                for (std::uint64_t m = k_mask; m && ok;) {
                    int v = std::countr_zero(m);
                    m &= m - 1;
                    if (std::popcount(g.neighbors(v) & h_mask) < 2) ok = false;
                    else if ((g.neighbors(v) & k_mask) == 0) ok = false;
                }
                if (ok) return true;
            }
    return false;
}

// The connected graphs with gamma_rI equal to the order, restricted to order n.
inline std::vector<Graph> terminal_family(int n) {
    if (n < 1) throw std::invalid_argument("terminal_family: need n >= 1");
    std::vector<Graph> out;
    out.push_back(star(n));  // K_1 for n = 1, K_{1,n-1} otherwise (covers P_2, P_3)
    if (n == 4 || n == 5) out.push_back(cycle(n));
    if (n >= 4 && n <= 6) out.push_back(path(n));
    return out;
}

// A tree realizing gamma_r = a and gamma_rI = b. Realizable exactly for
// 2 <= a <= b <= 2a with (a, b) != (2, 3).
//   b = 2a: star K_{1,a-1} with every edge subdivided twice (center 0, leg i
//           on vertices 3i+1, 3i+2, 3i+3).
//   b = a:  the star K_{1,a-1}.
//   else:   star K_{1,a} (center 0, leaves 1..a) plus pendant vertices a+i
//           attached to leaf i for i = 1..b-a; needs a >= 3.
inline FamilyInstance realizability_tree(int a, int b) {
    if (a < 2 || b < a || b > 2 * a)
        throw std::invalid_argument("realizability_tree: need 2 <= a <= b <= 2a");
    if (a == 2 && b == 3)
        throw std::invalid_argument(
            "realizability_tree: (2,3) is not realizable (gamma_r = 2 only for P2 and P4)");
    Graph g;
    if (b == 2 * a) {
        g = Graph(3 * a - 2);
        for (int i = 0; i < a - 1; ++i) {
            g.add_edge(0, 3 * i + 1);
            g.add_edge(3 * i + 1, 3 * i + 2);
            g.add_edge(3 * i + 2, 3 * i + 3);
        }
    } else if (b == a) {
        g = star(a);
    } else {
        g = Graph(b + 1);
        for (int i = 1; i <= a; ++i) g.add_edge(0, i);
        for (int i = 1; i <= b - a; ++i) g.add_edge(i, a + i);
    }
    return {"REALIZE", {{"a", a}, {"b", b}}, g, b};
}

// Hardness-reduction graph G' on 8n vertices: for each vertex v_i of g,
// attach a double star T_i (supports a_i, b_i; leaves c_i, d_i on a_i and
// e_i, f_i on b_i) through the edge v_i a_i, and a vertex g_i through the
// edge v_i g_i. Numbering: originals 0..n-1, then block i at
// n + 7i + (a, b, c, d, e, f, g). gamma_rI(G') = 5n + gamma(g).
inline Graph reduction_gadget(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("reduction_gadget: need n >= 1");
    int n = g.n();
    if (8 * n > kMaxOrder)
        throw std::invalid_argument("reduction_gadget: 8n exceeds the order cap");
    Graph out(8 * n);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (int i = 0; i < n; ++i) {
        int a = n + 7 * i;
        int b = a + 1, c = a + 2, d = a + 3, e = a + 4, f = a + 5, pend = a + 6;
        out.add_edge(a, b);
        out.add_edge(a, c);
        out.add_edge(a, d);
        out.add_edge(b, e);
        out.add_edge(b, f);
        out.add_edge(i, a);
        out.add_edge(i, pend);
    }
    return out;
}

// Sharpness witnesses for the eta lower bound: the friendship-style graph
// (k copies of K_2, one new vertex adjacent to all of them) and the same
// graph with one non-center vertex removed.
inline Graph friendship(int k) {
    if (k < 1) throw std::invalid_argument("friendship: need k >= 1");
    Graph g(2 * k + 1);
    for (int i = 0; i < k; ++i) {
        g.add_edge(2 * i + 1, 2 * i + 2);
        g.add_edge(0, 2 * i + 1);
        g.add_edge(0, 2 * i + 2);
    }
    return g;
}

inline Graph friendship_minus_vertex(int k) {
    if (k < 2) throw std::invalid_argument("friendship_minus_vertex: need k >= 2");
    Graph g(2 * k);
    for (int i = 0; i < k - 1; ++i) {
        g.add_edge(2 * i + 1, 2 * i + 2);
        g.add_edge(0, 2 * i + 1);
        g.add_edge(0, 2 * i + 2);
    }
    g.add_edge(0, 2 * k - 1);
    return g;
}

namespace detail {

// Three paths on >= 4 vertices leaving u, pairwise sharing no vertex but u.
// (Read of "edge disjoint with one common end point": the labeling in the
// bound's construction needs the interiors to be disjoint; on trees the two
// readings coincide.)
inline bool has_three_disjoint_p4(const Graph& g, int u) {
    auto extend = [&](auto&& self, std::uint64_t used, int found, int min_first) -> bool {
        if (found == 3) return true;
        std::uint64_t cand_a = g.neighbors(u) & ~used;
        while (cand_a) {
            int a = std::countr_zero(cand_a);
            cand_a &= cand_a - 1;
            if (a < min_first) continue;
            std::uint64_t cand_b = g.neighbors(a) & ~used & ~Graph::bit(u) & ~Graph::bit(a);
            while (cand_b) {
                int b = std::countr_zero(cand_b);
                cand_b &= cand_b - 1;
                std::uint64_t cand_c =
                    g.neighbors(b) & ~used & ~Graph::bit(u) & ~Graph::bit(a) & ~Graph::bit(b);
                while (cand_c) {
                    int c = std::countr_zero(cand_c);
                    cand_c &= cand_c - 1;
                    if (self(self, used | Graph::bit(a) | Graph::bit(b) | Graph::bit(c),
                             found + 1, a + 1))
                        return true;
                }
            }
        }
        return false;
    };
    return extend(extend, Graph::bit(u), 0, 0);
}

// A subgraph made of a path on seven vertices with extra neighbors hanging
// off positions 3 and 5 (1-based), nine distinct vertices in total.
inline bool has_p7_with_two_pendants(const Graph& g) {
    if (g.n() < 9) return false;
    std::vector<int> p(7);
    auto walk = [&](auto&& self, int depth, std::uint64_t used) -> bool {
        if (depth == 7) {
            std::uint64_t off3 = g.neighbors(p[2]) & ~used;
            std::uint64_t off5 = g.neighbors(p[4]) & ~used;
            if (off3 == 0 || off5 == 0) return false;
            // need two distinct off-path pendants
            return off3 != off5 || std::popcount(off3) > 1;
        }
        std::uint64_t cand = depth == 0 ? g.vertex_mask() : g.neighbors(p[depth - 1]);
        cand &= ~used;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            p[depth] = v;
            if (self(self, depth + 1, used | Graph::bit(v))) return true;
        }
        return false;
    };
    return walk(walk, 0, 0);
}

}  // namespace detail

// Which of the five structural conditions forcing gamma_rI <= n - 2 hold.
//   1: adjacent vertices both of degree >= 3
//   2: diameter >= 9
//   3: vertices at distance 4 with degrees >= 3 and >= 2
//   4: three paths on >= 4 vertices from one endpoint, disjoint elsewhere
//   5: a P7 subgraph with extra neighbors on its third and fifth vertices
inline std::set<int> lemma1_conditions(const Graph& g) {
    if (!is_connected(g)) throw std::domain_error("lemma1_conditions: graph is disconnected");
    std::set<int> out;

    for (auto [u, v] : g.edges())
        if (g.degree(u) >= 3 && g.degree(v) >= 3) {
            out.insert(1);
            break;
        }

    int diam = 0;
    bool dist4 = false;
    for (int u = 0; u < g.n(); ++u) {
        auto dist = bfs_distances(g, u);
        for (int v = 0; v < g.n(); ++v) {
            diam = std::max(diam, dist[static_cast<std::size_t>(v)]);
            if (dist[static_cast<std::size_t>(v)] == 4 &&
                ((g.degree(u) >= 3 && g.degree(v) >= 2) || (g.degree(v) >= 3 && g.degree(u) >= 2)))
                dist4 = true;
        }
    }
    if (diam >= 9) out.insert(2);
    if (dist4) out.insert(3);

    for (int u = 0; u < g.n(); ++u)
        if (g.degree(u) >= 3 && detail::has_three_disjoint_p4(g, u)) {
            out.insert(4);
            break;
        }

    if (detail::has_p7_with_two_pendants(g)) out.insert(5);
    return out;
}

}  // namespace ridlab
