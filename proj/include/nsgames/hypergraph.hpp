#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "nsgames/common.hpp"

namespace nsg {

/// A hypergraph is a relation E in V x W: vertex v belongs to the edge
/// labelled w iff incidence(v,w). Vertices and edge labels are 0-based.
struct Hypergraph {
    int nv = 0;
    int nw = 0;
    std::vector<uint8_t> inc;  // nv*nw, row-major over (v,w)

    Hypergraph() = default;
    Hypergraph(int nv_, int nw_) : nv(nv_), nw(nw_), inc(size_t(nv_) * nw_, 0) {}

    bool at(int v, int w) const { return inc[size_t(v) * nw + w] != 0; }
    void set(int v, int w, bool b = true) { inc[size_t(v) * nw + w] = b ? 1 : 0; }

    static Hypergraph from_edges(int nv, int nw, const std::vector<std::pair<int, int>>& edges) {
        Hypergraph h(nv, nw);
        for (auto [v, w] : edges) {
            require(v >= 0 && v < nv && w >= 0 && w < nw, "hypergraph edge out of range");
            h.set(v, w);
        }
        return h;
    }

    /// Pairs (v,w) in E, sorted lexicographically.
    std::vector<std::pair<int, int>> edge_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int v = 0; v < nv; ++v)
            for (int w = 0; w < nw; ++w)
                if (at(v, w)) out.emplace_back(v, w);
        return out;
    }

    size_t edge_count() const {
        size_t c = 0;
        for (auto b : inc) c += b;
        return c;
    }

    /// Every vertex lies in some edge.
    bool is_full() const {
        for (int v = 0; v < nv; ++v) {
            bool any = false;
            for (int w = 0; w < nw && !any; ++w) any = at(v, w);
            if (!any) return false;
        }
        return true;
    }

    bool operator==(const Hypergraph& o) const = default;
};

/// Simple graph: symmetric adjacency, empty diagonal.
struct Graph {
    int n = 0;
    std::vector<uint8_t> adj;  // n*n

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(size_t(n_) * n_, 0) {}

    bool at(int i, int j) const { return adj[size_t(i) * n + j] != 0; }
    void add_edge(int i, int j) {
        require(i != j && i >= 0 && j >= 0 && i < n && j < n, "graph edge invalid");
        adj[size_t(i) * n + j] = adj[size_t(j) * n + i] = 1;
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [i, j] : edges) g.add_edge(i, j);
        return g;
    }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (at(i, j)) out.emplace_back(i, j);
        return out;
    }

    size_t edge_count() const { return edge_list().size(); }
    int degree(int v) const {
        int d = 0;
        for (int j = 0; j < n; ++j) d += at(v, j);
        return d;
    }

    Graph complement() const {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && !at(i, j)) g.adj[size_t(i) * n + j] = 1;
        return g;
    }

    bool operator==(const Graph& o) const = default;
};

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n + b.n);
    for (auto [i, j] : a.edge_list()) g.add_edge(i, j);
    for (auto [i, j] : b.edge_list()) g.add_edge(a.n + i, a.n + j);
    return g;
}

/// Hypergraph with a probability distribution on its vertex set.
struct ProbabilisticHypergraph {
    Hypergraph h;
    std::vector<double> dist;

    ValidationReport validate(double tol = kPredicateTol) const {
        ValidationReport r;
        if (int(dist.size()) != h.nv) {
            r.note(1.0, "dist size != nv");
            r.finish(tol);
            return r;
        }
        double s = 0;
        for (int v = 0; v < h.nv; ++v) {
            if (dist[v] < 0) r.note(-dist[v], "dist[" + std::to_string(v) + "] < 0");
            s += dist[v];
        }
        r.note(std::abs(s - 1.0), "sum(dist) != 1");
        r.finish(tol);
        return r;
    }
};

/// Non-local game with question sets X,Y and answer sets A,B; the winning set
/// holds the quadruples (x,y,a,b) on which the players win.
struct NonlocalGame {
    int nx = 0, ny = 0, na = 0, nb = 0;
    std::vector<uint8_t> win;  // nx*ny*na*nb, row-major (x,y,a,b)

    NonlocalGame() = default;
    NonlocalGame(int x, int y, int a, int b)
        : nx(x), ny(y), na(a), nb(b), win(size_t(x) * y * a * b, 0) {}

    size_t idx(int x, int y, int a, int b) const {
        return ((size_t(x) * ny + y) * na + a) * nb + b;
    }
    bool at(int x, int y, int a, int b) const { return win[idx(x, y, a, b)] != 0; }
    void set(int x, int y, int a, int b, bool v = true) { win[idx(x, y, a, b)] = v ? 1 : 0; }

    static NonlocalGame from_quadruples(int x, int y, int a, int b,
                                        const std::vector<std::array<int, 4>>& quads) {
        NonlocalGame g(x, y, a, b);
        for (auto& q : quads) {
            require(q[0] >= 0 && q[0] < x && q[1] >= 0 && q[1] < y && q[2] >= 0 && q[2] < a &&
                        q[3] >= 0 && q[3] < b,
                    "winning quadruple out of range");
            g.set(q[0], q[1], q[2], q[3]);
        }
        return g;
    }

    std::vector<std::array<int, 4>> quadruples() const {
        std::vector<std::array<int, 4>> out;
        for (int x = 0; x < nx; ++x)
            for (int y = 0; y < ny; ++y)
                for (int a = 0; a < na; ++a)
                    for (int b = 0; b < nb; ++b)
                        if (at(x, y, a, b)) out.push_back({x, y, a, b});
        return out;
    }

    /// The game as a hypergraph over (X x Y) x (A x B), row-major pairing.
    Hypergraph to_hypergraph() const {
        Hypergraph h(nx * ny, na * nb);
        for (int x = 0; x < nx; ++x)
            for (int y = 0; y < ny; ++y)
                for (int a = 0; a < na; ++a)
                    for (int b = 0; b < nb; ++b)
                        if (at(x, y, a, b))
                            h.set(pair_index(x, y, ny), pair_index(a, b, nb));
        return h;
    }

    bool operator==(const NonlocalGame& o) const = default;
};

// ---------------------------------------------------------------------------
// Hypergraph operations

/// E(w) = { v : (v,w) in E }.
inline std::vector<int> edge(const Hypergraph& h, int w) {
    require(w >= 0 && w < h.nw, "edge label out of range");
    std::vector<int> out;
    for (int v = 0; v < h.nv; ++v)
        if (h.at(v, w)) out.push_back(v);
    return out;
}

/// Dual hypergraph: (w,v) in E* iff (v,w) in E.
inline Hypergraph dual(const Hypergraph& h) {
    Hypergraph d(h.nw, h.nv);
    for (int v = 0; v < h.nv; ++v)
        for (int w = 0; w < h.nw; ++w)
            if (h.at(v, w)) d.set(w, v);
    return d;
}

/// Diagonal over a z-element set.
inline Hypergraph diagonal(int z) {
    if (z < 1) throw ShapeError("diagonal needs z >= 1");
    Hypergraph h(z, z);
    for (int i = 0; i < z; ++i) h.set(i, i);
    return h;
}

/// Confusability graph of E: x ~ x' iff distinct and sharing an edge.
inline Graph confusability_graph(const Hypergraph& h) {
    Graph g(h.nv);
    for (int w = 0; w < h.nw; ++w) {
        auto e = edge(h, w);
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j) g.add_edge(e[i], e[j]);
    }
    return g;
}

/// Product hypergraph over (V x X) x (W x Y), row-major index pairing.
inline Hypergraph product(const Hypergraph& a, const Hypergraph& b) {
    Hypergraph p(a.nv * b.nv, a.nw * b.nw);
    for (int v = 0; v < a.nv; ++v)
        for (int x = 0; x < b.nv; ++x)
            for (int w = 0; w < a.nw; ++w)
                for (int y = 0; y < b.nw; ++y)
                    if (a.at(v, w) && b.at(x, y))
                        p.set(pair_index(v, x, b.nv), pair_index(w, y, b.nw));
    return p;
}

inline Hypergraph power(const Hypergraph& h, int n) {
    require(n >= 1, "power needs n >= 1");
    Hypergraph p = h;
    for (int i = 1; i < n; ++i) p = product(p, h);
    return p;
}

/// 0/1 incidence matrix of a hypergraph over V x V.
inline std::vector<std::vector<int>> incidence_matrix(const Hypergraph& h) {
    require(h.nv == h.nw, "incidence matrix needs a hypergraph over V x V");
    std::vector<std::vector<int>> m(h.nv, std::vector<int>(h.nv, 0));
    for (int v = 0; v < h.nv; ++v)
        for (int w = 0; w < h.nw; ++w) m[v][w] = h.at(v, w) ? 1 : 0;
    return m;
}

/// Kneser graph K(n,r): r-subsets of [n] in lexicographic order, adjacent iff
/// disjoint.
inline Graph kneser_graph(int n, int r) {
    require(r >= 1 && r <= n, "kneser_graph needs 1 <= r <= n");
    std::vector<uint64_t> subsets;
    std::vector<int> pick(r);
    // lexicographic enumeration of r-subsets
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        uint64_t m = 0;
        for (int i : pick) m |= (uint64_t(1) << i);
        subsets.push_back(m);
        int i = r - 1;
        while (i >= 0 && pick[i] == n - r + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    Graph g(int(subsets.size()));
    for (size_t i = 0; i < subsets.size(); ++i)
        for (size_t j = i + 1; j < subsets.size(); ++j)
            if ((subsets[i] & subsets[j]) == 0) g.add_edge(int(i), int(j));
    return g;
}

/// Line graph: vertices are the edges of g in lexicographic order; two
/// distinct edges are adjacent iff they share an endpoint.
inline Graph line_graph(const Graph& g) {
    auto edges = g.edge_list();
    Graph l(int(edges.size()));
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) l.add_edge(int(i), int(j));
        }
    return l;
}

/// E_G = {(x,x') : x ~ x'} as a hypergraph in X x X.
inline Hypergraph graph_hypergraph_E(const Graph& g) {
    Hypergraph h(g.n, g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (g.at(i, j)) h.set(i, j);
    return h;
}

/// F_G = {((x,y),y) : x ~ y} as a hypergraph in (X x X) x X, ordered pairs
/// indexed row-major.
inline Hypergraph graph_hypergraph_F(const Graph& g) {
    Hypergraph h(g.n * g.n, g.n);
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y)
            if (g.at(x, y)) h.set(pair_index(x, y, g.n), y);
    return h;
}

struct IndependenceResult {
    int size = 0;
    std::vector<int> witness;
};

namespace detail {

inline int greedy_clique_cover_bound(const std::vector<uint64_t>& nbr, uint64_t pool) {
    // Partition the pool into cliques greedily; each clique meets any
    // independent set at most once.
    int bound = 0;
    while (pool) {
        int v = std::countr_zero(pool);
        uint64_t clique = uint64_t(1) << v;
        uint64_t cand = pool & nbr[v];
        pool &= ~(uint64_t(1) << v);
        while (cand) {
            int u = std::countr_zero(cand);
            clique |= uint64_t(1) << u;
            pool &= ~(uint64_t(1) << u);
            cand &= nbr[u] & pool;
        }
        ++bound;
    }
    return bound;
}

inline void mis_branch(const std::vector<uint64_t>& nbr, uint64_t pool, int cur, uint64_t chosen,
                       int& best, uint64_t& best_set) {
    if (!pool) {
        if (cur > best) {
            best = cur;
            best_set = chosen;
        }
        return;
    }
    if (cur + greedy_clique_cover_bound(nbr, pool) <= best) return;
    int v = std::countr_zero(pool);  // lexicographic tie-breaking
    // include v
    mis_branch(nbr, pool & ~(nbr[v] | (uint64_t(1) << v)), cur + 1, chosen | (uint64_t(1) << v),
               best, best_set);
    // exclude v
    mis_branch(nbr, pool & ~(uint64_t(1) << v), cur, chosen, best, best_set);
}

}  // namespace detail

/// Exact maximum independent set via branch-and-bound (greedy clique-cover
/// bound, lexicographic branching). Guarded to 64 vertices.
inline IndependenceResult independence_number(const Graph& g) {
    if (g.n > 64) throw GuardError("independence_number: n > 64");
    IndependenceResult res;
    if (g.n == 0) return res;
    std::vector<uint64_t> nbr(g.n, 0);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (g.at(i, j)) nbr[i] |= uint64_t(1) << j;
    uint64_t pool = (g.n == 64) ? ~uint64_t(0) : ((uint64_t(1) << g.n) - 1);
    int best = 0;
    uint64_t best_set = 0;
    detail::mis_branch(nbr, pool, 0, 0, best, best_set);
    res.size = best;
    for (int v = 0; v < g.n; ++v)
        if (best_set & (uint64_t(1) << v)) res.witness.push_back(v);
    return res;
}

/// All maximal independent sets, via Bron-Kerbosch with pivoting on the
/// complement graph. Guarded to 24 vertices; output sorted.
inline std::vector<std::vector<int>> maximal_independent_sets(const Graph& g) {
    if (g.n > 24) throw GuardError("maximal_independent_sets: n > 24");
    std::vector<uint32_t> non(g.n, 0);  // complement adjacency = "compatible" sets
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (i != j && !g.at(i, j)) non[i] |= uint32_t(1) << j;
    std::vector<uint32_t> found;
    uint32_t all = (g.n == 0) ? 0 : ((uint32_t(1) << g.n) - 1);
    // Bron-Kerbosch: cliques of the complement are independent sets of g.
    auto bk = [&](auto&& self, uint32_t r, uint32_t p, uint32_t x) -> void {
        if (!p && !x) {
            found.push_back(r);
            return;
        }
        uint32_t px = p | x;
        int pivot = std::countr_zero(px);
        int best_cnt = -1;
        for (uint32_t m = px; m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            int c = std::popcount(p & non[u]);
            if (c > best_cnt) {
                best_cnt = c;
                pivot = u;
            }
        }
        for (uint32_t m = p & ~non[pivot]; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            self(self, r | (uint32_t(1) << v), p & non[v], x & non[v]);
            p &= ~(uint32_t(1) << v);
            x |= uint32_t(1) << v;
        }
    };
    if (g.n > 0) bk(bk, 0, all, 0);
    std::vector<std::vector<int>> out;
    for (uint32_t m : found) {
        std::vector<int> s;
        for (int v = 0; v < g.n; ++v)
            if (m & (uint32_t(1) << v)) s.push_back(v);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nsg
