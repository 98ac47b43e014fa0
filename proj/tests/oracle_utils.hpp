#pragma once

// Test-side oracles, independent of the library's implementation paths.

#include <algorithm>
#include <set>
#include <vector>

#include "cfml/generators.hpp"
#include "cfml/graph.hpp"

namespace cfml::testing {

// Second BFS implementation: frontier swapping instead of a single queue.
inline std::vector<std::uint32_t> bfs_oracle(const PortedGraph& g, Vid s)
{
    const size_t n = g.num_vertices();
    std::vector<std::uint32_t> d(n, kUnreached);
    std::vector<Vid> frontier{s}, next;
    d[s] = 0;
    std::uint32_t depth = 0;
    while (!frontier.empty()) {
        ++depth;
        next.clear();
        for (Vid u : frontier)
            for (Vid w : g.neighbors(u))
                if (d[w] == kUnreached) {
                    d[w] = depth;
                    next.push_back(w);
                }
        frontier.swap(next);
    }
    return d;
}

inline std::vector<std::vector<std::uint32_t>> all_pairs_oracle(const PortedGraph& g)
{
    std::vector<std::vector<std::uint32_t>> m(g.num_vertices());
    for (Vid s = 0; s < g.num_vertices(); ++s)
        m[s] = bfs_oracle(g, s);
    return m;
}

// Third opinion for small graphs.
inline std::vector<std::vector<std::uint32_t>> floyd_warshall(const PortedGraph& g)
{
    const size_t n = g.num_vertices();
    const std::uint32_t inf = kUnreached / 4;
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
    for (Vid u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (Vid w : g.neighbors(u))
            d[u][w] = 1;
    }
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

using Dists = std::vector<std::vector<std::uint32_t>>;

inline std::vector<Vid> interval_oracle(const Dists& d, Vid u, Vid v)
{
    std::vector<Vid> out;
    for (Vid x = 0; x < d.size(); ++x)
        if (d[u][x] + d[x][v] == d[u][v])
            out.push_back(x);
    return out;
}

// Imprints of u on the set B: members w of B with I(u,w) meeting B only in w.
inline std::set<Vid> imprint_oracle(const Dists& d, const std::vector<Vid>& b, Vid u)
{
    std::set<Vid> out;
    for (Vid w : b) {
        bool imprint = true;
        for (Vid z : b)
            if (z != w && d[u][z] + d[z][w] == d[u][w]) {
                imprint = false;
                break;
            }
        if (imprint)
            out.insert(w);
    }
    return out;
}

// Gate of v in the set B: the unique member through which all of B is reached.
inline Vid gate_oracle(const Dists& d, const std::vector<Vid>& b, Vid v)
{
    Vid best = kNoVertex;
    for (Vid x : b)
        if (best == kNoVertex || d[v][x] < d[v][best])
            best = x;
    for (Vid u : b)
        if (d[v][u] != d[v][best] + d[best][u])
            return kNoVertex; // no gate
    return best;
}

// Exhaustive centroid: argmin of the distance sum, least id on ties.
inline Vid centroid_oracle(const PortedGraph& g, const std::vector<Vid>& scope)
{
    // distances within the induced subgraph
    std::vector<char> in(g.num_vertices(), 0);
    for (Vid v : scope)
        in[v] = 1;
    Vid best = kNoVertex;
    std::uint64_t best_m = ~0ULL;
    for (Vid s : scope) {
        std::vector<std::uint32_t> d(g.num_vertices(), kUnreached);
        std::vector<Vid> q{s};
        d[s] = 0;
        std::uint64_t m = 0;
        for (size_t head = 0; head < q.size(); ++head) {
            Vid u = q[head];
            m += d[u];
            for (Vid w : g.neighbors(u))
                if (in[w] && d[w] == kUnreached) {
                    d[w] = d[u] + 1;
                    q.push_back(w);
                }
        }
        if (m < best_m) {
            best_m = m;
            best = s;
        }
    }
    return best;
}

// Parent-pointer nearest common ancestor.
inline Vid nca_oracle(const std::vector<Vid>& parent, const std::vector<std::uint32_t>& depth,
                      Vid u, Vid v)
{
    while (depth[u] > depth[v])
        u = parent[u];
    while (depth[v] > depth[u])
        v = parent[v];
    while (u != v) {
        u = parent[u];
        v = parent[v];
    }
    return u;
}

// Quadrangle condition: for d(u,z)=k+1 with v,w ~ z at distance k from u,
// a unique common neighbor of v,w sits at distance k-1.
inline bool quadrangle_condition_check(const PortedGraph& g, const Dists& d)
{
    const size_t n = g.num_vertices();
    for (Vid u = 0; u < n; ++u)
        for (Vid z = 0; z < n; ++z) {
            if (d[u][z] < 2)
                continue;
            const std::uint32_t k = d[u][z] - 1;
            const auto& nz = g.neighbors(z);
            for (size_t i = 0; i < nz.size(); ++i)
                for (size_t j = i + 1; j < nz.size(); ++j) {
                    Vid v = nz[i], w = nz[j];
                    if (d[u][v] != k || d[u][w] != k)
                        continue;
                    size_t count = 0;
                    for (Vid x : g.neighbors(v))
                        if (x != z && d[u][x] == k - 1 && g.has_edge(x, w))
                            ++count;
                    if (count != 1)
                        return false;
                }
        }
    return true;
}

// Standard corpus from the verification plan. `max_n` filters by size.
struct CorpusEntry {
    std::string name;
    PortedGraph g;
};

inline std::vector<CorpusEntry> standard_corpus(size_t max_n = 2048)
{
    std::vector<CorpusEntry> out;
    auto add = [&](std::string name, PortedGraph g) {
        if (g.num_vertices() <= max_n)
            out.push_back({std::move(name), std::move(g)});
    };
    for (std::uint32_t n : {15u, 127u, 1023u})
        add("tree" + std::to_string(n), gen_tree(n, n));
    for (std::uint32_t s : {4u, 5u, 6u, 7u, 8u, 12u, 16u, 20u, 24u, 28u, 32u})
        add("grid" + std::to_string(s) + "x" + std::to_string(s), gen_grid(s, s));
    for (std::uint32_t a : {3u, 5u, 9u})
        for (std::uint32_t b : {3u, 5u, 9u})
            add("K1," + std::to_string(a) + "xK1," + std::to_string(b),
                gen_tree_product(make_star(a), make_star(b)));
    add("K1,3xP9", gen_tree_product(make_star(3), make_path(9)));
    {
        PortedGraph base = gen_grid(24, 24);
        for (std::uint64_t seed = 1; seed <= 10; ++seed)
            add("convex24_" + std::to_string(seed), gen_convex_sub(base, seed, 3));
    }
    return out;
}

// Small slice for fast unit tests.
inline std::vector<CorpusEntry> small_corpus()
{
    std::vector<CorpusEntry> out;
    out.push_back({"p5", make_path(5)});
    out.push_back({"grid3", gen_grid(3, 3)});
    out.push_back({"grid4x3", gen_grid(4, 3)});
    out.push_back({"tree15", gen_tree(15, 15)});
    out.push_back({"tree33", gen_tree(33, 7)});
    out.push_back({"K13xP3", gen_tree_product(make_star(3), make_path(3))});
    out.push_back({"K13xK15", gen_tree_product(make_star(3), make_star(5))});
    out.push_back({"convex12_1", gen_convex_sub(gen_grid(12, 12), 1, 3)});
    out.push_back({"convex12_2", gen_convex_sub(gen_grid(12, 12), 2, 3)});
    return out;
}

} // namespace cfml::testing
