#include "cfml/generators.hpp"

#include <algorithm>

namespace cfml {

PortedGraph gen_tree(std::uint32_t n, std::uint64_t seed)
{
    SplitXorRng rng(seed);
    std::vector<std::pair<Vid, Vid>> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    for (Vid i = 1; i < n; ++i)
        edges.emplace_back(static_cast<Vid>(rng.below(i)), i);
    return assign_ports(n, edges);
}

PortedGraph gen_grid(std::uint32_t w, std::uint32_t h)
{
    std::vector<std::pair<Vid, Vid>> edges;
    for (Vid r = 0; r < h; ++r)
        for (Vid c = 0; c < w; ++c) {
            Vid v = r * w + c;
            if (c + 1 < w)
                edges.emplace_back(v, v + 1);
            if (r + 1 < h)
                edges.emplace_back(v, v + w);
        }
    return assign_ports(static_cast<size_t>(w) * h, edges);
}

PortedGraph gen_tree_product(const PortedGraph& t1, const PortedGraph& t2)
{
    const size_t n1 = t1.num_vertices(), n2 = t2.num_vertices();
    std::vector<std::pair<Vid, Vid>> edges;
    edges.reserve(t1.num_edges() * n2 + t2.num_edges() * n1);
    for (auto [a, ap] : t1.edges())
        for (Vid b = 0; b < n2; ++b)
            edges.emplace_back(a * n2 + b, ap * n2 + b);
    for (auto [b, bp] : t2.edges())
        for (Vid a = 0; a < n1; ++a)
            edges.emplace_back(a * n2 + b, a * n2 + bp);
    return assign_ports(n1 * n2, edges);
}

PortedGraph gen_convex_sub(const PortedGraph& g, std::uint64_t seed, std::uint32_t rounds)
{
    SplitXorRng rng(seed);
    const size_t n = g.num_vertices();
    std::vector<char> keep(n, 1);
    size_t kept = n;
    for (std::uint32_t r = 0; r < rounds; ++r) {
        auto [u, v] = g.edges()[rng.below(g.num_edges())];
        if (rng.below(2) == 1)
            std::swap(u, v);
        DistanceVector du = bfs_distances(g, u);
        DistanceVector dv = bfs_distances(g, v);
        size_t inter = 0;
        for (Vid x = 0; x < n; ++x)
            if (keep[x] && du[x] < dv[x])
                ++inter;
        if (inter == 0)
            continue; // would empty the set; skip this round
        for (Vid x = 0; x < n; ++x)
            if (keep[x] && du[x] >= dv[x])
                keep[x] = 0;
        kept = inter;
    }
    // relabel kept vertices by ascending original id
    std::vector<Vid> newid(n, kNoVertex);
    Vid next = 0;
    for (Vid x = 0; x < n; ++x)
        if (keep[x])
            newid[x] = next++;
    std::vector<std::pair<Vid, Vid>> edges;
    for (auto [a, b] : g.edges())
        if (keep[a] && keep[b])
            edges.emplace_back(newid[a], newid[b]);
    return assign_ports(kept, edges);
}

PortedGraph make_path(std::uint32_t n)
{
    std::vector<std::pair<Vid, Vid>> edges;
    for (Vid i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return assign_ports(n, edges);
}

PortedGraph make_star(std::uint32_t leaves)
{
    std::vector<std::pair<Vid, Vid>> edges;
    for (Vid i = 1; i <= leaves; ++i)
        edges.emplace_back(0, i);
    return assign_ports(leaves + 1, edges);
}

} // namespace cfml
