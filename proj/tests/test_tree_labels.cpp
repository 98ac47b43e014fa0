#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "cfml/generators.hpp"
#include "cfml/tree_labels.hpp"
#include "oracle_utils.hpp"

using namespace cfml;
namespace to = cfml::testing;

namespace {

// tree graph -> labeled tree with identity host ids and real host ports
LabeledTree from_tree_graph(const PortedGraph& g)
{
    std::vector<Vid> verts(g.num_vertices());
    std::iota(verts.begin(), verts.end(), 0);
    LabeledTree t(std::move(verts));
    for (auto [u, v] : g.edges())
        t.add_edge(u, v, g.port(u, v), g.port(v, u));
    return t;
}

size_t length_bound(size_t n)
{
    return static_cast<size_t>(std::ceil(std::log2(static_cast<double>(n)))) + 1;
}

} // namespace

TEST_CASE("tree distance labels on a path")
{
    PortedGraph p3 = make_path(3);
    auto labels = tree_dist_encode(from_tree_graph(p3));
    // centroid is vertex 1; every label ends with (self, 0)
    REQUIRE(labels[0].entries.size() == 2);
    CHECK(labels[0].entries[0].separator == 1);
    CHECK(labels[0].entries[0].dist == 1);
    CHECK(labels[0].entries[1].separator == 0);
    CHECK(labels[0].entries[1].dist == 0);

    CHECK(tree_dist_decode(labels[0], labels[2]) == 2);
    CHECK(tree_dist_decode(labels[1], labels[1]) == 0);
}

TEST_CASE("single vertex tree")
{
    LabeledTree t(std::vector<Vid>{7});
    auto labels = tree_dist_encode(t);
    REQUIRE(labels.size() == 1);
    REQUIRE(labels[0].entries.size() == 1);
    CHECK(labels[0].entries[0].separator == 7);
    CHECK(labels[0].entries[0].dist == 0);
}

TEST_CASE("random trees: decode equals BFS, length bounded")
{
    for (std::uint32_t n : {2u, 3u, 17u, 64u, 255u, 1023u}) {
        PortedGraph g = gen_tree(n, n * 31 + 1);
        auto labels = tree_dist_encode(from_tree_graph(g));
        auto d = to::all_pairs_oracle(g);
        for (Vid u = 0; u < n; ++u) {
            CHECK(labels[u].entries.size() <= length_bound(n));
            CHECK(labels[u].entries.back().separator == u);
            for (Vid v = 0; v < n; ++v)
                CHECK(tree_dist_decode(labels[u], labels[v]) == d[u][v]);
        }
    }
}

TEST_CASE("labels from different trees share no separator")
{
    auto la = tree_dist_encode(from_tree_graph(make_path(3)));
    LabeledTree other(std::vector<Vid>{10, 11, 12});
    other.add_edge(0, 1, 1, 1);
    other.add_edge(1, 2, 2, 1);
    auto lb = tree_dist_encode(other);
    CHECK_THROWS_AS(tree_dist_decode(la[0], lb[0]), NoCommonSeparatorError);
}

TEST_CASE("tree routing labels walk shortest paths")
{
    PortedGraph p3 = make_path(3);
    auto rl = tree_rout_encode(from_tree_graph(p3));
    CHECK(tree_rout_decode(rl[0], rl[2]) == p3.port(0, 1));
    CHECK(tree_rout_decode(rl[1], rl[1]) == 0);

    for (std::uint32_t n : {2u, 31u, 64u}) {
        PortedGraph g = gen_tree(n, n + 5);
        auto rl2 = tree_rout_encode(from_tree_graph(g));
        auto d = to::all_pairs_oracle(g);
        for (Vid s = 0; s < n; ++s)
            for (Vid t = 0; t < n; ++t) {
                // iterated decode reaches t in exactly d(s,t) hops
                Vid cur = s;
                std::uint32_t hops = 0;
                while (cur != t) {
                    Port p = tree_rout_decode(rl2[cur], rl2[t]);
                    REQUIRE(p != 0);
                    Vid nxt = g.neighbor_by_port(cur, p);
                    CHECK(d[nxt][t] + 1 == d[cur][t]); // strict progress
                    cur = nxt;
                    ++hops;
                    REQUIRE(hops <= n);
                }
                CHECK(hops == d[s][t]);
                CHECK(tree_rout_decode(rl2[t], rl2[t]) == 0);
            }
    }
}

TEST_CASE("ncad decoding on rooted trees")
{
    // random tree rooted at 0: depth-annotate, compare with the climb oracle
    for (std::uint32_t n : {2u, 25u, 100u}) {
        PortedGraph g = gen_tree(n, 3 * n);
        auto labels = tree_dist_encode(from_tree_graph(g));
        std::vector<Vid> parent(n, kNoVertex);
        std::vector<std::uint32_t> depth(n, 0);
        DistanceVector d0 = bfs_distances(g, 0);
        for (Vid v = 1; v < n; ++v)
            for (Vid w : g.neighbors(v))
                if (d0[w] + 1 == d0[v])
                    parent[v] = w;
        for (Vid v = 0; v < n; ++v)
            depth[v] = d0[v];
        for (Vid v = 0; v < n; ++v)
            labels[v].depth = static_cast<std::int32_t>(depth[v]);

        for (Vid u = 0; u < n; ++u) {
            CHECK(ncad_decode(labels[u], labels[u]) == depth[u]);
            CHECK(ncad_decode(labels[0], labels[u]) == 0);
            for (Vid v = 0; v < n; ++v) {
                Vid nca = to::nca_oracle(parent, depth, u, v);
                CHECK(ncad_decode(labels[u], labels[v]) == depth[nca]);
                // formula consistency
                CHECK(2 * ncad_decode(labels[u], labels[v]) ==
                      depth[u] + depth[v] - tree_dist_decode(labels[u], labels[v]));
            }
        }
    }
}
